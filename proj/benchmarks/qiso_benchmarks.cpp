// Copyright 2026 The qiso Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include "qiso/gamma1.hpp"
#include "qiso/homcount.hpp"
#include "qiso/independence.hpp"
#include "qiso/isomorphism.hpp"
#include "qiso/magic.hpp"
#include "qiso/polynomial.hpp"
#include "qiso/roots.hpp"

namespace {

using namespace qiso;

struct Fixture {
    std::vector<Line> lines = build_root_lines();
    OrbitPartition cells = compute_orbits(lines);
    Graph e8 = build_orthogonality_graph(lines);
    Graph gw = build_Gw(lines, cells, WChoice::standard());
};

const Fixture &fixture() {
    static const Fixture f;
    return f;
}

void BM_BuildGraphs(benchmark::State &state) {
    for (auto _ : state) {
        auto lines = build_root_lines();
        auto cells = compute_orbits(lines);
        benchmark::DoNotOptimize(build_Gw(lines, cells, WChoice::standard()));
    }
}
BENCHMARK(BM_BuildGraphs)->Unit(benchmark::kMillisecond);

void BM_CharPoly(benchmark::State &state) {
    auto a = fixture().e8.adjacency_matrix();
    for (auto _ : state) benchmark::DoNotOptimize(char_poly(a));
}
BENCHMARK(BM_CharPoly)->Unit(benchmark::kMillisecond);

void BM_AlphaE8(benchmark::State &state) {
    for (auto _ : state) benchmark::DoNotOptimize(independence_number(fixture().e8, AlphaMode::exact));
}
BENCHMARK(BM_AlphaE8)->Unit(benchmark::kMillisecond);

void BM_AlphaGw(benchmark::State &state) {
    for (auto _ : state) benchmark::DoNotOptimize(independence_number(fixture().gw, AlphaMode::exact));
}
BENCHMARK(BM_AlphaGw)->Unit(benchmark::kMillisecond);

void BM_NonIsomorphism(benchmark::State &state) {
    for (auto _ : state) benchmark::DoNotOptimize(are_isomorphic(fixture().e8, fixture().gw));
}
BENCHMARK(BM_NonIsomorphism)->Unit(benchmark::kMillisecond);

void BM_MagicBuild(benchmark::State &state) {
    const auto &f = fixture();
    for (auto _ : state) benchmark::DoNotOptimize(build_magic_unitary(f.lines, f.cells, WChoice::standard()));
}
BENCHMARK(BM_MagicBuild)->Unit(benchmark::kMillisecond);

void BM_Intertwiner(benchmark::State &state) {
    const auto &f = fixture();
    auto u = build_magic_unitary(f.lines, f.cells, WChoice::standard());
    for (auto _ : state) benchmark::DoNotOptimize(verify_intertwiner(u, f.e8, f.gw));
}
BENCHMARK(BM_Intertwiner)->Unit(benchmark::kMillisecond);

void BM_ProductRelations(benchmark::State &state) {
    const auto &f = fixture();
    auto u = build_magic_unitary(f.lines, f.cells, WChoice::standard());
    for (auto _ : state) benchmark::DoNotOptimize(verify_product_relations(u, f.e8, f.gw));
}
BENCHMARK(BM_ProductRelations)->Unit(benchmark::kSecond)->Iterations(1);

void BM_Gamma1(benchmark::State &state) {
    const auto &f = fixture();
    for (auto _ : state) benchmark::DoNotOptimize(build_gamma1(f.lines, f.cells));
}
BENCHMARK(BM_Gamma1)->Unit(benchmark::kMillisecond);

void BM_HomCycle(benchmark::State &state) {
    Graph c = cycle_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(hom_count(c, fixture().e8));
}
BENCHMARK(BM_HomCycle)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

void BM_HomProfile(benchmark::State &state) {
    const auto &f = fixture();
    for (auto _ : state) benchmark::DoNotOptimize(hom_profile_compare(f.e8, f.gw, static_cast<int>(state.range(0)), true));
}
BENCHMARK(BM_HomProfile)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
