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


#include <gtest/gtest.h>

#include "cli_runner.hpp"
#include "qiso/graph_io.hpp"
#include "qiso/roots.hpp"
#include "qiso/switching.hpp"

namespace qiso {
namespace {

namespace fs = std::filesystem;
using testing::run_qiso;

class Cli : public ::testing::Test {
   protected:
    void SetUp() override { dir = testing::make_scratch(::testing::UnitTest::GetInstance()->current_test_info()->name()); }
    void TearDown() override { fs::remove_all(dir); }
    std::string out() const { return " --out " + (dir / "out").string(); }
    fs::path dir;
};

TEST_F(Cli, BuildE8WritesGraphAndLabels) {
    auto r = run_qiso("build e8" + out(), dir);
    ASSERT_EQ(r.exit_code, 0) << r.output;
    Graph g = read_graph_file((dir / "out" / "e8.g6").string());
    EXPECT_EQ(g, build_orthogonality_graph(build_root_lines()));
    auto labels = testing::read_json(dir / "out" / "e8.labels.json");
    EXPECT_EQ(labels["labels"].size(), 120u);
    EXPECT_EQ(labels["cells"].size(), 15u);
}

TEST_F(Cli, BuildSwitchedFlippedGraph) {
    auto r = run_qiso("build switched --base gw --partition v15 --format dimacs" + out(), dir);
    ASSERT_EQ(r.exit_code, 0) << r.output;
    auto lines = build_root_lines();
    auto cells = compute_orbits(lines);
    Graph expected = gm_switch(build_Gw(lines, cells, WChoice::standard()), v15_partition(cells));
    EXPECT_EQ(read_graph_file((dir / "out" / "gw-switched.dimacs").string()), expected);
    auto labels = testing::read_json(dir / "out" / "gw-switched.labels.json");
    EXPECT_EQ(labels["partition"]["d"].size(), 8u);
    EXPECT_EQ(labels["w_choice"].size(), 15u);
}

TEST_F(Cli, BuildGamma1LabelsAreWordSets) {
    auto r = run_qiso("build gamma1" + out(), dir);
    ASSERT_EQ(r.exit_code, 0) << r.output;
    auto labels = testing::read_json(dir / "out" / "gamma1.labels.json");
    EXPECT_EQ(labels["labels"][0], (nlohmann::json{"III", "IIX", "IZI", "IZX", "ZII", "ZIX", "ZZI", "ZZX"}));
}

TEST_F(Cli, UsageErrorsExitWithTwo) {
    EXPECT_EQ(run_qiso("", dir).exit_code, 2);
    EXPECT_EQ(run_qiso("frobnicate", dir).exit_code, 2);
    EXPECT_EQ(run_qiso("build octagon", dir).exit_code, 2);
    EXPECT_EQ(run_qiso("verify nonsense" + out(), dir).exit_code, 2);
    EXPECT_EQ(run_qiso("build gw --w-choice " + (dir / "missing.txt").string() + out(), dir).exit_code, 2);
    EXPECT_EQ(run_qiso("homcount e8 gw --nmax 9" + out(), dir).exit_code, 2);
}

TEST_F(Cli, MalformedPartitionReportsLine) {
    testing::write_text(dir / "bad.txt", "C 0 1 2\nC 3 4\nX 5\n");
    auto r = run_qiso("verify switching --partition " + (dir / "bad.txt").string() + out(), dir);
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_NE(r.output.find("line 3"), std::string::npos) << r.output;
}

TEST_F(Cli, MalformedChoiceReportsLine) {
    testing::write_text(dir / "w.txt", "1 -1 0 0 0 0 0 0\n1 0 -1 0 0 0 0\n");
    auto r = run_qiso("build gw --w-choice " + (dir / "w.txt").string() + out(), dir);
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_NE(r.output.find("line 2"), std::string::npos) << r.output;
}

TEST_F(Cli, VerifyWritesVersionedCertificate) {
    auto r = run_qiso("verify srg" + out(), dir);
    ASSERT_EQ(r.exit_code, 0) << r.output;
    auto cert = testing::read_json(dir / "out" / "verify-srg.json");
    EXPECT_EQ(cert["schema_version"], 1);
    EXPECT_EQ(cert["command"], "verify");
    EXPECT_EQ(cert["summary"]["failed"], 0);
    for (const auto &c : cert["checks"]) {
        EXPECT_FALSE(c["claim"].get<std::string>().empty());
        EXPECT_TRUE(cert["timing"]["checks"].contains(c["name"].get<std::string>()));
    }
}

TEST_F(Cli, CertificatesAreReproducibleUpToTiming) {
    ASSERT_EQ(run_qiso("verify gamma1" + out(), dir).exit_code, 0);
    auto first = testing::read_json(dir / "out" / "verify-gamma1.json");
    ASSERT_EQ(run_qiso("verify gamma1" + out(), dir).exit_code, 0);
    auto second = testing::read_json(dir / "out" / "verify-gamma1.json");
    first.erase("timing");
    second.erase("timing");
    EXPECT_EQ(first.dump(), second.dump());
}

TEST_F(Cli, FlippedEdgeFailsNamedCheck) {
    Graph e8 = build_orthogonality_graph(build_root_lines()).with_edge_flipped(0, 57);
    write_graph_file((dir / "e8.g6").string(), e8, false);
    auto r = run_qiso("verify srg --e8 " + (dir / "e8.g6").string() + out(), dir);
    EXPECT_EQ(r.exit_code, 1);
    auto failed = testing::failed_checks(testing::read_json(dir / "out" / "verify-srg.json"));
    EXPECT_NE(std::find(failed.begin(), failed.end(), "srg.e8"), failed.end());
}

TEST_F(Cli, WrongSizedGraphIsAnInputError) {
    testing::write_text(dir / "small.g6", "IheA@GUAo\n");
    EXPECT_EQ(run_qiso("verify srg --gw " + (dir / "small.g6").string() + out(), dir).exit_code, 2);
}

TEST_F(Cli, HomcountOfIdenticalInputsIsEqual) {
    auto r = run_qiso("homcount e8 e8 --nmax 4 --include-nonplanar" + out(), dir);
    ASSERT_EQ(r.exit_code, 0) << r.output;
    auto cert = testing::read_json(dir / "out" / "homcount.json");
    EXPECT_EQ(cert["checks"][0]["details"]["differences"], 0);
    EXPECT_TRUE(fs::exists(dir / "out" / "homprofile.txt"));
}

TEST_F(Cli, HomcountDistinguisherSeparatesComplements) {
    auto r = run_qiso("homcount e8 gw --nmax 3 --distinguisher" + out(), dir);
    ASSERT_EQ(r.exit_code, 0) << r.output;
    auto cert = testing::read_json(dir / "out" / "homcount.json");
    EXPECT_EQ(cert["checks"][1]["name"], "hom.complement_k9");
    EXPECT_EQ(cert["checks"][1]["details"]["g1"], "0");
    EXPECT_NE(cert["checks"][1]["details"]["g2"], "0");
}

}  // namespace
}  // namespace qiso
