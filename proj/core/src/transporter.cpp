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


#include "qiso/transporter.hpp"

#include <stdexcept>

namespace qiso {

std::vector<GroupElementL> all_transporters(const Line &y, const Line &z) {
    std::vector<GroupElementL> out;
    for (const auto &g : enumerate_L()) {
        if (act_on_line(g, y) == z) out.push_back(g);
    }
    return out;
}

Transporter find_transporter(const Line &y, const Line &z) {
    auto all = all_transporters(y, z);
    if (all.empty()) {
        throw std::invalid_argument("no transporter: " + y.label() + " and " + z.label() + " lie in different orbits");
    }
    return {all.front()};
}

}  // namespace qiso
