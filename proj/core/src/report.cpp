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


#include "qiso/report.hpp"

namespace qiso {

void CheckReport::merge(const CheckReport &other) {
    checked += other.checked;
    failed += other.failed;
    for (const auto &f : other.failures) {
        if (failures.size() >= kMaxListed) break;
        failures.push_back(f);
    }
}

std::string CheckReport::summary() const {
    std::string s = name + ": " + std::to_string(checked - failed) + "/" + std::to_string(checked) + " passed";
    if (!failures.empty()) s += "; first failure: " + failures.front();
    return s;
}

}  // namespace qiso
