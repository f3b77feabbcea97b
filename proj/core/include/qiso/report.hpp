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


#ifndef QISO_REPORT_HPP
#define QISO_REPORT_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qiso {

/// Outcome of one exhaustive check: how many cases were examined and which failed.
struct CheckReport {
    static constexpr std::size_t kMaxListed = 16;

    CheckReport() = default;
    explicit CheckReport(std::string check_name) : name(std::move(check_name)) {}

    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t failed = 0;
    /// Descriptions of the first kMaxListed failures.
    std::vector<std::string> failures;

    bool passed() const { return failed == 0; }

    template <typename Describe>
    void record(bool ok, Describe &&describe) {
        checked++;
        if (ok) return;
        failed++;
        if (failures.size() < kMaxListed) failures.push_back(describe());
    }
    /// Appends counts and listed failures of `other`.
    void merge(const CheckReport &other);
    std::string summary() const;
};

}  // namespace qiso

#endif
