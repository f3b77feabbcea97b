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


#include "certificate.hpp"

#include <algorithm>

#ifndef QISO_GIT_DESCRIBE
#define QISO_GIT_DESCRIBE "unknown"
#endif

namespace qiso::cli {

Certificate::Certificate(std::string command, nlohmann::json params)
    : command_(std::move(command)), params_(std::move(params)) {}

std::size_t Certificate::failed() const {
    return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [](const Check &c) { return !c.passed; }));
}

nlohmann::json Certificate::to_json() const {
    nlohmann::json checks = nlohmann::json::array();
    nlohmann::json timing = nlohmann::json::object();
    double total = 0;
    for (const auto &c : checks_) {
        checks.push_back({{"name", c.name}, {"claim", c.claim}, {"status", c.passed ? "pass" : "fail"}, {"details", c.details}});
        timing[c.name] = c.seconds;
        total += c.seconds;
    }
    return {
        {"schema_version", kCertificateSchemaVersion},
        {"git_describe", git_describe()},
        {"command", command_},
        {"params", params_},
        {"checks", std::move(checks)},
        {"summary", {{"checks", checks_.size()}, {"failed", failed()}}},
        {"timing", {{"checks", std::move(timing)}, {"total_seconds", total}}},
    };
}

std::string Certificate::to_text() const {
    std::string out;
    for (const auto &c : checks_) {
        out += c.passed ? "PASS " : "FAIL ";
        out += c.name + ": " + c.claim;
        if (!c.passed) out += "\n     " + c.details.dump();
        out += "\n";
    }
    out += std::to_string(checks_.size() - failed()) + "/" + std::to_string(checks_.size()) + " checks passed\n";
    return out;
}

std::string git_describe() { return QISO_GIT_DESCRIBE; }

}  // namespace qiso::cli
