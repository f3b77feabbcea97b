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


#ifndef QISO_TOOLS_CERTIFICATE_HPP
#define QISO_TOOLS_CERTIFICATE_HPP

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

namespace qiso::cli {

inline constexpr int kCertificateSchemaVersion = 1;

struct Check {
    std::string name;
    std::string claim;
    bool passed = false;
    nlohmann::json details = nlohmann::json::object();
    double seconds = 0;
};

/// Machine-readable record of one command run. Everything except the "timing" block is a
/// deterministic function of the command, its parameters and its inputs.
class Certificate {
   public:
    Certificate(std::string command, nlohmann::json params);

    /// Runs `body`, which fills the details and returns pass/fail; an exception thrown by `body`
    /// is recorded as a failure with its message.
    template <typename Body>
    Check &run(const std::string &name, const std::string &claim, Body &&body) {
        Check check{name, claim};
        auto start = std::chrono::steady_clock::now();
        try {
            check.passed = body(check.details);
        } catch (const std::exception &e) {
            check.passed = false;
            check.details["error"] = e.what();
        }
        check.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        checks_.push_back(std::move(check));
        return checks_.back();
    }

    const std::vector<Check> &checks() const { return checks_; }
    std::size_t failed() const;
    bool passed() const { return failed() == 0; }

    nlohmann::json to_json() const;
    /// One "PASS name: claim" or "FAIL name: claim (details)" line per check.
    std::string to_text() const;

   private:
    std::string command_;
    nlohmann::json params_;
    std::vector<Check> checks_;
};

std::string git_describe();

}  // namespace qiso::cli

#endif
