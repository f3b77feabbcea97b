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


#ifndef QISO_TOOLS_SUITES_HPP
#define QISO_TOOLS_SUITES_HPP

#include <string>
#include <vector>

#include "certificate.hpp"
#include "inputs.hpp"

namespace qiso::cli {

/// Suite names accepted by `qiso verify`, in the order `all` runs them.
const std::vector<std::string> &suite_names();

/// Appends the named suite's checks to `cert`. Throws std::invalid_argument for an unknown name.
void run_suite(const std::string &name, const SuiteInputs &in, Certificate &cert);

}  // namespace qiso::cli

#endif
