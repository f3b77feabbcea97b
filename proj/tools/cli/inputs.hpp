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


#ifndef QISO_TOOLS_INPUTS_HPP
#define QISO_TOOLS_INPUTS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qiso/graph.hpp"
#include "qiso/isomorphism.hpp"
#include "qiso/line.hpp"
#include "qiso/magic.hpp"
#include "qiso/roots.hpp"
#include "qiso/switching.hpp"

namespace qiso::cli {

/// Unreadable or malformed user input; maps to exit code 2.
class InputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Everything the verification suites consume. Defaults reproduce the standard construction;
/// each field can be replaced from a file to audit other data.
struct SuiteInputs {
    std::vector<Line> lines;
    OrbitPartition cells;
    WChoice w;
    Graph e8;
    Graph gw;
    std::optional<GmPartition> gm;
    IsoOptions iso;
    std::uint64_t seed = 1;

    /// The supplied magic unitary, or the one built from cells and w on first use.
    const MagicUnitary &magic() const;
    void set_magic(MagicUnitary u) { magic_ = std::move(u); }
    /// The supplied switching partition, or C_i = V_i (i < 15), D = V_15.
    GmPartition switching_partition() const;

   private:
    mutable std::optional<MagicUnitary> magic_;
};

SuiteInputs standard_inputs();

std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, std::string_view text);

/// One representative per line: eight integer coordinates. '#' starts a comment.
WChoice parse_wchoice(std::string_view text);
/// One cell per line: whitespace-separated vertex ids. '#' starts a comment.
OrbitPartition parse_cells(std::string_view text, int n);
std::string format_cells(const OrbitPartition &cells);

/// "v15" or a partition file.
GmPartition load_gm_partition(const std::string &source, const OrbitPartition &cells);

}  // namespace qiso::cli

#endif
