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

#ifndef QISO_GRAPH_IO_HPP
#define QISO_GRAPH_IO_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qiso/graph.hpp"

namespace qiso {

/// Malformed input. `position()` is a byte offset for graph6 and a 1-based line number for DIMACS.
class FormatError : public std::runtime_error {
   public:
    FormatError(const std::string &what, std::size_t position)
        : std::runtime_error(what), position_(position) {}
    std::size_t position() const { return position_; }

   private:
    std::size_t position_;
};

/// graph6: size header, then the upper triangle column by column, six bits per byte offset by 63.
std::string graph6_encode(const Graph &g);
/// Accepts an optional ">>graph6<<" header and trailing newline.
Graph graph6_decode(std::string_view text);

/// DIMACS edge format: "p edge N M" followed by M lines "e u v" with 1-based vertices.
std::string dimacs_encode(const Graph &g);
Graph dimacs_decode(std::string_view text);

/// Reads a graph file, choosing the format from the extension (.dimacs/.col/.dim) or content.
Graph read_graph_file(const std::string &path);
void write_graph_file(const std::string &path, const Graph &g, bool dimacs);

}  // namespace qiso

#endif
