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

#ifndef QISO_TRANSPORTER_HPP
#define QISO_TRANSPORTER_HPP

#include <vector>

#include "qiso/line.hpp"
#include "qiso/pauli.hpp"

namespace qiso {

/// A Pauli word M with M y = +-z.
struct Transporter {
    GroupElementL element;

    PauliWord word() const { return element.word(); }
};

/// Every g in L with g y = +-z, in lexicographic order. Empty when y and z lie in different orbits.
std::vector<GroupElementL> all_transporters(const Line &y, const Line &z);

/// The lexicographically least transporter from y to z.
/// Throws std::invalid_argument when y and z lie in different L-orbits.
Transporter find_transporter(const Line &y, const Line &z);

}  // namespace qiso

#endif
