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


#ifndef QISO_MAGIC_IO_HPP
#define QISO_MAGIC_IO_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qiso/line.hpp"
#include "qiso/magic.hpp"

namespace qiso {

inline constexpr int kMagicFormatVersion = 1;

class MagicFormatError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// JSON document:
///   {"format": "qiso-magic-unitary", "version": 1, "dim": d, "vertices": n,
///    "cells": [[v, ...], ...], "w": [[8 ints], ...] (optional),
///    "blocks": [[{"y": v, "z": v, "transporter": "XIZ", "denominator": q,
///                 "numerators": [d*d ints, row-major]}, ...], ...]}
/// Block i lists its entries row by row in cell order. Numerators are over the entry's least
/// common denominator.
std::string magic_to_json(const MagicUnitary &u);

/// Inverse of magic_to_json. Throws MagicFormatError on malformed or inconsistent input; the
/// axioms are not checked here (use verify_magic_axioms).
MagicUnitary magic_from_json(std::string_view text);

}  // namespace qiso

#endif
