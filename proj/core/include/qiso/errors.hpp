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

#ifndef QISO_ERRORS_HPP
#define QISO_ERRORS_HPP

#include <stdexcept>

namespace qiso {

/// A construction failed its own post-condition check. Indicates a bug or corrupted input.
class VerificationError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace qiso

#endif
