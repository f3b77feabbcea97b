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


#ifndef QISO_PARALLEL_HPP
#define QISO_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace qiso {

/// Worker count: QISO_THREADS if set to a positive integer, otherwise the hardware concurrency.
unsigned thread_count();

/// Calls fn(i) for i in [0, n) on up to thread_count() threads. Indices are handed out in
/// increasing order; callers write results into per-index slots so output is schedule independent.
/// The first exception thrown by fn is rethrown after all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)> &fn);

}  // namespace qiso

#endif
