// Copyright 2026 The SwarmVQC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <functional>

namespace swarmvqc {

/// Worker count from SWARMVQC_THREADS (unset or 0 = hardware concurrency).
[[nodiscard]] std::size_t default_thread_count();

/**
 * Runs body(i) for i in [0, n) on up to `threads` workers (0 = default).
 * Each index is visited exactly once; callers write results into
 * per-index slots and reduce in index order afterwards. The first
 * exception thrown by any body is rethrown on the calling thread.
 */
void parallel_for(std::size_t n, const std::function<void(std::size_t)> &body,
                  std::size_t threads = 0);

} // namespace swarmvqc
