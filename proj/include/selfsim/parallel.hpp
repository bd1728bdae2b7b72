// Copyright 2026 The selfsim Authors
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

#ifndef SELFSIM_PARALLEL_HPP_
#define SELFSIM_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace selfsim {

// Worker count: SELFSIM_THREADS when set to a positive integer, otherwise
// the hardware concurrency (at least 1).
int WorkerCount();

// Runs fn(i) for i in [0, n) on up to WorkerCount() threads.  The first
// exception thrown by any task is rethrown after all workers finish.
void ParallelFor(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace selfsim

#endif  // SELFSIM_PARALLEL_HPP_
