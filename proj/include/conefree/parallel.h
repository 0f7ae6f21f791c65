// Copyright 2026 The conefree Authors
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

#ifndef CONEFREE_PARALLEL_H_
#define CONEFREE_PARALLEL_H_

#include <cstddef>

namespace conefree {

// Environment variable that caps the OpenMP worker count.
inline constexpr const char* kThreadsEnvVar = "CONEFREE_THREADS";

// Applies CONEFREE_THREADS (if set to a positive integer) as an upper bound
// on the number of threads, never exceeding the available parallelism.
// Returns the thread count in effect.
std::size_t configure_threads_from_env();

void set_num_threads(std::size_t n);
std::size_t max_threads();

}  // namespace conefree

#endif  // CONEFREE_PARALLEL_H_
