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

#include "conefree/parallel.h"

#include <omp.h>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <string_view>

namespace conefree {

std::size_t configure_threads_from_env() {
  const auto available = static_cast<std::size_t>(omp_get_num_procs());
  std::size_t threads = available;
  if (const char* env = std::getenv(kThreadsEnvVar)) {
    const std::string_view text(env);
    std::size_t cap = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), cap);
    if (res.ec == std::errc() && cap > 0) threads = std::min(threads, cap);
  }
  set_num_threads(threads);
  return threads;
}

void set_num_threads(std::size_t n) {
  omp_set_dynamic(0);
  omp_set_num_threads(static_cast<int>(std::max<std::size_t>(n, 1)));
}

std::size_t max_threads() {
  return static_cast<std::size_t>(omp_get_max_threads());
}

}  // namespace conefree
