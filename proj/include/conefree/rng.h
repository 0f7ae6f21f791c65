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

#ifndef CONEFREE_RNG_H_
#define CONEFREE_RNG_H_

#include <cstdint>
#include <random>

namespace conefree {

// Portable seeded generator. The engine is std::mt19937_64, whose output
// sequence is fixed by the standard; the derived variates below avoid the
// implementation-defined std:: distributions so streams reproduce across
// compilers and standard libraries:
//
//   uniform01()      (next() >> 11) * 2^-53, in [0, 1)
//   uniform_below(n) rejection on the top of the 64-bit range, unbiased
//   normal()         Marsaglia polar method on 2 u - 1, u = uniform01();
//                    each accepted pair yields two variates, the second
//                    cached for the next call
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  double uniform01();
  std::uint64_t uniform_below(std::uint64_t bound);
  double normal();

 private:
  std::mt19937_64 engine_;
  double cached_normal_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace conefree

#endif  // CONEFREE_RNG_H_
