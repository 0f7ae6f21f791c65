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

#ifndef CONEFREE_INSTANCE_GEN_H_
#define CONEFREE_INSTANCE_GEN_H_

// Random sparse LP / SOCP instances that are feasible by construction.
//
// Draw order from one Rng seeded with `seed` (fixed so instances reproduce):
//   1. nonzero positions, round(m n density) of them, uniformly without
//      replacement (Floyd's sampling over column-major linear positions)
//   2. one standard normal value per nonzero, in canonical order
//   3. x_dot ~ N(0, I_n);  x_hat = proj_K(x_dot);  b = A x_hat
//   4. bounded mode: lambda_dot ~ N(0, I_m), s_dot = proj_K(N(0, I_n)),
//      c = s_dot - A' lambda_dot
//      raw mode:     c ~ N(0, I_n)

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "conefree/problem.h"

namespace conefree {

enum class ConeKind { kLp, kSocp4 };

std::string_view to_string(ConeKind kind);
std::optional<ConeKind> parse_cone_kind(std::string_view text);

struct GenSpec {
  std::size_t m = 0;
  std::size_t n = 0;
  double density = 0.01;
  ConeKind cone_kind = ConeKind::kLp;
  std::uint64_t seed = 0;
  // Builds c from a dual-feasible witness so the optimal value is bounded.
  bool bounded_mode = true;

  std::size_t target_nnz() const;
  // Throws std::invalid_argument on a violated invariant.
  void validate() const;
};

struct GeneratedInstance {
  ProblemInstance problem;
  // Primal witness: A x_hat = b, x_hat in K.
  std::vector<double> x_hat;
  // Dual witness (bounded mode only): A' lambda_dot + c = s_dot in K.
  std::vector<double> lambda_dot;
  std::vector<double> s_dot;
};

GeneratedInstance generate(const GenSpec& spec);

}  // namespace conefree

#endif  // CONEFREE_INSTANCE_GEN_H_
