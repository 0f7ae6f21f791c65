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

#include "conefree/instance_gen.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include <fmt/format.h>

#include "conefree/cones.h"
#include "conefree/rng.h"
#include "conefree/uv_factor.h"

namespace conefree {

std::string_view to_string(ConeKind kind) {
  return kind == ConeKind::kLp ? "lp" : "socp4";
}

std::optional<ConeKind> parse_cone_kind(std::string_view text) {
  if (text == "lp") return ConeKind::kLp;
  if (text == "socp4") return ConeKind::kSocp4;
  return std::nullopt;
}

std::size_t GenSpec::target_nnz() const {
  return static_cast<std::size_t>(std::llround(
      static_cast<double>(m) * static_cast<double>(n) * density));
}

void GenSpec::validate() const {
  if (m == 0 || n == 0) throw std::invalid_argument("m and n must be >= 1");
  if (!(density > 0.0 && density <= 1.0)) {
    throw std::invalid_argument(
        fmt::format("density {} outside (0, 1]", density));
  }
  if (cone_kind == ConeKind::kSocp4 && n % 4 != 0) {
    throw std::invalid_argument(
        fmt::format("socp4 needs n divisible by 4, got n={}", n));
  }
  const std::size_t k = target_nnz();
  if (k < 1) {
    throw std::invalid_argument("m * n * density rounds to zero nonzeros");
  }
  if (k > m * n) {
    throw std::invalid_argument(fmt::format(
        "{} nonzeros requested but only {} positions exist", k, m * n));
  }
}

GeneratedInstance generate(const GenSpec& spec) {
  spec.validate();
  const std::size_t m = spec.m, n = spec.n;
  const std::uint64_t total = static_cast<std::uint64_t>(m) * n;
  const std::size_t k = spec.target_nnz();
  Rng rng(spec.seed);

  // Floyd's algorithm: k distinct linear positions p = col * m + row.
  std::vector<std::uint64_t> positions;
  positions.reserve(k);
  {
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(2 * k);
    for (std::uint64_t j = total - k; j < total; ++j) {
      const std::uint64_t t = rng.uniform_below(j + 1);
      const std::uint64_t pick = chosen.insert(t).second ? t : j;
      if (pick == j) chosen.insert(j);
      positions.push_back(pick);
    }
  }
  // Column-major linear order is the canonical nonzero order.
  std::sort(positions.begin(), positions.end());

  GeneratedInstance out;
  ProblemInstance& p = out.problem;
  p.A.num_rows = m;
  p.A.num_cols = n;
  p.A.entries.reserve(k);
  for (std::uint64_t pos : positions) {
    double value = rng.normal();
    while (value == 0.0) value = rng.normal();
    p.A.entries.push_back(Triplet{static_cast<std::size_t>(pos % m),
                                  static_cast<std::size_t>(pos / m), value});
  }
  p.cones = spec.cone_kind == ConeKind::kLp ? ConeSpec::nonnegative(n)
                                            : ConeSpec::lorentz(4, n / 4);
  const ConeWorkview view(p.cones);
  const UVFactors f = build_uv(p.A);

  std::vector<double> x_dot(n);
  for (double& v : x_dot) v = rng.normal();
  out.x_hat = project_product(view, x_dot);
  // Same U (V' x) route the solver uses for its residual, so A x_hat - b is
  // exactly zero there.
  p.b = apply_U(f, apply_Vt(f, out.x_hat));

  if (spec.bounded_mode) {
    out.lambda_dot.resize(m);
    for (double& v : out.lambda_dot) v = rng.normal();
    std::vector<double> s_draw(n);
    for (double& v : s_draw) v = rng.normal();
    out.s_dot = project_product(view, s_draw);
    const std::vector<double> at_lambda =
        apply_V(f, apply_Ut(f, out.lambda_dot));
    p.c.resize(n);
    for (std::size_t j = 0; j < n; ++j) p.c[j] = out.s_dot[j] - at_lambda[j];
  } else {
    p.c.resize(n);
    for (double& v : p.c) v = rng.normal();
  }
  return out;
}

}  // namespace conefree
