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

#ifndef CONEFREE_UV_FACTOR_H_
#define CONEFREE_UV_FACTOR_H_

// UV decomposition A = U V' with U U' and V V' diagonal.
//
// With the o nonzeros of A enumerated as (i_k, j_k, a_k), U is m x o with the
// single entry a_k at (i_k, k) and V is n x o with the single entry 1 at
// (j_k, k). Neither matrix is stored: every product reduces to a gather or a
// scatter-add over the nonzero list, and
//
//   (I + U U')^{-1} = diag(1 / (1 + sum_{k: i_k = i} a_k^2))
//   (I + V V')^{-1} = diag(1 / (1 + #{k: j_k = j}))
//
// are cached once as vectors.

#include <cstddef>
#include <span>
#include <vector>

#include "conefree/kernels.h"
#include "conefree/problem.h"

namespace conefree {

enum class NonzeroOrder {
  // Column-major, then row. Reproducible across runs and file round-trips.
  kCanonical,
  // Keep the triplet list's order as given.
  kAsGiven,
};

class UVFactors {
 public:
  std::size_t num_rows() const { return m_; }
  std::size_t num_cols() const { return n_; }
  std::size_t nnz() const { return val_.size(); }

  std::span<const std::size_t> row_of() const { return row_of_; }
  std::span<const std::size_t> col_of() const { return col_of_; }
  std::span<const double> val() const { return val_; }
  // Diagonal of (I + U U')^{-1}, length m.
  std::span<const double> fu_diag() const { return fu_diag_; }
  // Diagonal of (I + V V')^{-1}, length n.
  std::span<const double> fv_diag() const { return fv_diag_; }
  const kernels::GroupIndex& row_groups() const { return row_groups_; }
  const kernels::GroupIndex& col_groups() const { return col_groups_; }

  friend UVFactors build_uv(const TripletMatrix& a, NonzeroOrder order);

 private:
  std::size_t m_ = 0;
  std::size_t n_ = 0;
  std::vector<std::size_t> row_of_;
  std::vector<std::size_t> col_of_;
  std::vector<double> val_;
  std::vector<double> fu_diag_;
  std::vector<double> fv_diag_;
  kernels::GroupIndex row_groups_;
  kernels::GroupIndex col_groups_;
};

// `a` must pass validation (indices in range, no duplicates, nonzero values).
UVFactors build_uv(const TripletMatrix& a,
                   NonzeroOrder order = NonzeroOrder::kCanonical);

// All products throw std::invalid_argument on a dimension mismatch. The
// span overloads write into caller storage and never allocate.

// out = U y  (length m): scatter-add a_k y_k into row i_k.
void apply_U(const UVFactors& f, std::span<const double> y,
             std::span<double> out);
std::vector<double> apply_U(const UVFactors& f, std::span<const double> y);

// out = U' s  (length o): out_k = a_k s_{i_k}.
void apply_Ut(const UVFactors& f, std::span<const double> s,
              std::span<double> out);
std::vector<double> apply_Ut(const UVFactors& f, std::span<const double> s);

// out = V g  (length n): scatter-add g_k into column j_k.
void apply_V(const UVFactors& f, std::span<const double> g,
             std::span<double> out);
std::vector<double> apply_V(const UVFactors& f, std::span<const double> g);

// out = V' x  (length o): out_k = x_{j_k}.
void apply_Vt(const UVFactors& f, std::span<const double> x,
              std::span<double> out);
std::vector<double> apply_Vt(const UVFactors& f, std::span<const double> x);

// out = (I + U'U)^{-1} t, evaluated through the inversion lemma as
// t - U' (fu_diag .* (U t)). `row_scratch` must have length m.
void apply_y_factor(const UVFactors& f, std::span<const double> t,
                    std::span<double> out, std::span<double> row_scratch);
std::vector<double> apply_y_factor(const UVFactors& f,
                                   std::span<const double> t);

}  // namespace conefree

#endif  // CONEFREE_UV_FACTOR_H_
