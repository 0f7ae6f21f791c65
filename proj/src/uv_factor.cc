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

#include "conefree/uv_factor.h"

#include <cstdint>
#include <stdexcept>

#include <fmt/format.h>

#include "conefree/parallel.h"

namespace conefree {

namespace {

void check_length(const char* op, const char* what, std::size_t got,
                  std::size_t want) {
  if (got != want) {
    throw std::invalid_argument(fmt::format(
        "{}: {} has length {}, expected {}", op, what, got, want));
  }
}

// The grouped scatter only pays off when threads share the work; a single
// thread streams the triplets in k order instead. Both give identical bits.
bool use_grouped_scatter(std::size_t nnz) {
  return nnz >= kernels::kParallelThreshold && max_threads() > 1;
}

}  // namespace

UVFactors build_uv(const TripletMatrix& a, NonzeroOrder order) {
  TripletMatrix sorted;
  const TripletMatrix* src = &a;
  if (order == NonzeroOrder::kCanonical && !is_canonical(a)) {
    sorted = a;
    sort_canonical(sorted);
    src = &sorted;
  }

  UVFactors f;
  f.m_ = src->num_rows;
  f.n_ = src->num_cols;
  const std::size_t o = src->entries.size();
  f.row_of_.resize(o);
  f.col_of_.resize(o);
  f.val_.resize(o);
  for (std::size_t k = 0; k < o; ++k) {
    const Triplet& t = src->entries[k];
    if (t.row >= f.m_ || t.col >= f.n_) {
      throw std::invalid_argument(
          fmt::format("build_uv: entry {} index out of range", k));
    }
    f.row_of_[k] = t.row;
    f.col_of_[k] = t.col;
    f.val_[k] = t.value;
  }

  f.row_groups_ = kernels::build_groups(f.row_of_, f.m_);
  f.col_groups_ = kernels::build_groups(f.col_of_, f.n_);

  // Diagonal of U U' is the per-row sum of a_k^2, accumulated in k order.
  std::vector<double> row_sq(f.m_, 0.0);
  for (std::size_t k = 0; k < o; ++k) {
    row_sq[f.row_of_[k]] += f.val_[k] * f.val_[k];
  }
  f.fu_diag_.resize(f.m_);
  for (std::size_t i = 0; i < f.m_; ++i) f.fu_diag_[i] = 1.0 / (1.0 + row_sq[i]);

  f.fv_diag_.resize(f.n_);
  for (std::size_t j = 0; j < f.n_; ++j) {
    const auto count = static_cast<double>(f.col_groups_.offsets[j + 1] -
                                           f.col_groups_.offsets[j]);
    f.fv_diag_[j] = 1.0 / (1.0 + count);
  }
  return f;
}

void apply_U(const UVFactors& f, std::span<const double> y,
             std::span<double> out) {
  check_length("apply_U", "y", y.size(), f.nnz());
  check_length("apply_U", "out", out.size(), f.num_rows());
  if (use_grouped_scatter(f.nnz())) {
    kernels::parallel::scatter_add_scaled(f.row_groups(), f.val(), y, out);
  } else {
    kernels::serial::scatter_add_scaled(f.row_of(), f.val(), y, out);
  }
}

std::vector<double> apply_U(const UVFactors& f, std::span<const double> y) {
  std::vector<double> out(f.num_rows());
  apply_U(f, y, out);
  return out;
}

void apply_Ut(const UVFactors& f, std::span<const double> s,
              std::span<double> out) {
  check_length("apply_Ut", "s", s.size(), f.num_rows());
  check_length("apply_Ut", "out", out.size(), f.nnz());
  kernels::parallel::gather_scaled(f.row_of(), f.val(), s, out);
}

std::vector<double> apply_Ut(const UVFactors& f, std::span<const double> s) {
  std::vector<double> out(f.nnz());
  apply_Ut(f, s, out);
  return out;
}

void apply_V(const UVFactors& f, std::span<const double> g,
             std::span<double> out) {
  check_length("apply_V", "g", g.size(), f.nnz());
  check_length("apply_V", "out", out.size(), f.num_cols());
  if (use_grouped_scatter(f.nnz())) {
    kernels::parallel::scatter_add(f.col_groups(), g, out);
  } else {
    kernels::serial::scatter_add(f.col_of(), g, out);
  }
}

std::vector<double> apply_V(const UVFactors& f, std::span<const double> g) {
  std::vector<double> out(f.num_cols());
  apply_V(f, g, out);
  return out;
}

void apply_Vt(const UVFactors& f, std::span<const double> x,
              std::span<double> out) {
  check_length("apply_Vt", "x", x.size(), f.num_cols());
  check_length("apply_Vt", "out", out.size(), f.nnz());
  kernels::parallel::gather(f.col_of(), x, out);
}

std::vector<double> apply_Vt(const UVFactors& f, std::span<const double> x) {
  std::vector<double> out(f.nnz());
  apply_Vt(f, x, out);
  return out;
}

void apply_y_factor(const UVFactors& f, std::span<const double> t,
                    std::span<double> out, std::span<double> row_scratch) {
  check_length("apply_y_factor", "t", t.size(), f.nnz());
  check_length("apply_y_factor", "out", out.size(), f.nnz());
  check_length("apply_y_factor", "row_scratch", row_scratch.size(),
               f.num_rows());

  apply_U(f, t, row_scratch);
  const std::span<const double> fu = f.fu_diag();
  const auto m = static_cast<std::int64_t>(f.num_rows());
#pragma omp parallel for schedule(static) \
    if (f.num_rows() >= kernels::kParallelThreshold)
  for (std::int64_t i = 0; i < m; ++i) row_scratch[i] *= fu[i];

  const std::span<const std::size_t> row_of = f.row_of();
  const std::span<const double> val = f.val();
  const auto o = static_cast<std::int64_t>(f.nnz());
#pragma omp parallel for schedule(static) \
    if (f.nnz() >= kernels::kParallelThreshold)
  for (std::int64_t k = 0; k < o; ++k) {
    out[k] = t[k] - val[k] * row_scratch[row_of[k]];
  }
}

std::vector<double> apply_y_factor(const UVFactors& f,
                                   std::span<const double> t) {
  std::vector<double> out(f.nnz());
  std::vector<double> scratch(f.num_rows());
  apply_y_factor(f, t, out, scratch);
  return out;
}

}  // namespace conefree
