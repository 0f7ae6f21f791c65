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

#include "conefree/cones.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include <fmt/format.h>

#include "conefree/kernels.h"

namespace conefree {

namespace {

double tail_norm(std::span<const double> w) {
  double sq = 0.0;
  for (std::size_t i = 1; i < w.size(); ++i) sq += w[i] * w[i];
  return std::sqrt(sq);
}

void check_dimension(const ConeWorkview& view, std::size_t got,
                     const char* what) {
  if (got != view.dimension()) {
    throw std::invalid_argument(fmt::format(
        "project_product: {} has length {}, cone dimension is {}", what, got,
        view.dimension()));
  }
}

}  // namespace

ConeWorkview::ConeWorkview(ConeSpec spec) : spec_(std::move(spec)) {
  offsets_.reserve(spec_.block_sizes.size() + 1);
  offsets_.push_back(0);
  for (std::size_t size : spec_.block_sizes) {
    if (size == 0) throw std::invalid_argument("cone block of size 0");
    if (size != 1) orthant_ = false;
    offsets_.push_back(offsets_.back() + size);
  }
  dimension_ = offsets_.back();
}

void project_block(std::span<const double> w, std::span<double> out) {
  const std::size_t q = w.size();
  if (q == 0) return;
  const double w1 = w[0];
  if (q == 1) {
    out[0] = std::max(w1, 0.0);
    return;
  }
  const double alpha = tail_norm(w);
  if (alpha <= -w1) {
    std::fill(out.begin(), out.begin() + q, 0.0);
    return;
  }
  if (alpha <= w1) {
    if (out.data() != w.data()) std::copy(w.begin(), w.end(), out.begin());
    return;
  }
  // alpha > |w1| >= 0 here, so the division is safe.
  const double head = 0.5 * (w1 + alpha);
  const double scale = head / alpha;
  for (std::size_t i = 1; i < q; ++i) out[i] = scale * w[i];
  // Pin the head to the rounded tail norm so the result lies in the cone
  // exactly and a second projection returns it unchanged.
  out[0] = std::max(head, tail_norm(out.first(q)));
}

std::vector<double> project_block(std::span<const double> w) {
  std::vector<double> out(w.size());
  project_block(w, out);
  return out;
}

void project_product(const ConeWorkview& view, std::span<const double> w,
                     std::span<double> out) {
  check_dimension(view, w.size(), "w");
  check_dimension(view, out.size(), "out");
  const std::size_t n = view.dimension();
  if (view.is_orthant()) {
    const auto len = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) \
    if (n >= kernels::kParallelThreshold)
    for (std::int64_t i = 0; i < len; ++i) out[i] = std::max(w[i], 0.0);
    return;
  }
  const std::span<const std::size_t> offsets = view.offsets();
  const std::span<const std::size_t> sizes = view.sizes();
  const auto blocks = static_cast<std::int64_t>(view.num_blocks());
#pragma omp parallel for schedule(static) \
    if (n >= kernels::kParallelThreshold)
  for (std::int64_t b = 0; b < blocks; ++b) {
    project_block(w.subspan(offsets[b], sizes[b]),
                  out.subspan(offsets[b], sizes[b]));
  }
}

std::vector<double> project_product(const ConeWorkview& view,
                                    std::span<const double> w) {
  std::vector<double> out(w.size());
  project_product(view, w, out);
  return out;
}

namespace serial {

void project_product(const ConeWorkview& view, std::span<const double> w,
                     std::span<double> out) {
  check_dimension(view, w.size(), "w");
  check_dimension(view, out.size(), "out");
  for (std::size_t b = 0; b < view.num_blocks(); ++b) {
    project_block(w.subspan(view.offsets()[b], view.sizes()[b]),
                  out.subspan(view.offsets()[b], view.sizes()[b]));
  }
}

}  // namespace serial

bool in_cone(const ConeWorkview& view, std::span<const double> w,
             double tol) {
  if (w.size() != view.dimension()) {
    throw std::invalid_argument("in_cone: dimension mismatch");
  }
  for (std::size_t b = 0; b < view.num_blocks(); ++b) {
    const auto block = w.subspan(view.offsets()[b], view.sizes()[b]);
    if (!(block[0] >= tail_norm(block) - tol)) return false;
  }
  return true;
}

}  // namespace conefree
