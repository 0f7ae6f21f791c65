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

#include "conefree/problem.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

#include <fmt/format.h>

namespace conefree {

namespace {

bool column_major_less(const Triplet& lhs, const Triplet& rhs) {
  if (lhs.col != rhs.col) return lhs.col < rhs.col;
  return lhs.row < rhs.row;
}

}  // namespace

void sort_canonical(TripletMatrix& a) {
  std::stable_sort(a.entries.begin(), a.entries.end(), column_major_less);
}

bool is_canonical(const TripletMatrix& a) {
  return std::is_sorted(a.entries.begin(), a.entries.end(), column_major_less);
}

std::size_t ConeSpec::dimension() const {
  return std::accumulate(block_sizes.begin(), block_sizes.end(),
                         std::size_t{0});
}

ConeSpec ConeSpec::nonnegative(std::size_t n) {
  return ConeSpec{std::vector<std::size_t>(n, 1)};
}

ConeSpec ConeSpec::lorentz(std::size_t block_size, std::size_t count) {
  return ConeSpec{std::vector<std::size_t>(count, block_size)};
}

ValidationReport validate(const ProblemInstance& p) {
  ValidationReport report;
  const std::size_t m = p.A.num_rows;
  const std::size_t n = p.A.num_cols;

  if (p.b.size() != m) {
    report.errors.push_back(
        fmt::format("b has length {} but A has m={} rows", p.b.size(), m));
  }
  if (p.c.size() != n) {
    report.errors.push_back(
        fmt::format("c has length {} but A has n={} columns", p.c.size(), n));
  }
  for (std::size_t i = 0; i < p.b.size(); ++i) {
    if (!std::isfinite(p.b[i])) {
      report.errors.push_back(fmt::format("b[{}] is not finite", i));
    }
  }
  for (std::size_t j = 0; j < p.c.size(); ++j) {
    if (!std::isfinite(p.c[j])) {
      report.errors.push_back(fmt::format("c[{}] is not finite", j));
    }
  }

  for (std::size_t blk = 0; blk < p.cones.block_sizes.size(); ++blk) {
    if (p.cones.block_sizes[blk] == 0) {
      report.errors.push_back(fmt::format("cone block {} has size 0", blk));
    }
  }
  const std::size_t cone_sum = p.cones.dimension();
  if (cone_sum != n) {
    report.errors.push_back(
        fmt::format("cone sizes sum {} ≠ n={}", cone_sum, n));
  }

  std::vector<bool> row_used(m, false);
  std::vector<std::pair<std::size_t, std::size_t>> positions;
  positions.reserve(p.A.entries.size());
  for (std::size_t k = 0; k < p.A.entries.size(); ++k) {
    const Triplet& t = p.A.entries[k];
    bool in_range = true;
    if (t.row >= m) {
      report.errors.push_back(fmt::format(
          "entry {}: row index {} out of range (m={})", k, t.row, m));
      in_range = false;
    }
    if (t.col >= n) {
      report.errors.push_back(fmt::format(
          "entry {}: column index {} out of range (n={})", k, t.col, n));
      in_range = false;
    }
    if (!std::isfinite(t.value)) {
      report.errors.push_back(fmt::format("entry {}: value is not finite", k));
    } else if (t.value == 0.0) {
      report.errors.push_back(fmt::format("entry {}: value is zero", k));
    }
    if (in_range) {
      row_used[t.row] = true;
      positions.emplace_back(t.col, t.row);
    }
  }

  std::sort(positions.begin(), positions.end());
  for (std::size_t k = 1; k < positions.size(); ++k) {
    if (positions[k] == positions[k - 1]) {
      report.errors.push_back(
          fmt::format("duplicate entry ({},{})", positions[k].second,
                      positions[k].first));
    }
  }

  for (std::size_t i = 0; i < m; ++i) {
    if (!row_used[i]) {
      report.warnings.push_back(fmt::format("row {} of A is empty", i));
    }
  }
  return report;
}

void require_valid(const ProblemInstance& p) {
  const ValidationReport report = validate(p);
  if (!report.ok()) {
    throw std::invalid_argument("invalid problem: " + report.errors.front());
  }
}

}  // namespace conefree
