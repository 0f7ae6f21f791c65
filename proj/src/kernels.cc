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

#include "conefree/kernels.h"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>

namespace conefree::kernels {

GroupIndex build_groups(std::span<const std::size_t> slot_of,
                        std::size_t num_slots) {
  GroupIndex groups;
  groups.offsets.assign(num_slots + 1, 0);
  for (std::size_t s : slot_of) ++groups.offsets[s + 1];
  for (std::size_t s = 0; s < num_slots; ++s) {
    groups.offsets[s + 1] += groups.offsets[s];
  }
  groups.members.resize(slot_of.size());
  std::vector<std::size_t> cursor(groups.offsets.begin(),
                                  groups.offsets.end() - 1);
  for (std::size_t k = 0; k < slot_of.size(); ++k) {
    groups.members[cursor[slot_of[k]]++] = k;
  }
  return groups;
}

namespace {

template <typename ChunkFn>
double chunked_sum(std::size_t n, ChunkFn&& chunk_sum, bool use_threads) {
  const std::size_t num_chunks = (n + kReductionChunk - 1) / kReductionChunk;
  if (num_chunks <= 1) return n == 0 ? 0.0 : chunk_sum(0, n);
  std::vector<double> partial(num_chunks);
  const auto chunks = static_cast<std::int64_t>(num_chunks);
#pragma omp parallel for schedule(static) if (use_threads)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::size_t begin = static_cast<std::size_t>(c) * kReductionChunk;
    partial[c] = chunk_sum(begin, std::min(n, begin + kReductionChunk));
  }
  double total = 0.0;
  for (double s : partial) total += s;
  return total;
}

double dot_impl(std::span<const double> u, std::span<const double> v,
                bool use_threads) {
  assert(u.size() == v.size());
  return chunked_sum(
      u.size(),
      [&](std::size_t begin, std::size_t end) {
        double s = 0.0;
        for (std::size_t i = begin; i < end; ++i) s += u[i] * v[i];
        return s;
      },
      use_threads);
}

}  // namespace

namespace serial {

void gather(std::span<const std::size_t> index, std::span<const double> src,
            std::span<double> out) {
  assert(index.size() == out.size());
  for (std::size_t k = 0; k < index.size(); ++k) out[k] = src[index[k]];
}

void gather_scaled(std::span<const std::size_t> index,
                   std::span<const double> scale, std::span<const double> src,
                   std::span<double> out) {
  assert(index.size() == out.size() && scale.size() == out.size());
  for (std::size_t k = 0; k < index.size(); ++k) {
    out[k] = scale[k] * src[index[k]];
  }
}

void scatter_add(std::span<const std::size_t> index,
                 std::span<const double> src, std::span<double> out) {
  assert(index.size() == src.size());
  std::fill(out.begin(), out.end(), 0.0);
  for (std::size_t k = 0; k < index.size(); ++k) out[index[k]] += src[k];
}

void scatter_add_scaled(std::span<const std::size_t> index,
                        std::span<const double> scale,
                        std::span<const double> src, std::span<double> out) {
  assert(index.size() == src.size() && scale.size() == src.size());
  std::fill(out.begin(), out.end(), 0.0);
  for (std::size_t k = 0; k < index.size(); ++k) {
    out[index[k]] += scale[k] * src[k];
  }
}

double dot(std::span<const double> u, std::span<const double> v) {
  return dot_impl(u, v, false);
}

double norm2(std::span<const double> v) {
  return std::sqrt(dot_impl(v, v, false));
}

double norm_inf(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace serial

namespace parallel {

void gather(std::span<const std::size_t> index, std::span<const double> src,
            std::span<double> out) {
  assert(index.size() == out.size());
  const auto o = static_cast<std::int64_t>(index.size());
#pragma omp parallel for schedule(static) if (index.size() >= kParallelThreshold)
  for (std::int64_t k = 0; k < o; ++k) out[k] = src[index[k]];
}

void gather_scaled(std::span<const std::size_t> index,
                   std::span<const double> scale, std::span<const double> src,
                   std::span<double> out) {
  assert(index.size() == out.size() && scale.size() == out.size());
  const auto o = static_cast<std::int64_t>(index.size());
#pragma omp parallel for schedule(static) if (index.size() >= kParallelThreshold)
  for (std::int64_t k = 0; k < o; ++k) out[k] = scale[k] * src[index[k]];
}

void scatter_add(const GroupIndex& groups, std::span<const double> src,
                 std::span<double> out) {
  assert(out.size() == groups.num_groups());
  const auto slots = static_cast<std::int64_t>(groups.num_groups());
  const std::size_t* offsets = groups.offsets.data();
  const std::size_t* members = groups.members.data();
#pragma omp parallel for schedule(static) if (src.size() >= kParallelThreshold)
  for (std::int64_t s = 0; s < slots; ++s) {
    double acc = 0.0;
    for (std::size_t p = offsets[s]; p < offsets[s + 1]; ++p) {
      acc += src[members[p]];
    }
    out[s] = acc;
  }
}

void scatter_add_scaled(const GroupIndex& groups,
                        std::span<const double> scale,
                        std::span<const double> src, std::span<double> out) {
  assert(out.size() == groups.num_groups());
  const auto slots = static_cast<std::int64_t>(groups.num_groups());
  const std::size_t* offsets = groups.offsets.data();
  const std::size_t* members = groups.members.data();
#pragma omp parallel for schedule(static) if (src.size() >= kParallelThreshold)
  for (std::int64_t s = 0; s < slots; ++s) {
    double acc = 0.0;
    for (std::size_t p = offsets[s]; p < offsets[s + 1]; ++p) {
      const std::size_t k = members[p];
      acc += scale[k] * src[k];
    }
    out[s] = acc;
  }
}

double dot(std::span<const double> u, std::span<const double> v) {
  return dot_impl(u, v, u.size() >= kParallelThreshold);
}

double norm2(std::span<const double> v) {
  return std::sqrt(dot_impl(v, v, v.size() >= kParallelThreshold));
}

double norm_inf(std::span<const double> v) {
  double m = 0.0;
  const auto n = static_cast<std::int64_t>(v.size());
#pragma omp parallel for reduction(max : m) schedule(static) \
    if (v.size() >= kParallelThreshold)
  for (std::int64_t i = 0; i < n; ++i) m = std::max(m, std::abs(v[i]));
  return m;
}

}  // namespace parallel

}  // namespace conefree::kernels
