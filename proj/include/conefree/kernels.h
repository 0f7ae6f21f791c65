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

#ifndef CONEFREE_KERNELS_H_
#define CONEFREE_KERNELS_H_

// Gather / scatter-add primitives behind every U and V product, and the
// vector reductions used for residual norms.
//
// Each kernel exists twice. kernels::serial holds the straightforward loop
// over the nonzero list and is kept as the reference for tests and the
// benchmark. kernels::parallel holds the OpenMP version. Both produce
// bitwise-identical results: parallel scatters reduce each output slot over
// its group in increasing nonzero order, which is the order the serial loop
// visits them in, and parallel reductions use fixed-size chunks whose partial
// sums are combined serially (independent of the thread count).

#include <cstddef>
#include <span>
#include <vector>

namespace conefree::kernels {

// Problem sizes below this run single-threaded; OpenMP fork/join costs more
// than the work.
inline constexpr std::size_t kParallelThreshold = 8192;

// Chunk length for deterministic reductions.
inline constexpr std::size_t kReductionChunk = 4096;

// For every output slot s, members[offsets[s] .. offsets[s+1]) lists the
// nonzeros k that scatter into s, in increasing k.
struct GroupIndex {
  std::vector<std::size_t> offsets;
  std::vector<std::size_t> members;

  std::size_t num_groups() const {
    return offsets.empty() ? 0 : offsets.size() - 1;
  }
};

// Builds the group index of `slot_of` (length o) over `num_slots` slots.
GroupIndex build_groups(std::span<const std::size_t> slot_of,
                        std::size_t num_slots);

namespace serial {

// out[k] = src[index[k]]
void gather(std::span<const std::size_t> index, std::span<const double> src,
            std::span<double> out);
// out[k] = scale[k] * src[index[k]]
void gather_scaled(std::span<const std::size_t> index,
                   std::span<const double> scale, std::span<const double> src,
                   std::span<double> out);
// out = 0; out[index[k]] += src[k]
void scatter_add(std::span<const std::size_t> index,
                 std::span<const double> src, std::span<double> out);
// out = 0; out[index[k]] += scale[k] * src[k]
void scatter_add_scaled(std::span<const std::size_t> index,
                        std::span<const double> scale,
                        std::span<const double> src, std::span<double> out);

double dot(std::span<const double> u, std::span<const double> v);
double norm2(std::span<const double> v);
double norm_inf(std::span<const double> v);

}  // namespace serial

namespace parallel {

void gather(std::span<const std::size_t> index, std::span<const double> src,
            std::span<double> out);
void gather_scaled(std::span<const std::size_t> index,
                   std::span<const double> scale, std::span<const double> src,
                   std::span<double> out);
void scatter_add(const GroupIndex& groups, std::span<const double> src,
                 std::span<double> out);
void scatter_add_scaled(const GroupIndex& groups,
                        std::span<const double> scale,
                        std::span<const double> src, std::span<double> out);

double dot(std::span<const double> u, std::span<const double> v);
double norm2(std::span<const double> v);
double norm_inf(std::span<const double> v);

}  // namespace parallel

}  // namespace conefree::kernels

#endif  // CONEFREE_KERNELS_H_
