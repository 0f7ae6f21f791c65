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

#ifndef CONEFREE_CONES_H_
#define CONEFREE_CONES_H_

#include <cstddef>
#include <span>
#include <vector>

#include "conefree/problem.h"

namespace conefree {

// Block layout of a product of Lorentz cones over an n-vector.
class ConeWorkview {
 public:
  explicit ConeWorkview(ConeSpec spec);

  const ConeSpec& spec() const { return spec_; }
  std::size_t dimension() const { return dimension_; }
  std::size_t num_blocks() const { return spec_.block_sizes.size(); }
  // Start of each block; offsets()[b] + sizes()[b] == offsets()[b + 1].
  std::span<const std::size_t> offsets() const { return offsets_; }
  std::span<const std::size_t> sizes() const { return spec_.block_sizes; }
  // True when every block has size 1 (nonnegative orthant).
  bool is_orthant() const { return orthant_; }

 private:
  ConeSpec spec_;
  std::vector<std::size_t> offsets_;
  std::size_t dimension_ = 0;
  bool orthant_ = true;
};

// Euclidean projection onto the Lorentz cone {w : w_1 >= ||w_{2:}||_2}.
// With alpha = ||w_{2:}||_2:
//   alpha <= -w_1  ->  0
//   alpha <=  w_1  ->  w
//   otherwise      ->  w/2 + (alpha/2, w_1 w_2/(2 alpha), ..., w_1 w_q/(2 alpha))
// A size-1 block reduces to max(w_1, 0). `out` may alias `w`.
void project_block(std::span<const double> w, std::span<double> out);
std::vector<double> project_block(std::span<const double> w);

// Projects each block of `w` independently; blocks run in parallel.
void project_product(const ConeWorkview& view, std::span<const double> w,
                     std::span<double> out);
std::vector<double> project_product(const ConeWorkview& view,
                                    std::span<const double> w);

namespace serial {
void project_product(const ConeWorkview& view, std::span<const double> w,
                     std::span<double> out);
}  // namespace serial

// True iff every block satisfies w_1 >= ||w_{2:}||_2 - tol.
bool in_cone(const ConeWorkview& view, std::span<const double> w, double tol);

}  // namespace conefree

#endif  // CONEFREE_CONES_H_
