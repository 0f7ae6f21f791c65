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

#ifndef CONEFREE_PROBLEM_H_
#define CONEFREE_PROBLEM_H_

// Problem data for conic programs in standard form
//
//   minimize    c'x
//   subject to  A x = b,  x in K
//
// where K = K_{n_1} x ... x K_{n_k} is a product of Lorentz cones. A Lorentz
// cone of size 1 is the nonnegative half-line, so an LP is n blocks of size 1.

#include <cstddef>
#include <string>
#include <vector>

namespace conefree {

struct Triplet {
  std::size_t row = 0;
  std::size_t col = 0;
  double value = 0.0;

  friend bool operator==(const Triplet&, const Triplet&) = default;
};

// Sparse matrix as an ordered list of nonzeros. Indices are zero-based.
struct TripletMatrix {
  std::size_t num_rows = 0;
  std::size_t num_cols = 0;
  std::vector<Triplet> entries;

  std::size_t nnz() const { return entries.size(); }

  friend bool operator==(const TripletMatrix&, const TripletMatrix&) = default;
};

// Sorts entries column-major (by column, then row). This is the canonical
// nonzero order used by the UV factors and by the problem file writer.
void sort_canonical(TripletMatrix& a);
bool is_canonical(const TripletMatrix& a);

struct ConeSpec {
  std::vector<std::size_t> block_sizes;

  std::size_t dimension() const;
  std::size_t num_blocks() const { return block_sizes.size(); }

  // n blocks of size 1, i.e. the nonnegative orthant.
  static ConeSpec nonnegative(std::size_t n);
  // count blocks of the Lorentz cone of the given size.
  static ConeSpec lorentz(std::size_t block_size, std::size_t count);

  friend bool operator==(const ConeSpec&, const ConeSpec&) = default;
};

struct ProblemInstance {
  TripletMatrix A;
  std::vector<double> b;
  std::vector<double> c;
  ConeSpec cones;

  std::size_t num_rows() const { return A.num_rows; }
  std::size_t num_cols() const { return A.num_cols; }
  std::size_t nnz() const { return A.nnz(); }

  friend bool operator==(const ProblemInstance&,
                         const ProblemInstance&) = default;
};

struct ValidationReport {
  std::vector<std::string> errors;
  // Non-fatal findings, e.g. empty rows of A.
  std::vector<std::string> warnings;

  bool ok() const { return errors.empty(); }
};

// Checks every structural invariant of the instance. Violations are returned
// as data; nothing throws.
ValidationReport validate(const ProblemInstance& p);

// Throws std::invalid_argument carrying the first violation if validate fails.
void require_valid(const ProblemInstance& p);

}  // namespace conefree

#endif  // CONEFREE_PROBLEM_H_
