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

#ifndef CONEFREE_REFERENCE_ORACLE_H_
#define CONEFREE_REFERENCE_ORACLE_H_

// Dense explicit-matrix mirror of the UV factors and the ADMM iteration.
// Test-only: every product here is a plain dense loop, the diagonal factors
// are read off explicitly formed U U' and V V', and the cone projection uses
// the textbook (t + ||v||)/2 (1, v/||v||) form rather than the solver's.

#include <cstddef>
#include <vector>

#include "conefree/admm.h"
#include "conefree/problem.h"
#include "conefree/uv_factor.h"

namespace conefree::oracle {

inline constexpr std::size_t kDefaultCap = 64;

// Row-major dense matrix.
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const {
    return data[i * cols + j];
  }

  DenseMatrix transpose() const;
  std::vector<double> multiply(const std::vector<double>& v) const;
  DenseMatrix multiply(const DenseMatrix& rhs) const;
  static DenseMatrix identity(std::size_t n);
};

struct DenseMirror {
  DenseMatrix A;  // m x n, from the triplets
  DenseMatrix U;  // m x o
  DenseMatrix V;  // n x o
  std::vector<double> b;
  std::vector<double> c;
  ConeSpec cones;
};

// Throws std::invalid_argument if m or n exceeds `cap`.
DenseMirror dense_assemble(const ProblemInstance& p, const UVFactors& f,
                           std::size_t cap = kDefaultCap);

DenseMatrix dense_from_triplets(const TripletMatrix& a);
DenseMatrix gram(const DenseMatrix& m);  // m m'

// One ADMM iteration with dense products, same update order as the solver.
SolverState dense_iterate(const DenseMirror& mirror, const SolverState& state,
                          const SolverConfig& cfg);

// I - U' (I + U U')^{-1} U as an explicit o x o matrix.
DenseMatrix dense_y_factor(const DenseMirror& mirror);

// Textbook Lorentz-cone projection, block by block.
std::vector<double> dense_project(const ConeSpec& cones,
                                  const std::vector<double>& w);

}  // namespace conefree::oracle

#endif  // CONEFREE_REFERENCE_ORACLE_H_
