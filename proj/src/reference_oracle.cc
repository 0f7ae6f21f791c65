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

#include "conefree/reference_oracle.h"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace conefree::oracle {

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(cols, rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

std::vector<double> DenseMatrix::multiply(const std::vector<double>& v) const {
  if (v.size() != cols) throw std::invalid_argument("dense matvec: size");
  std::vector<double> out(rows, 0.0);
  for (std::size_t i = 0; i < rows; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < cols; ++j) acc += (*this)(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

DenseMatrix DenseMatrix::multiply(const DenseMatrix& rhs) const {
  if (rhs.rows != cols) throw std::invalid_argument("dense matmul: size");
  DenseMatrix out(rows, rhs.cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < cols; ++k) {
      const double a = (*this)(i, k);
      for (std::size_t j = 0; j < rhs.cols; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix id(n, n);
  for (std::size_t i = 0; i < n; ++i) id(i, i) = 1.0;
  return id;
}

DenseMatrix dense_from_triplets(const TripletMatrix& a) {
  DenseMatrix d(a.num_rows, a.num_cols);
  for (const Triplet& t : a.entries) d(t.row, t.col) = t.value;
  return d;
}

DenseMatrix gram(const DenseMatrix& m) { return m.multiply(m.transpose()); }

DenseMirror dense_assemble(const ProblemInstance& p, const UVFactors& f,
                           std::size_t cap) {
  if (f.num_rows() > cap || f.num_cols() > cap) {
    throw std::invalid_argument(fmt::format(
        "dense mirror capped at {}x{}, got {}x{}", cap, cap, f.num_rows(),
        f.num_cols()));
  }
  DenseMirror mirror;
  mirror.A = dense_from_triplets(p.A);
  mirror.U = DenseMatrix(f.num_rows(), f.nnz());
  mirror.V = DenseMatrix(f.num_cols(), f.nnz());
  for (std::size_t k = 0; k < f.nnz(); ++k) {
    mirror.U(f.row_of()[k], k) = f.val()[k];
    mirror.V(f.col_of()[k], k) = 1.0;
  }
  mirror.b = p.b;
  mirror.c = p.c;
  mirror.cones = p.cones;
  return mirror;
}

std::vector<double> dense_project(const ConeSpec& cones,
                                  const std::vector<double>& w) {
  std::vector<double> out(w.size(), 0.0);
  std::size_t offset = 0;
  for (std::size_t size : cones.block_sizes) {
    const double t = w[offset];
    double sq = 0.0;
    for (std::size_t i = 1; i < size; ++i) sq += w[offset + i] * w[offset + i];
    const double v_norm = std::sqrt(sq);
    if (v_norm <= t) {
      for (std::size_t i = 0; i < size; ++i) out[offset + i] = w[offset + i];
    } else if (v_norm <= -t) {
      // already zero
    } else {
      const double scale = 0.5 * (t + v_norm);
      out[offset] = scale;
      for (std::size_t i = 1; i < size; ++i) {
        out[offset + i] = scale * w[offset + i] / v_norm;
      }
    }
    offset += size;
  }
  return out;
}

DenseMatrix dense_y_factor(const DenseMirror& mirror) {
  const DenseMatrix uut = gram(mirror.U);
  const std::size_t m = uut.rows;
  // (I + U U') is diagonal: invert it entrywise.
  DenseMatrix fu(m, m);
  for (std::size_t i = 0; i < m; ++i) fu(i, i) = 1.0 / (1.0 + uut(i, i));
  const DenseMatrix ut = mirror.U.transpose();
  DenseMatrix factor = ut.multiply(fu).multiply(mirror.U);
  for (double& e : factor.data) e = -e;
  for (std::size_t k = 0; k < factor.rows; ++k) factor(k, k) += 1.0;
  return factor;
}

SolverState dense_iterate(const DenseMirror& mirror, const SolverState& state,
                          const SolverConfig& cfg) {
  const double mu = cfg.mu;
  const DenseMatrix& U = mirror.U;
  const DenseMatrix& V = mirror.V;
  const DenseMatrix ut = U.transpose();
  const DenseMatrix vt = V.transpose();
  const std::size_t m = U.rows, n = V.rows, o = U.cols;

  const DenseMatrix uut = gram(U);
  const DenseMatrix vvt = gram(V);
  std::vector<double> fu(m), fv(n);
  for (std::size_t i = 0; i < m; ++i) fu[i] = 1.0 / (1.0 + uut(i, i));
  for (std::size_t j = 0; j < n; ++j) fv[j] = 1.0 / (1.0 + vvt(j, j));

  SolverState next = state;

  // x-step.
  std::vector<double> g(o);
  for (std::size_t k = 0; k < o; ++k) g[k] = state.y[k] + state.gamma[k] / mu;
  const std::vector<double> vg = V.multiply(g);
  for (std::size_t j = 0; j < n; ++j) {
    next.x[j] = fv[j] * (vg[j] + state.z[j] + state.delta[j] / mu -
                         mirror.c[j] / mu);
  }

  // y-step with the inversion lemma spelled out as dense products.
  std::vector<double> shifted_b(m);
  for (std::size_t i = 0; i < m; ++i) {
    shifted_b[i] = mirror.b[i] - state.lambda[i] / mu;
  }
  const std::vector<double> ut_b = ut.multiply(shifted_b);
  const std::vector<double> vt_x = vt.multiply(next.x);
  std::vector<double> t(o);
  for (std::size_t k = 0; k < o; ++k) {
    t[k] = ut_b[k] + vt_x[k] - state.gamma[k] / mu;
  }
  std::vector<double> u_t = U.multiply(t);
  for (std::size_t i = 0; i < m; ++i) u_t[i] *= fu[i];
  const std::vector<double> correction = ut.multiply(u_t);
  for (std::size_t k = 0; k < o; ++k) next.y[k] = t[k] - correction[k];

  // z-step.
  std::vector<double> w(n);
  for (std::size_t j = 0; j < n; ++j) {
    w[j] = next.x[j] - state.delta[j] / mu;
  }
  next.z = dense_project(mirror.cones, w);

  // Multipliers.
  const std::vector<double> uy = U.multiply(next.y);
  for (std::size_t i = 0; i < m; ++i) {
    next.lambda[i] = state.lambda[i] + mu * (uy[i] - mirror.b[i]);
  }
  for (std::size_t k = 0; k < o; ++k) {
    next.gamma[k] = state.gamma[k] + mu * (next.y[k] - vt_x[k]);
  }
  for (std::size_t j = 0; j < n; ++j) {
    next.delta[j] = state.delta[j] + mu * (next.z[j] - next.x[j]);
  }
  ++next.iter;
  return next;
}

}  // namespace conefree::oracle
