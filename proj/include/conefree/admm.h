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

#ifndef CONEFREE_ADMM_H_
#define CONEFREE_ADMM_H_

// Matrix-free ADMM for  min c'x  s.t.  A x = b,  x in K.
//
// The problem is lifted with the UV factors of A to
//
//   min c'x  s.t.  U y = b  (lambda),  y = V'x  (gamma),  z = x  (delta),
//                  z in K
//
// and split into block 1 = {x} and block 2 = {y, z}. One iteration is
//
//   x      <- Fv (V (y + gamma/mu) + z + delta/mu - c/mu)
//   y      <- (I - U' Fu U) (U'(b - lambda/mu) + V'x - gamma/mu)
//   z      <- proj_K(x - delta/mu)
//   lambda <- lambda + mu (U y - b)
//   gamma  <- gamma  + mu (y - V'x)
//   delta  <- delta  + mu (z - x)
//
// with Fu = (I + U U')^{-1}, Fv = (I + V V')^{-1} diagonal. Every step is a
// gather, a scatter-add or an elementwise operation.

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "conefree/cones.h"
#include "conefree/problem.h"
#include "conefree/uv_factor.h"

namespace conefree {

enum class TerminationMode {
  // ||Ax-b||_inf < eps_abs + eps_rel max(||Ax||_inf, ||b||_inf), and the same
  // for the dual residual against max(||A'lambda||_inf, ||c||_inf).
  kOsqp,
  // ||Ax-b||_2 <= eps_prim (1 + ||b||_2), dual residual <= eps_dual
  // (1 + ||c||_2), |gap| <= eps_gap (1 + |c'x| + |b'lambda|).
  kScs,
  // ||Ax-b||_2 < target_prim_res and |gap| < target_gap, e.g. to beat the
  // residuals of a reference solution.
  kTarget,
};

enum class SolveStatus { kRunning, kSolved, kMaxIters, kDiverged };

std::string_view to_string(TerminationMode mode);
std::string_view to_string(SolveStatus status);
std::optional<TerminationMode> parse_termination_mode(std::string_view text);

struct SolverConfig {
  double mu = 1.0;
  std::size_t max_iters = 100000;
  std::size_t check_every = 25;
  TerminationMode term_mode = TerminationMode::kScs;
  double eps_abs = 1e-4;
  double eps_rel = 1e-3;
  double eps_prim = 1e-3;
  double eps_dual = 1e-3;
  double eps_gap = 1e-3;
  std::optional<double> target_prim_res;
  std::optional<double> target_gap;

  // Throws std::invalid_argument on a violated invariant.
  void validate() const;
};

struct SolverState {
  std::vector<double> x;       // n
  std::vector<double> y;       // o
  std::vector<double> z;       // n
  std::vector<double> lambda;  // m
  std::vector<double> gamma;   // o
  std::vector<double> delta;   // n
  std::size_t iter = 0;

  static SolverState zeros(std::size_t m, std::size_t n, std::size_t o);
  bool all_finite() const;

  friend bool operator==(const SolverState&, const SolverState&) = default;
};

// Residuals are evaluated at x. The dual residual measures how far
// A'lambda + c is from the dual cone K* = K:
//   r_dual = (A'lambda + c) - proj_K(A'lambda + c),
// which is zero exactly when lambda is dual feasible. gap = c'x + b'lambda.
struct IterationReport {
  std::size_t iter = 0;
  double prim_res_inf = 0.0;
  double dual_res_inf = 0.0;
  double prim_res_2 = 0.0;
  double dual_res_2 = 0.0;
  double cone_gap = 0.0;  // ||x - z||_inf
  double pobj = 0.0;      // c'x
  double dobj = 0.0;      // -b'lambda
  double gap = 0.0;       // c'x + b'lambda
  double ax_inf = 0.0;    // ||Ax||_inf
  double atl_inf = 0.0;   // ||A'lambda||_inf
  double elapsed_ms = 0.0;
  SolveStatus status = SolveStatus::kRunning;
};

// Scratch buffers for one solver; sized once so iterations never allocate.
struct Workspace {
  std::vector<double> o1, o2;
  std::vector<double> m1;
  std::vector<double> n1, n2;

  Workspace(std::size_t m, std::size_t n, std::size_t o)
      : o1(o), o2(o), m1(m), n1(n), n2(n) {}
};

// Individual ADMM steps, in place on `state`. They assume the state matches
// the factors' dimensions.
void x_update(const UVFactors& f, SolverState& state, const SolverConfig& cfg,
              std::span<const double> c, Workspace& work);
void y_update(const UVFactors& f, SolverState& state, const SolverConfig& cfg,
              std::span<const double> b, Workspace& work);
void z_update(const ConeWorkview& view, SolverState& state,
              const SolverConfig& cfg, Workspace& work);
void dual_update(const UVFactors& f, SolverState& state,
                 const SolverConfig& cfg, std::span<const double> b,
                 Workspace& work);

IterationReport compute_report(const ProblemInstance& p, const UVFactors& f,
                               const ConeWorkview& view,
                               const SolverState& state, Workspace& work);
// Convenience overload that builds its own factors and scratch.
IterationReport compute_report(const ProblemInstance& p,
                               const SolverState& state);

// Returns kSolved, kDiverged (already flagged in the report) or kRunning.
SolveStatus check_termination(const IterationReport& report,
                              const SolverConfig& cfg,
                              const ProblemInstance& p);

struct SolveResult {
  std::vector<double> x;
  std::vector<double> lambda;
  IterationReport report;
  std::vector<IterationReport> trace;
  SolverState state;
};

// Owns the factors and scratch for one problem; `p` must outlive the solver.
// Not thread-safe; separate instances are independent.
class AdmmSolver {
 public:
  AdmmSolver(const ProblemInstance& p, SolverConfig cfg);

  const UVFactors& factors() const { return factors_; }
  const SolverConfig& config() const { return cfg_; }
  SolverState initial_state() const;

  // One full iteration: x, y, z, then the multipliers.
  void iterate(SolverState& state);
  IterationReport report(const SolverState& state);
  SolveResult solve(std::optional<SolverState> init = std::nullopt);

 private:
  const ProblemInstance& problem_;
  SolverConfig cfg_;
  UVFactors factors_;
  ConeWorkview view_;
  Workspace work_;
};

SolveResult solve(const ProblemInstance& p, const SolverConfig& cfg,
                  std::optional<SolverState> init = std::nullopt);

}  // namespace conefree

#endif  // CONEFREE_ADMM_H_
