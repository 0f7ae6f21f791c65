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

#include "conefree/admm.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include <fmt/format.h>

#include "conefree/kernels.h"

namespace conefree {

namespace {

namespace par = kernels::parallel;

bool use_threads(std::size_t len) { return len >= kernels::kParallelThreshold; }

bool finite_all(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(),
                     [](double e) { return std::isfinite(e); });
}

void check_state(const UVFactors& f, const SolverState& s) {
  const std::size_t m = f.num_rows(), n = f.num_cols(), o = f.nnz();
  if (s.x.size() != n || s.z.size() != n || s.delta.size() != n ||
      s.y.size() != o || s.gamma.size() != o || s.lambda.size() != m) {
    throw std::invalid_argument(fmt::format(
        "solver state dimensions do not match the problem (m={}, n={}, o={})",
        m, n, o));
  }
}

}  // namespace

std::string_view to_string(TerminationMode mode) {
  switch (mode) {
    case TerminationMode::kOsqp:
      return "osqp";
    case TerminationMode::kScs:
      return "scs";
    case TerminationMode::kTarget:
      return "target";
  }
  return "unknown";
}

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kRunning:
      return "running";
    case SolveStatus::kSolved:
      return "solved";
    case SolveStatus::kMaxIters:
      return "max_iters";
    case SolveStatus::kDiverged:
      return "diverged";
  }
  return "unknown";
}

std::optional<TerminationMode> parse_termination_mode(std::string_view text) {
  if (text == "osqp") return TerminationMode::kOsqp;
  if (text == "scs") return TerminationMode::kScs;
  if (text == "target") return TerminationMode::kTarget;
  return std::nullopt;
}

void SolverConfig::validate() const {
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw std::invalid_argument("mu must be positive and finite");
  }
  if (max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
  if (check_every < 1) throw std::invalid_argument("check_every must be >= 1");
  for (double eps : {eps_abs, eps_rel, eps_prim, eps_dual, eps_gap}) {
    if (!(eps >= 0.0)) throw std::invalid_argument("tolerances must be >= 0");
  }
  if (term_mode == TerminationMode::kTarget) {
    if (!target_prim_res || !target_gap) {
      throw std::invalid_argument(
          "target mode needs both target_prim_res and target_gap");
    }
    if (!(*target_prim_res >= 0.0) || !(*target_gap >= 0.0)) {
      throw std::invalid_argument("target residuals must be >= 0");
    }
  }
}

SolverState SolverState::zeros(std::size_t m, std::size_t n, std::size_t o) {
  SolverState s;
  s.x.assign(n, 0.0);
  s.y.assign(o, 0.0);
  s.z.assign(n, 0.0);
  s.lambda.assign(m, 0.0);
  s.gamma.assign(o, 0.0);
  s.delta.assign(n, 0.0);
  return s;
}

bool SolverState::all_finite() const {
  return finite_all(x) && finite_all(y) && finite_all(z) &&
         finite_all(lambda) && finite_all(gamma) && finite_all(delta);
}

void x_update(const UVFactors& f, SolverState& state, const SolverConfig& cfg,
              std::span<const double> c, Workspace& work) {
  const double inv_mu = 1.0 / cfg.mu;
  const auto o = static_cast<std::int64_t>(f.nnz());
  const auto n = static_cast<std::int64_t>(f.num_cols());
  double* g = work.o1.data();
  const double* y = state.y.data();
  const double* gamma = state.gamma.data();
#pragma omp parallel for schedule(static) if (use_threads(f.nnz()))
  for (std::int64_t k = 0; k < o; ++k) g[k] = y[k] + gamma[k] * inv_mu;

  apply_V(f, work.o1, work.n1);

  const double* vg = work.n1.data();
  const double* fv = f.fv_diag().data();
  const double* z = state.z.data();
  const double* delta = state.delta.data();
  double* x = state.x.data();
#pragma omp parallel for schedule(static) if (use_threads(f.num_cols()))
  for (std::int64_t j = 0; j < n; ++j) {
    x[j] = fv[j] * (vg[j] + z[j] + delta[j] * inv_mu - c[j] * inv_mu);
  }
}

void y_update(const UVFactors& f, SolverState& state, const SolverConfig& cfg,
              std::span<const double> b, Workspace& work) {
  const double inv_mu = 1.0 / cfg.mu;
  const auto m = static_cast<std::int64_t>(f.num_rows());
  const auto o = static_cast<std::int64_t>(f.nnz());

  double* shifted_b = work.m1.data();
  const double* lambda = state.lambda.data();
#pragma omp parallel for schedule(static) if (use_threads(f.num_rows()))
  for (std::int64_t i = 0; i < m; ++i) shifted_b[i] = b[i] - lambda[i] * inv_mu;

  // t = U'(b - lambda/mu) + V'x - gamma/mu, one gather pass.
  double* t = work.o1.data();
  const std::size_t* row_of = f.row_of().data();
  const std::size_t* col_of = f.col_of().data();
  const double* val = f.val().data();
  const double* x = state.x.data();
  const double* gamma = state.gamma.data();
#pragma omp parallel for schedule(static) if (use_threads(f.nnz()))
  for (std::int64_t k = 0; k < o; ++k) {
    t[k] = val[k] * shifted_b[row_of[k]] + x[col_of[k]] - gamma[k] * inv_mu;
  }

  apply_y_factor(f, work.o1, state.y, work.m1);
}

void z_update(const ConeWorkview& view, SolverState& state,
              const SolverConfig& cfg, Workspace& work) {
  const double inv_mu = 1.0 / cfg.mu;
  const auto n = static_cast<std::int64_t>(view.dimension());
  double* w = work.n1.data();
  const double* x = state.x.data();
  const double* delta = state.delta.data();
#pragma omp parallel for schedule(static) if (use_threads(view.dimension()))
  for (std::int64_t j = 0; j < n; ++j) w[j] = x[j] - delta[j] * inv_mu;
  project_product(view, work.n1, state.z);
}

void dual_update(const UVFactors& f, SolverState& state,
                 const SolverConfig& cfg, std::span<const double> b,
                 Workspace& work) {
  const double mu = cfg.mu;
  const auto m = static_cast<std::int64_t>(f.num_rows());
  const auto n = static_cast<std::int64_t>(f.num_cols());
  const auto o = static_cast<std::int64_t>(f.nnz());

  apply_U(f, state.y, work.m1);
  const double* uy = work.m1.data();
  double* lambda = state.lambda.data();
#pragma omp parallel for schedule(static) if (use_threads(f.num_rows()))
  for (std::int64_t i = 0; i < m; ++i) lambda[i] += mu * (uy[i] - b[i]);

  const std::size_t* col_of = f.col_of().data();
  const double* y = state.y.data();
  const double* x = state.x.data();
  double* gamma = state.gamma.data();
#pragma omp parallel for schedule(static) if (use_threads(f.nnz()))
  for (std::int64_t k = 0; k < o; ++k) gamma[k] += mu * (y[k] - x[col_of[k]]);

  const double* z = state.z.data();
  double* delta = state.delta.data();
#pragma omp parallel for schedule(static) if (use_threads(f.num_cols()))
  for (std::int64_t j = 0; j < n; ++j) delta[j] += mu * (z[j] - x[j]);
}

IterationReport compute_report(const ProblemInstance& p, const UVFactors& f,
                               const ConeWorkview& view,
                               const SolverState& state, Workspace& work) {
  check_state(f, state);
  IterationReport r;
  r.iter = state.iter;

  // Primal residual A x - b = U (V' x) - b.
  apply_Vt(f, state.x, work.o1);
  apply_U(f, work.o1, work.m1);
  r.ax_inf = par::norm_inf(work.m1);
  for (std::size_t i = 0; i < p.b.size(); ++i) work.m1[i] -= p.b[i];
  r.prim_res_inf = par::norm_inf(work.m1);
  r.prim_res_2 = par::norm2(work.m1);

  // Dual residual: distance of A'lambda + c = V (U' lambda) + c from K.
  apply_Ut(f, state.lambda, work.o1);
  apply_V(f, work.o1, work.n1);
  r.atl_inf = par::norm_inf(work.n1);
  for (std::size_t j = 0; j < p.c.size(); ++j) work.n1[j] += p.c[j];
  project_product(view, work.n1, work.n2);
  for (std::size_t j = 0; j < p.c.size(); ++j) work.n1[j] -= work.n2[j];
  r.dual_res_inf = par::norm_inf(work.n1);
  r.dual_res_2 = par::norm2(work.n1);

  for (std::size_t j = 0; j < state.x.size(); ++j) {
    work.n1[j] = state.x[j] - state.z[j];
  }
  r.cone_gap = par::norm_inf(work.n1);

  r.pobj = par::dot(p.c, state.x);
  const double b_lambda = par::dot(p.b, state.lambda);
  r.dobj = -b_lambda;
  r.gap = r.pobj + b_lambda;

  const bool finite = state.all_finite() && std::isfinite(r.prim_res_2) &&
                      std::isfinite(r.dual_res_2) && std::isfinite(r.gap);
  r.status = finite ? SolveStatus::kRunning : SolveStatus::kDiverged;
  return r;
}

IterationReport compute_report(const ProblemInstance& p,
                               const SolverState& state) {
  const UVFactors f = build_uv(p.A);
  const ConeWorkview view(p.cones);
  Workspace work(f.num_rows(), f.num_cols(), f.nnz());
  return compute_report(p, f, view, state, work);
}

SolveStatus check_termination(const IterationReport& report,
                              const SolverConfig& cfg,
                              const ProblemInstance& p) {
  if (report.status == SolveStatus::kDiverged) return SolveStatus::kDiverged;
  const double b_lambda = -report.dobj;
  bool solved = false;
  switch (cfg.term_mode) {
    case TerminationMode::kOsqp: {
      const double eps_prim =
          cfg.eps_abs +
          cfg.eps_rel * std::max(report.ax_inf, kernels::serial::norm_inf(p.b));
      const double eps_dual =
          cfg.eps_abs +
          cfg.eps_rel * std::max(report.atl_inf, kernels::serial::norm_inf(p.c));
      solved = report.prim_res_inf < eps_prim && report.dual_res_inf < eps_dual;
      break;
    }
    case TerminationMode::kScs: {
      const double b_norm = par::norm2(p.b);
      const double c_norm = par::norm2(p.c);
      solved = report.prim_res_2 <= cfg.eps_prim * (1.0 + b_norm) &&
               report.dual_res_2 <= cfg.eps_dual * (1.0 + c_norm) &&
               std::abs(report.gap) <=
                   cfg.eps_gap *
                       (1.0 + std::abs(report.pobj) + std::abs(b_lambda));
      break;
    }
    case TerminationMode::kTarget:
      solved = cfg.target_prim_res && cfg.target_gap &&
               report.prim_res_2 < *cfg.target_prim_res &&
               std::abs(report.gap) < *cfg.target_gap;
      break;
  }
  return solved ? SolveStatus::kSolved : SolveStatus::kRunning;
}

AdmmSolver::AdmmSolver(const ProblemInstance& p, SolverConfig cfg)
    : problem_(p),
      cfg_(std::move(cfg)),
      factors_((require_valid(p), build_uv(p.A))),
      view_(p.cones),
      work_(factors_.num_rows(), factors_.num_cols(), factors_.nnz()) {
  cfg_.validate();
}

SolverState AdmmSolver::initial_state() const {
  return SolverState::zeros(factors_.num_rows(), factors_.num_cols(),
                            factors_.nnz());
}

void AdmmSolver::iterate(SolverState& state) {
  x_update(factors_, state, cfg_, problem_.c, work_);
  y_update(factors_, state, cfg_, problem_.b, work_);
  z_update(view_, state, cfg_, work_);
  dual_update(factors_, state, cfg_, problem_.b, work_);
  ++state.iter;
}

IterationReport AdmmSolver::report(const SolverState& state) {
  return compute_report(problem_, factors_, view_, state, work_);
}

SolveResult AdmmSolver::solve(std::optional<SolverState> init) {
  using Clock = std::chrono::steady_clock;
  SolverState state = init ? std::move(*init) : initial_state();
  check_state(factors_, state);

  const auto start = Clock::now();
  auto evaluate = [&]() {
    IterationReport r = report(state);
    r.elapsed_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    r.status = check_termination(r, cfg_, problem_);
    return r;
  };

  SolveResult result;
  std::optional<IterationReport> last;
  for (std::size_t k = 0; k < cfg_.max_iters; ++k) {
    iterate(state);
    if (state.iter % cfg_.check_every == 0) {
      last = evaluate();
      result.trace.push_back(*last);
      if (last->status != SolveStatus::kRunning) break;
    }
  }
  if (!last || last->iter != state.iter) {
    last = evaluate();
    result.trace.push_back(*last);
  }
  if (last->status == SolveStatus::kRunning) {
    last->status = SolveStatus::kMaxIters;
    result.trace.back().status = SolveStatus::kMaxIters;
  }

  result.report = *last;
  result.x = state.x;
  result.lambda = state.lambda;
  result.state = std::move(state);
  return result;
}

SolveResult solve(const ProblemInstance& p, const SolverConfig& cfg,
                  std::optional<SolverState> init) {
  AdmmSolver solver(p, cfg);
  return solver.solve(std::move(init));
}

}  // namespace conefree
