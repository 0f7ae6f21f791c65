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

#include <cmath>
#include <limits>

#include "conefree/instance_gen.h"
#include "conefree/reference_oracle.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace conefree {
namespace {

using testing::lp_1x1;
using testing::lp_2var;
using testing::random_vector;
using testing::rel_diff;
using testing::socp_4;
using V = std::vector<double>;

// One nonzero a = 1 at (0, 0): fu = fv = 1/2.
ProblemInstance single_entry(double b) {
  ProblemInstance p;
  p.A = {1, 1, {{0, 0, 1.0}}};
  p.b = {b};
  p.c = {0.0};
  p.cones = ConeSpec::nonnegative(1);
  return p;
}

SolverState random_state(std::size_t m, std::size_t n, std::size_t o,
                         Rng& rng) {
  SolverState s;
  s.x = random_vector(n, rng);
  s.y = random_vector(o, rng);
  s.z = random_vector(n, rng);
  s.lambda = random_vector(m, rng);
  s.gamma = random_vector(o, rng);
  s.delta = random_vector(n, rng);
  return s;
}

GeneratedInstance small_instance(std::uint64_t seed, ConeKind kind) {
  Rng rng(seed);
  GenSpec spec;
  spec.m = 5 + rng.uniform_below(36);
  spec.n = 4 * (2 + rng.uniform_below(9));
  spec.density = 0.05 + 0.25 * rng.uniform01();
  spec.cone_kind = kind;
  spec.seed = seed;
  return generate(spec);
}

TEST(XUpdateTest, ZeroIsFixedPoint) {
  const ProblemInstance p = testing::example1_problem();
  const UVFactors f = build_uv(p.A);
  SolverState s = SolverState::zeros(3, 5, 8);
  Workspace work(3, 5, 8);
  x_update(f, s, SolverConfig{}, p.c, work);
  EXPECT_EQ(s.x, V(5, 0.0));
}

TEST(XUpdateTest, HandValue) {
  const ProblemInstance p = single_entry(0.0);
  const UVFactors f = build_uv(p.A);
  SolverState s = SolverState::zeros(1, 1, 1);
  s.y = {2.0};
  Workspace work(1, 1, 1);
  x_update(f, s, SolverConfig{}, p.c, work);
  EXPECT_EQ(s.x, V{1.0});
}

TEST(YUpdateTest, HandValue) {
  const ProblemInstance p = single_entry(1.0);
  const UVFactors f = build_uv(p.A);
  SolverState s = SolverState::zeros(1, 1, 1);
  Workspace work(1, 1, 1);
  y_update(f, s, SolverConfig{}, p.b, work);
  EXPECT_EQ(s.y, V{0.5});
}

TEST(YUpdateTest, ZeroInputsGiveZero) {
  const ProblemInstance p = testing::example1_problem();
  const UVFactors f = build_uv(p.A);
  SolverState s = SolverState::zeros(3, 5, 8);
  Workspace work(3, 5, 8);
  y_update(f, s, SolverConfig{}, p.b, work);
  EXPECT_EQ(s.y, V(8, 0.0));
}

TEST(ZUpdateTest, Examples) {
  SolverConfig cfg;
  {
    const ConeWorkview view(ConeSpec::nonnegative(1));
    SolverState s = SolverState::zeros(1, 1, 1);
    s.x = {-3.0};
    Workspace work(1, 1, 1);
    z_update(view, s, cfg, work);
    EXPECT_EQ(s.z, V{0.0});
  }
  {
    const ConeWorkview view(ConeSpec{{4}});
    SolverState s = SolverState::zeros(1, 4, 1);
    s.x = {3, 0, 0, 4};
    Workspace work(1, 4, 1);
    z_update(view, s, cfg, work);
    EXPECT_EQ(s.z, (V{3.5, 0, 0, 3.5}));
    s.x = {2, 1, 1, 1};
    z_update(view, s, cfg, work);
    EXPECT_EQ(s.z, s.x);
  }
}

TEST(DualUpdateTest, HandValue) {
  const ProblemInstance p = single_entry(0.0);
  const UVFactors f = build_uv(p.A);
  SolverState s = SolverState::zeros(1, 1, 1);
  s.y = {1.0};
  SolverConfig cfg;
  cfg.mu = 2.0;
  Workspace work(1, 1, 1);
  dual_update(f, s, cfg, p.b, work);
  EXPECT_EQ(s.lambda, V{2.0});
}

TEST(DualUpdateTest, FixedPointLeavesMultipliersUnchanged) {
  // x = z = (1), y = V'x, U y = b.
  const ProblemInstance p = single_entry(1.0);
  const UVFactors f = build_uv(p.A);
  SolverState s = SolverState::zeros(1, 1, 1);
  s.x = s.z = s.y = {1.0};
  s.lambda = {0.3};
  s.gamma = {-0.2};
  s.delta = {0.7};
  const SolverState before = s;
  Workspace work(1, 1, 1);
  dual_update(f, s, SolverConfig{}, p.b, work);
  EXPECT_EQ(s, before);
}

// Each step on a random state against explicit dense formulas.
TEST(StepTest, RandomStatesMatchDenseFormulas) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const GeneratedInstance g = small_instance(seed, ConeKind::kLp);
    const ProblemInstance& p = g.problem;
    const UVFactors f = build_uv(p.A);
    const oracle::DenseMirror d = oracle::dense_assemble(p, f);
    const std::size_t m = f.num_rows(), n = f.num_cols(), o = f.nnz();
    Rng rng(seed + 1000);
    SolverConfig cfg;
    cfg.mu = 0.5 + rng.uniform01();
    const double mu = cfg.mu;
    const SolverState s0 = random_state(m, n, o, rng);
    Workspace work(m, n, o);

    // x: (I + V V')^{-1} [V(y + gamma/mu) + z + delta/mu - c/mu].
    SolverState s = s0;
    x_update(f, s, cfg, p.c, work);
    {
      V g_vec(o);
      for (std::size_t k = 0; k < o; ++k) g_vec[k] = s0.y[k] + s0.gamma[k] / mu;
      V rhs = d.V.multiply(g_vec);
      const oracle::DenseMatrix vvt = oracle::gram(d.V);
      for (std::size_t j = 0; j < n; ++j) {
        rhs[j] = (rhs[j] + s0.z[j] + s0.delta[j] / mu - p.c[j] / mu) /
                 (1.0 + vvt(j, j));
      }
      EXPECT_LE(rel_diff(s.x, rhs), 1e-12);
    }

    // y: (I - U'(I + U U')^{-1} U) t.
    s = s0;
    y_update(f, s, cfg, p.b, work);
    {
      V sb(m);
      for (std::size_t i = 0; i < m; ++i) sb[i] = p.b[i] - s0.lambda[i] / mu;
      const V utb = d.U.transpose().multiply(sb);
      const V vtx = d.V.transpose().multiply(s0.x);
      V t(o);
      for (std::size_t k = 0; k < o; ++k) {
        t[k] = utb[k] + vtx[k] - s0.gamma[k] / mu;
      }
      const V want = oracle::dense_y_factor(d).multiply(t);
      EXPECT_LE(rel_diff(s.y, want), 1e-10);
    }

    // Multipliers.
    s = s0;
    dual_update(f, s, cfg, p.b, work);
    {
      const V uy = d.U.multiply(s0.y);
      const V vtx = d.V.transpose().multiply(s0.x);
      V lam(m), gam(o), del(n);
      for (std::size_t i = 0; i < m; ++i) {
        lam[i] = s0.lambda[i] + mu * (uy[i] - p.b[i]);
      }
      for (std::size_t k = 0; k < o; ++k) {
        gam[k] = s0.gamma[k] + mu * (s0.y[k] - vtx[k]);
      }
      for (std::size_t j = 0; j < n; ++j) {
        del[j] = s0.delta[j] + mu * (s0.z[j] - s0.x[j]);
      }
      EXPECT_LE(rel_diff(s.lambda, lam), 1e-12);
      EXPECT_LE(rel_diff(s.gamma, gam), 1e-12);
      EXPECT_LE(rel_diff(s.delta, del), 1e-12);
    }
  }
}

TEST(ReportTest, ExactKktPointHasZeroResiduals) {
  const ProblemInstance p = lp_2var();
  SolverState s = SolverState::zeros(1, 2, 2);
  s.x = s.z = {1.0, 0.0};
  s.lambda = {-1.0};
  const IterationReport r = compute_report(p, s);
  EXPECT_EQ(r.prim_res_inf, 0.0);
  EXPECT_EQ(r.prim_res_2, 0.0);
  EXPECT_EQ(r.dual_res_inf, 0.0);
  EXPECT_EQ(r.dual_res_2, 0.0);
  EXPECT_EQ(r.gap, 0.0);
  EXPECT_EQ(r.cone_gap, 0.0);
  EXPECT_EQ(r.pobj, 1.0);
  EXPECT_EQ(r.dobj, 1.0);
  EXPECT_EQ(r.status, SolveStatus::kRunning);
}

TEST(ReportTest, SocpKktPoint) {
  const ProblemInstance p = socp_4();
  SolverState s = SolverState::zeros(1, 4, 1);
  s.x = s.z = {2, 0, 0, 2};
  s.lambda = {1.0};
  const IterationReport r = compute_report(p, s);
  EXPECT_EQ(r.prim_res_2, 0.0);
  EXPECT_NEAR(r.dual_res_2, 0.0, 1e-15);
  EXPECT_EQ(r.gap, 0.0);
  EXPECT_EQ(r.pobj, -2.0);
}

TEST(ReportTest, ZeroStateGivesNormOfB) {
  ProblemInstance p = testing::example1_problem();
  p.b = {1.0, -4.0, 2.5};
  const IterationReport r = compute_report(p, SolverState::zeros(3, 5, 8));
  EXPECT_EQ(r.prim_res_inf, 4.0);
}

TEST(ReportTest, PrimalResidualMatchesDenseProduct) {
  const GeneratedInstance g = small_instance(77, ConeKind::kSocp4);
  const ProblemInstance& p = g.problem;
  const UVFactors f = build_uv(p.A);
  Rng rng(78);
  const SolverState s = random_state(f.num_rows(), f.num_cols(), f.nnz(), rng);
  V res = oracle::dense_from_triplets(p.A).multiply(s.x);
  for (std::size_t i = 0; i < res.size(); ++i) res[i] -= p.b[i];
  const IterationReport r = compute_report(p, s);
  EXPECT_NEAR(r.prim_res_inf, testing::max_abs(res),
              1e-12 * std::max(1.0, testing::max_abs(res)));
  const double two = std::sqrt(testing::plain_dot(res, res));
  EXPECT_NEAR(r.prim_res_2, two, 1e-12 * std::max(1.0, two));
}

TEST(ReportTest, NonFiniteStateIsDiverged) {
  const ProblemInstance p = lp_1x1();
  SolverState s = SolverState::zeros(1, 1, 1);
  s.gamma[0] = std::numeric_limits<double>::quiet_NaN();
  EXPECT_EQ(compute_report(p, s).status, SolveStatus::kDiverged);
}

TEST(TerminationTest, ZeroResidualsSolveInEveryMode) {
  const ProblemInstance p = lp_1x1();
  IterationReport r;
  for (TerminationMode mode : {TerminationMode::kOsqp, TerminationMode::kScs,
                               TerminationMode::kTarget}) {
    SolverConfig cfg;
    cfg.term_mode = mode;
    cfg.target_prim_res = 1e-6;
    cfg.target_gap = 1e-6;
    EXPECT_EQ(check_termination(r, cfg, p), SolveStatus::kSolved)
        << to_string(mode);
  }
}

TEST(TerminationTest, ScsBoundIsInclusive) {
  ProblemInstance p = lp_1x1();
  p.b = {4.0};  // ||b||_2 = 4, ||c||_2 = 1
  SolverConfig cfg;
  IterationReport r;
  r.prim_res_2 = cfg.eps_prim * (1.0 + 4.0);
  r.dual_res_2 = cfg.eps_dual * (1.0 + 1.0);
  EXPECT_EQ(check_termination(r, cfg, p), SolveStatus::kSolved);
  r.prim_res_2 = std::nextafter(r.prim_res_2, 1.0);
  EXPECT_EQ(check_termination(r, cfg, p), SolveStatus::kRunning);
}

TEST(TerminationTest, ScsGapUsesAbsoluteValue) {
  const ProblemInstance p = lp_1x1();
  SolverConfig cfg;
  IterationReport r;
  r.pobj = 1.0;
  r.dobj = 2.0;  // b'lambda = -2
  r.gap = -1.0;
  EXPECT_EQ(check_termination(r, cfg, p), SolveStatus::kRunning);
}

TEST(TerminationTest, OsqpBoundIsStrict) {
  const ProblemInstance p = lp_1x1();  // ||b||_inf = ||c||_inf = 1
  SolverConfig cfg;
  cfg.term_mode = TerminationMode::kOsqp;
  IterationReport r;
  const double eps_prim = cfg.eps_abs + cfg.eps_rel * 1.0;
  r.prim_res_inf = std::nextafter(eps_prim, 1.0);
  EXPECT_EQ(check_termination(r, cfg, p), SolveStatus::kRunning);
  r.prim_res_inf = eps_prim;
  EXPECT_EQ(check_termination(r, cfg, p), SolveStatus::kRunning);
  r.prim_res_inf = std::nextafter(eps_prim, 0.0);
  EXPECT_EQ(check_termination(r, cfg, p), SolveStatus::kSolved);
}

TEST(TerminationTest, TargetMode) {
  const ProblemInstance p = lp_1x1();
  SolverConfig cfg;
  cfg.term_mode = TerminationMode::kTarget;
  cfg.target_prim_res = 1e-3;
  cfg.target_gap = 1e-2;
  IterationReport r;
  r.prim_res_2 = 5e-4;
  r.gap = -5e-3;
  r.dual_res_2 = 100.0;  // ignored in target mode
  EXPECT_EQ(check_termination(r, cfg, p), SolveStatus::kSolved);
  r.gap = -2e-2;
  EXPECT_EQ(check_termination(r, cfg, p), SolveStatus::kRunning);
}

TEST(TerminationTest, DivergedStaysDiverged) {
  IterationReport r;
  r.status = SolveStatus::kDiverged;
  EXPECT_EQ(check_termination(r, SolverConfig{}, lp_1x1()),
            SolveStatus::kDiverged);
}

TEST(SolverConfigTest, Validation) {
  SolverConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.mu = 0.0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = SolverConfig{};
  cfg.check_every = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = SolverConfig{};
  cfg.term_mode = TerminationMode::kTarget;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg.target_prim_res = 1e-3;
  cfg.target_gap = 1e-3;
  EXPECT_NO_THROW(cfg.validate());
}

TEST(AdmmSolverTest, RejectsBadInputs) {
  ProblemInstance p = lp_1x1();
  SolverConfig cfg;
  cfg.mu = -1.0;
  EXPECT_THROW((void)AdmmSolver(p, cfg), std::invalid_argument);
  p.cones = ConeSpec{{2}};
  EXPECT_THROW((void)AdmmSolver(p, SolverConfig{}), std::invalid_argument);
  AdmmSolver ok(lp_2var(), SolverConfig{});
  EXPECT_THROW(ok.solve(SolverState::zeros(1, 1, 1)), std::invalid_argument);
}

TEST(AdmmSolverTest, NonFiniteInitDiverges) {
  const ProblemInstance p = lp_1x1();
  SolverState init = SolverState::zeros(1, 1, 1);
  init.delta[0] = std::numeric_limits<double>::infinity();
  SolverConfig cfg;
  cfg.check_every = 1;
  const SolveResult r = solve(p, cfg, init);
  EXPECT_EQ(r.report.status, SolveStatus::kDiverged);
  EXPECT_EQ(r.report.iter, 1u);
}

TEST(AdmmSolverTest, GaussSeidelOrder) {
  // y must consume the x computed earlier in the same iteration.
  const ProblemInstance p = lp_2var();
  AdmmSolver solver(p, SolverConfig{});
  const UVFactors& f = solver.factors();
  SolverState s = solver.initial_state();
  s.z = {0.8, 0.4};

  SolverState jacobi = s;
  Workspace work(1, 2, 2);
  y_update(f, jacobi, solver.config(), p.b, work);

  solver.iterate(s);
  double diff = 0.0;
  for (std::size_t k = 0; k < 2; ++k) {
    diff = std::max(diff, std::abs(s.y[k] - jacobi.y[k]));
  }
  EXPECT_GT(diff, 1e-6);

  SolverState seidel = solver.initial_state();
  seidel.z = {0.8, 0.4};
  x_update(f, seidel, solver.config(), p.c, work);
  y_update(f, seidel, solver.config(), p.b, work);
  EXPECT_EQ(s.y, seidel.y);
}

TEST(AdmmSolverTest, IterateMatchesDenseOracle) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    for (ConeKind kind : {ConeKind::kLp, ConeKind::kSocp4}) {
      const GeneratedInstance g = small_instance(seed, kind);
      SolverConfig cfg;
      cfg.mu = 0.3 + seed * 0.2;
      AdmmSolver solver(g.problem, cfg);
      const oracle::DenseMirror d =
          oracle::dense_assemble(g.problem, solver.factors());
      SolverState fast = solver.initial_state();
      SolverState dense = fast;
      for (int it = 0; it < 200; ++it) {
        solver.iterate(fast);
        dense = oracle::dense_iterate(d, dense, cfg);
      }
      EXPECT_EQ(fast.iter, dense.iter);
      EXPECT_LE(rel_diff(fast.x, dense.x), 1e-10);
      EXPECT_LE(rel_diff(fast.y, dense.y), 1e-10);
      EXPECT_LE(rel_diff(fast.z, dense.z), 1e-10);
      EXPECT_LE(rel_diff(fast.lambda, dense.lambda), 1e-10);
      EXPECT_LE(rel_diff(fast.gamma, dense.gamma), 1e-10);
      EXPECT_LE(rel_diff(fast.delta, dense.delta), 1e-10);
    }
  }
}

TEST(AdmmSolverTest, OneByOneMatchesDenseExactly) {
  const ProblemInstance p = lp_1x1();
  SolverConfig cfg;
  AdmmSolver solver(p, cfg);
  const oracle::DenseMirror d = oracle::dense_assemble(p, solver.factors());
  SolverState fast = solver.initial_state();
  SolverState dense = fast;
  solver.iterate(fast);
  dense = oracle::dense_iterate(d, dense, cfg);
  // Hand check of the first iteration: x = -1/2, t = 1/2, y = 1/4, z = 0,
  // lambda = -3/4, gamma = 3/4, delta = 1/2.
  EXPECT_EQ(fast.x, V{-0.5});
  EXPECT_EQ(fast.y, V{0.25});
  EXPECT_EQ(fast.z, V{0.0});
  EXPECT_EQ(fast.lambda, V{-0.75});
  EXPECT_EQ(fast.gamma, V{0.75});
  EXPECT_EQ(fast.delta, V{0.5});
  for (int it = 1; it < 100; ++it) {
    solver.iterate(fast);
    dense = oracle::dense_iterate(d, dense, cfg);
  }
  EXPECT_EQ(fast, dense);
}

TEST(AdmmSolverTest, ZStaysInConeEveryIteration) {
  const GeneratedInstance g = small_instance(5, ConeKind::kSocp4);
  AdmmSolver solver(g.problem, SolverConfig{});
  const ConeWorkview view(g.problem.cones);
  SolverState s = solver.initial_state();
  for (int it = 0; it < 500; ++it) {
    solver.iterate(s);
    const double tol =
        1e-12 * (1.0 + std::sqrt(testing::plain_dot(s.z, s.z)));
    ASSERT_TRUE(in_cone(view, s.z, tol)) << "iteration " << s.iter;
  }
}

TEST(AdmmSolverTest, DeterministicTraces) {
  const GeneratedInstance g = small_instance(9, ConeKind::kLp);
  SolverConfig cfg;
  cfg.max_iters = 3000;
  cfg.check_every = 10;
  const SolveResult a = solve(g.problem, cfg);
  const SolveResult b = solve(g.problem, cfg);
  EXPECT_EQ(a.state, b.state);
  ASSERT_EQ(a.trace.size(), b.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i) {
    EXPECT_EQ(a.trace[i].prim_res_2, b.trace[i].prim_res_2);
    EXPECT_EQ(a.trace[i].dual_res_2, b.trace[i].dual_res_2);
    EXPECT_EQ(a.trace[i].gap, b.trace[i].gap);
    EXPECT_EQ(a.trace[i].status, b.trace[i].status);
  }
}

TEST(AdmmSolverTest, TraceStatusesAreMonotone) {
  const GeneratedInstance g = small_instance(3, ConeKind::kLp);
  SolverConfig cfg;
  cfg.max_iters = 1000;
  cfg.check_every = 7;
  const SolveResult r = solve(g.problem, cfg);
  ASSERT_FALSE(r.trace.empty());
  for (std::size_t i = 0; i + 1 < r.trace.size(); ++i) {
    EXPECT_EQ(r.trace[i].status, SolveStatus::kRunning);
    EXPECT_LT(r.trace[i].iter, r.trace[i + 1].iter);
  }
  EXPECT_NE(r.trace.back().status, SolveStatus::kRunning);
  EXPECT_EQ(r.trace.back().iter, r.report.iter);
}

TEST(AdmmSolverTest, MaxItersReportsFinalIterate) {
  SolverConfig cfg;
  cfg.max_iters = 10;
  cfg.check_every = 4;  // 10 is not a multiple
  const SolveResult r = solve(small_instance(4, ConeKind::kLp).problem, cfg);
  EXPECT_EQ(r.report.status, SolveStatus::kMaxIters);
  EXPECT_EQ(r.report.iter, 10u);
  EXPECT_EQ(r.trace.size(), 3u);  // 4, 8, 10
}

struct Fixture {
  const char* name;
  ProblemInstance problem;
  V x_star;
  double pobj;
};

std::vector<Fixture> fixtures() {
  return {{"lp_1x1", lp_1x1(), {1.0}, 1.0},
          {"lp_2var", lp_2var(), {1.0, 0.0}, 1.0},
          {"socp_4", socp_4(), {2.0, 0.0, 0.0, 2.0}, -2.0}};
}

TEST(AnalyticFixtureTest, SolvesToKktPoint) {
  for (const Fixture& fx : fixtures()) {
    SolverConfig cfg;
    cfg.max_iters = 20000;
    cfg.check_every = 1;
    cfg.term_mode = TerminationMode::kTarget;
    cfg.target_prim_res = 1e-7;
    cfg.target_gap = 1e-7;
    const SolveResult r = solve(fx.problem, cfg);
    EXPECT_EQ(r.report.status, SolveStatus::kSolved) << fx.name;
    double err = 0.0;
    for (std::size_t j = 0; j < fx.x_star.size(); ++j) {
      err = std::max(err, std::abs(r.x[j] - fx.x_star[j]));
    }
    EXPECT_LE(err, 1e-5) << fx.name;
    EXPECT_LE(std::abs(r.report.gap), 1e-6) << fx.name;
    EXPECT_NEAR(r.report.pobj, fx.pobj, 1e-5) << fx.name;
  }
}

TEST(AnalyticFixtureTest, ResidualsDoNotGrosslyGrow) {
  for (const Fixture& fx : fixtures()) {
    AdmmSolver solver(fx.problem, SolverConfig{});
    SolverState s = solver.initial_state();
    std::vector<IterationReport> at(101);
    for (std::size_t it = 1; it <= 100; ++it) {
      solver.iterate(s);
      at[it] = solver.report(s);
    }
    for (std::size_t k = 1; k <= 10; ++k) {
      EXPECT_LE(at[10 * k].prim_res_2, 10.0 * at[k].prim_res_2 + 1e-14)
          << fx.name << " k=" << k;
      EXPECT_LE(std::abs(at[10 * k].gap), 10.0 * std::abs(at[k].gap) + 1e-14)
          << fx.name << " k=" << k;
    }
  }
}

TEST(ParseTerminationModeTest, RoundTrip) {
  for (TerminationMode mode : {TerminationMode::kOsqp, TerminationMode::kScs,
                               TerminationMode::kTarget}) {
    EXPECT_EQ(parse_termination_mode(to_string(mode)), mode);
  }
  EXPECT_FALSE(parse_termination_mode("pogs"));
}

}  // namespace
}  // namespace conefree
