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

#include "conefree/cli.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "conefree/admm.h"
#include "conefree/instance_gen.h"
#include "conefree/io.h"
#include "conefree/parallel.h"

namespace conefree::cli {

namespace {

struct SolveOptions {
  std::string problem_path;
  double mu = 1.0;
  std::size_t max_iters = 100000;
  std::size_t check_every = 25;
  std::string term = "scs";
  std::optional<double> eps_abs;
  std::optional<double> eps_rel;
  std::optional<double> eps;
  std::optional<double> target_prim;
  std::optional<double> target_gap;
  std::string out_path;
  std::string trace_path;
};

struct GenerateOptions {
  std::size_t m = 0;
  std::size_t n = 0;
  double density = 0.0;
  std::string cone = "lp";
  std::uint64_t seed = 0;
  std::string out_path;
  bool raw_c = false;
};

struct BenchOptions {
  std::vector<double> sizes;
  std::vector<double> densities;
  std::string cone = "lp";
  std::uint64_t seed = 0;
  std::string out_path;
  double aspect = 4.0;
  std::vector<double> mus{1.0};
  std::size_t max_iters = 100000;
  std::size_t check_every = 25;
  std::string term = "scs";
  double eps = 1e-3;
  bool raw_c = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int exit_code_for(SolveStatus status) {
  switch (status) {
    case SolveStatus::kSolved:
      return kExitOk;
    case SolveStatus::kMaxIters:
    case SolveStatus::kRunning:
      return kExitMaxIters;
    case SolveStatus::kDiverged:
      return kExitDiverged;
  }
  return kExitUsage;
}

TerminationMode termination_mode_or_throw(const std::string& text) {
  const auto mode = parse_termination_mode(text);
  if (!mode) {
    throw UsageError(fmt::format("--term: unknown mode '{}'", text));
  }
  return *mode;
}

ConeKind cone_kind_or_throw(const std::string& text) {
  const auto kind = parse_cone_kind(text);
  if (!kind) throw UsageError(fmt::format("--cone: unknown cone '{}'", text));
  return *kind;
}

int run_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err) {
  SolverConfig cfg;
  cfg.mu = opt.mu;
  cfg.max_iters = opt.max_iters;
  cfg.check_every = opt.check_every;
  cfg.term_mode = termination_mode_or_throw(opt.term);
  if (opt.eps_abs) cfg.eps_abs = *opt.eps_abs;
  if (opt.eps_rel) cfg.eps_rel = *opt.eps_rel;
  if (opt.eps) cfg.eps_prim = cfg.eps_dual = cfg.eps_gap = *opt.eps;
  cfg.target_prim_res = opt.target_prim;
  cfg.target_gap = opt.target_gap;
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  const ProblemInstance p = io::parse_problem(io::read_file(opt.problem_path));
  const SolveResult result = solve(p, cfg);

  const std::string solution = io::write_solution(result);
  if (opt.out_path.empty()) {
    out << solution;
  } else {
    io::write_file(opt.out_path, solution);
  }
  if (!opt.trace_path.empty()) {
    io::write_file(opt.trace_path, io::trace_csv(result.trace));
  }
  const IterationReport& r = result.report;
  err << fmt::format(
      "{} after {} iterations: pobj {:.9g} dobj {:.9g} prim_res {:.3e} "
      "dual_res {:.3e} gap {:.3e}\n",
      to_string(r.status), r.iter, r.pobj, r.dobj, r.prim_res_2, r.dual_res_2,
      r.gap);
  return exit_code_for(r.status);
}

int run_generate(const GenerateOptions& opt, std::ostream& out) {
  GenSpec spec;
  spec.m = opt.m;
  spec.n = opt.n;
  spec.density = opt.density;
  spec.cone_kind = cone_kind_or_throw(opt.cone);
  spec.seed = opt.seed;
  spec.bounded_mode = !opt.raw_c;
  GeneratedInstance inst;
  try {
    inst = generate(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const std::string text = io::write_problem(inst.problem);
  if (opt.out_path.empty()) {
    out << text;
  } else {
    io::write_file(opt.out_path, text);
  }
  return kExitOk;
}

// Picks m x n with n ~ aspect * m and m n density ~ target nnz.
std::pair<std::size_t, std::size_t> bench_shape(double target_nnz,
                                                double density, double aspect,
                                                ConeKind kind) {
  const double cells = target_nnz / density;
  auto m = static_cast<std::size_t>(std::llround(std::sqrt(cells / aspect)));
  m = std::max<std::size_t>(m, 1);
  auto n = static_cast<std::size_t>(std::llround(cells / static_cast<double>(m)));
  n = std::max<std::size_t>(n, 1);
  if (kind == ConeKind::kSocp4) n = ((n + 3) / 4) * 4;
  return {m, n};
}

int run_bench(const BenchOptions& opt, std::ostream& err) {
  const ConeKind kind = cone_kind_or_throw(opt.cone);
  SolverConfig base;
  base.max_iters = opt.max_iters;
  base.check_every = opt.check_every;
  base.term_mode = termination_mode_or_throw(opt.term);
  base.eps_prim = base.eps_dual = base.eps_gap = opt.eps;
  if (base.term_mode == TerminationMode::kTarget) {
    throw UsageError("--term target is not available for bench");
  }
  if (!(opt.aspect > 0.0)) throw UsageError("--aspect must be positive");
  if (opt.mus.empty()) throw UsageError("--mu needs at least one value");
  for (double mu : opt.mus) {
    SolverConfig cfg = base;
    cfg.mu = mu;
    try {
      cfg.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(fmt::format("--mu {}: {}", mu, e.what()));
    }
  }

  std::vector<io::BenchRow> rows;
  std::size_t next_id = 0;
  for (double size : opt.sizes) {
    for (double density : opt.densities) {
      if (!(size >= 1.0)) throw UsageError("--sizes entries must be >= 1");
      if (!(density > 0.0 && density <= 1.0)) {
        throw UsageError("--densities entries must lie in (0, 1]");
      }
      const auto [m, n] = bench_shape(size, density, opt.aspect, kind);
      const std::size_t id = next_id++;
      GenSpec spec{m, n, density, kind, opt.seed + id, !opt.raw_c};
      GeneratedInstance inst;
      try {
        inst = generate(spec);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }

      for (double mu : opt.mus) {
        SolverConfig cfg = base;
        cfg.mu = mu;
        const auto start = std::chrono::steady_clock::now();
        const SolveResult result = solve(inst.problem, cfg);
        const double ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start)
                              .count();

        const IterationReport& r = result.report;
        rows.push_back(io::BenchRow{id, m, n, inst.problem.nnz(), density,
                                    kind, cfg.mu, cfg.term_mode, r.iter, ms,
                                    r.prim_res_2, r.dual_res_2, r.gap,
                                    r.cone_gap, r.status});
        err << fmt::format(
            "instance {}: {}x{} nnz {} mu {} -> {} in {} iters, {:.1f} ms\n",
            id, m, n, inst.problem.nnz(), mu, to_string(r.status), r.iter, ms);
      }
    }
  }
  io::write_file(opt.out_path, io::bench_csv(rows));
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Matrix-free ADMM solver for sparse LP / SOCP", "conefree"};
  app.require_subcommand(1);

  SolveOptions solve_opt;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a problem file");
  solve_cmd->add_option("file", solve_opt.problem_path, "Problem file")
      ->required();
  solve_cmd->add_option("--mu", solve_opt.mu, "Penalty parameter (> 0)");
  solve_cmd->add_option("--max-iters", solve_opt.max_iters, "Iteration limit");
  solve_cmd->add_option("--check-every", solve_opt.check_every,
                        "Residual evaluation period");
  solve_cmd->add_option("--term", solve_opt.term, "osqp | scs | target");
  solve_cmd->add_option("--eps-abs", solve_opt.eps_abs, "osqp absolute tol");
  solve_cmd->add_option("--eps-rel", solve_opt.eps_rel, "osqp relative tol");
  solve_cmd->add_option("--eps", solve_opt.eps,
                        "scs primal, dual and gap tolerance");
  solve_cmd->add_option("--target-prim", solve_opt.target_prim,
                        "target mode: primal residual to beat");
  solve_cmd->add_option("--target-gap", solve_opt.target_gap,
                        "target mode: |gap| to beat");
  solve_cmd->add_option("--out", solve_opt.out_path,
                        "Solution file (default stdout)");
  solve_cmd->add_option("--trace", solve_opt.trace_path, "Trace CSV");

  GenerateOptions gen_opt;
  auto* gen_cmd = app.add_subcommand("generate", "Generate a random instance");
  gen_cmd->add_option("--m", gen_opt.m, "Rows")->required();
  gen_cmd->add_option("--n", gen_opt.n, "Columns")->required();
  gen_cmd->add_option("--density", gen_opt.density, "Nonzero fraction")
      ->required();
  gen_cmd->add_option("--cone", gen_opt.cone, "lp | socp4");
  gen_cmd->add_option("--seed", gen_opt.seed, "RNG seed");
  gen_cmd->add_option("--out", gen_opt.out_path,
                      "Problem file (default stdout)");
  gen_cmd->add_flag("--raw-c", gen_opt.raw_c,
                    "Draw c i.i.d. normal (may be unbounded)");

  BenchOptions bench_opt;
  auto* bench_cmd = app.add_subcommand("bench", "Run a generate+solve sweep");
  bench_cmd->add_option("--sizes", bench_opt.sizes, "Target nnz list")
      ->required()
      ->delimiter(',');
  bench_cmd->add_option("--densities", bench_opt.densities, "Density list")
      ->required()
      ->delimiter(',');
  bench_cmd->add_option("--cone", bench_opt.cone, "lp | socp4");
  bench_cmd->add_option("--seed", bench_opt.seed, "Base seed");
  bench_cmd->add_option("--out", bench_opt.out_path, "CSV output")->required();
  bench_cmd->add_option("--aspect", bench_opt.aspect, "n / m ratio");
  bench_cmd->add_option("--mu", bench_opt.mus, "Penalty parameter list")
      ->delimiter(',');
  bench_cmd->add_option("--max-iters", bench_opt.max_iters, "Iteration limit");
  bench_cmd->add_option("--check-every", bench_opt.check_every,
                        "Residual evaluation period");
  bench_cmd->add_option("--term", bench_opt.term, "osqp | scs");
  bench_cmd->add_option("--eps", bench_opt.eps, "scs tolerance");
  bench_cmd->add_flag("--raw-c", bench_opt.raw_c, "Draw c i.i.d. normal");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    configure_threads_from_env();
    if (solve_cmd->parsed()) return run_solve(solve_opt, out, err);
    if (gen_cmd->parsed()) return run_generate(gen_opt, out);
    if (bench_cmd->parsed()) return run_bench(bench_opt, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace conefree::cli
