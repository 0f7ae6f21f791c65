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

#ifndef CONEFREE_IO_H_
#define CONEFREE_IO_H_

// Text formats.
//
// Problem file (zero-based indices, '#' lines are comments):
//
//   CONEPROB 1
//   m n nnz
//   CONES k s_1 ... s_k
//   i j value        (nnz lines, column-major when written)
//   b_i              (m lines)
//   c_j              (n lines)
//
// Values are written as the shortest decimal that round-trips, so
// parse(write(p)) == p bitwise.
//
// Solution file:
//
//   STATUS solved|max_iters|diverged
//   POBJ v
//   DOBJ v
//   ITERS n
//   x_j              (n lines)
//   lambda_i         (m lines)
//
// preceded by '#' lines documenting the sign convention and the residuals
// the solver reported.

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "conefree/admm.h"
#include "conefree/instance_gen.h"
#include "conefree/problem.h"

namespace conefree::io {

class ParseError : public std::runtime_error {
 public:
  enum class Kind {
    kMalformed,
    kDimensionMismatch,
    kDuplicateEntry,
    kNonFinite,
    kInvalidValue,
  };

  ParseError(Kind kind, std::size_t line, const std::string& message);

  Kind kind() const { return kind_; }
  // 1-based physical line number; 0 when the error is not tied to a line.
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

// Shortest round-trip decimal.
std::string format_double(double v);

std::string write_problem(const ProblemInstance& p);
void write_problem(std::ostream& out, const ProblemInstance& p);
ProblemInstance parse_problem(std::string_view text);

struct Solution {
  SolveStatus status = SolveStatus::kRunning;
  double pobj = 0.0;
  double dobj = 0.0;
  std::size_t iters = 0;
  std::vector<double> x;
  std::vector<double> lambda;
};

std::string write_solution(const SolveResult& result);
// The solution file does not carry m and n; they come from the problem.
Solution parse_solution(std::string_view text, std::size_t m, std::size_t n);

// Trace CSV: one row per evaluated report.
std::string trace_csv(const std::vector<IterationReport>& trace);

struct BenchRow {
  std::size_t instance_id = 0;
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t nnz = 0;
  double density = 0.0;
  ConeKind cone_kind = ConeKind::kLp;
  double mu = 1.0;
  TerminationMode term_mode = TerminationMode::kScs;
  std::size_t iters = 0;
  double time_ms = 0.0;
  double prim_res_2 = 0.0;
  double dual_res_2 = 0.0;
  double gap = 0.0;
  double cone_gap = 0.0;
  SolveStatus status = SolveStatus::kRunning;
};

inline constexpr std::string_view kBenchHeader =
    "instance_id,m,n,nnz,density,cone_kind,mu,term_mode,iters,time_ms,"
    "prim_res_2,dual_res_2,gap,cone_gap,status";

std::string bench_csv(const std::vector<BenchRow>& rows);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace conefree::io

#endif  // CONEFREE_IO_H_
