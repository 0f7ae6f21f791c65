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

#include "conefree/io.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include <fmt/format.h>

namespace conefree::io {

ParseError::ParseError(Kind kind, std::size_t line, const std::string& message)
    : std::runtime_error(line > 0 ? fmt::format("line {}: {}", line, message)
                                  : message),
      kind_(kind),
      line_(line) {}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

using Kind = ParseError::Kind;

// Walks the data lines of a text, skipping blank and '#' lines.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  // Returns false at end of input.
  bool next(std::vector<std::string_view>& tokens) {
    while (pos_ < text_.size()) {
      std::size_t end = text_.find('\n', pos_);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view line = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      tokenize(line, tokens);
      if (tokens.empty() || tokens.front().front() == '#') continue;
      return true;
    }
    return false;
  }

  std::size_t line() const { return line_no_; }

  void require(std::vector<std::string_view>& tokens, const char* what) {
    if (!next(tokens)) {
      throw ParseError(Kind::kMalformed, line_no_,
                       fmt::format("unexpected end of file, expected {}", what));
    }
  }

 private:
  static void tokenize(std::string_view line,
                       std::vector<std::string_view>& tokens) {
    tokens.clear();
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      const std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
      if (i > start) tokens.push_back(line.substr(start, i - start));
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
};

std::size_t parse_count(std::string_view token, std::size_t line,
                        const char* what) {
  std::size_t value = 0;
  const auto res =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (res.ec != std::errc() || res.ptr != token.data() + token.size()) {
    throw ParseError(Kind::kMalformed, line,
                     fmt::format("{} '{}' is not a nonnegative integer", what,
                                 token));
  }
  return value;
}

double parse_real(std::string_view token, std::size_t line, const char* what) {
  // from_chars rejects a leading '+'.
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double value = 0.0;
  const auto res =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (res.ec != std::errc() || res.ptr != token.data() + token.size()) {
    throw ParseError(Kind::kMalformed, line,
                     fmt::format("{} '{}' is not a number", what, token));
  }
  if (!std::isfinite(value)) {
    throw ParseError(Kind::kNonFinite, line,
                     fmt::format("{} is not finite", what));
  }
  return value;
}

void expect_tokens(const std::vector<std::string_view>& tokens,
                   std::size_t count, std::size_t line, const char* what) {
  if (tokens.size() != count) {
    throw ParseError(Kind::kMalformed, line,
                     fmt::format("expected {} with {} fields, got {}", what,
                                 count, tokens.size()));
  }
}

}  // namespace

void write_problem(std::ostream& out, const ProblemInstance& p) {
  TripletMatrix a = p.A;
  sort_canonical(a);
  out << "CONEPROB 1\n";
  out << a.num_rows << ' ' << a.num_cols << ' ' << a.nnz() << '\n';
  out << "CONES " << p.cones.block_sizes.size();
  for (std::size_t s : p.cones.block_sizes) out << ' ' << s;
  out << '\n';
  for (const Triplet& t : a.entries) {
    out << t.row << ' ' << t.col << ' ' << format_double(t.value) << '\n';
  }
  for (double v : p.b) out << format_double(v) << '\n';
  for (double v : p.c) out << format_double(v) << '\n';
}

std::string write_problem(const ProblemInstance& p) {
  std::ostringstream out;
  write_problem(out, p);
  return out.str();
}

ProblemInstance parse_problem(std::string_view text) {
  LineReader reader(text);
  std::vector<std::string_view> tok;

  reader.require(tok, "header");
  if (tok.size() != 2 || tok[0] != "CONEPROB" || tok[1] != "1") {
    throw ParseError(Kind::kMalformed, reader.line(),
                     "malformed header, expected 'CONEPROB 1'");
  }

  reader.require(tok, "'m n nnz'");
  expect_tokens(tok, 3, reader.line(), "size line");
  ProblemInstance p;
  const std::size_t m = parse_count(tok[0], reader.line(), "m");
  const std::size_t n = parse_count(tok[1], reader.line(), "n");
  const std::size_t nnz = parse_count(tok[2], reader.line(), "nnz");
  p.A.num_rows = m;
  p.A.num_cols = n;

  reader.require(tok, "CONES line");
  if (tok.size() < 2 || tok[0] != "CONES") {
    throw ParseError(Kind::kMalformed, reader.line(),
                     "malformed cone line, expected 'CONES k s_1 ... s_k'");
  }
  const std::size_t num_blocks = parse_count(tok[1], reader.line(), "k");
  if (tok.size() != num_blocks + 2) {
    throw ParseError(Kind::kMalformed, reader.line(),
                     fmt::format("CONES declares {} blocks but lists {}",
                                 num_blocks, tok.size() - 2));
  }
  std::size_t cone_sum = 0;
  for (std::size_t b = 0; b < num_blocks; ++b) {
    const std::size_t size =
        parse_count(tok[b + 2], reader.line(), "cone size");
    if (size == 0) {
      throw ParseError(Kind::kInvalidValue, reader.line(),
                       fmt::format("cone block {} has size 0", b));
    }
    p.cones.block_sizes.push_back(size);
    cone_sum += size;
  }
  if (cone_sum != n) {
    throw ParseError(Kind::kDimensionMismatch, reader.line(),
                     fmt::format("cone sizes sum {} ≠ n={}", cone_sum, n));
  }

  p.A.entries.reserve(nnz);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(nnz);
  for (std::size_t k = 0; k < nnz; ++k) {
    reader.require(tok, "matrix entry");
    expect_tokens(tok, 3, reader.line(), "matrix entry");
    const std::size_t i = parse_count(tok[0], reader.line(), "row index");
    const std::size_t j = parse_count(tok[1], reader.line(), "column index");
    const double value = parse_real(tok[2], reader.line(), "matrix value");
    if (i >= m || j >= n) {
      throw ParseError(Kind::kDimensionMismatch, reader.line(),
                       fmt::format("entry ({},{}) outside {}x{} matrix", i, j,
                                   m, n));
    }
    if (value == 0.0) {
      throw ParseError(Kind::kInvalidValue, reader.line(),
                       fmt::format("entry ({},{}) is zero", i, j));
    }
    if (!seen.insert(static_cast<std::uint64_t>(j) * m + i).second) {
      throw ParseError(Kind::kDuplicateEntry, reader.line(),
                       fmt::format("duplicate entry ({},{})", i, j));
    }
    p.A.entries.push_back(Triplet{i, j, value});
  }

  p.b.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    reader.require(tok, "b value");
    expect_tokens(tok, 1, reader.line(), "b value");
    p.b[i] = parse_real(tok[0], reader.line(), "b value");
  }
  p.c.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    reader.require(tok, "c value");
    expect_tokens(tok, 1, reader.line(), "c value");
    p.c[j] = parse_real(tok[0], reader.line(), "c value");
  }
  if (reader.next(tok)) {
    throw ParseError(Kind::kDimensionMismatch, reader.line(),
                     "trailing data after the last c value");
  }

  const ValidationReport report = validate(p);
  if (!report.ok()) {
    throw ParseError(Kind::kInvalidValue, 0, report.errors.front());
  }
  return p;
}

std::string write_solution(const SolveResult& result) {
  const IterationReport& r = result.report;
  std::string out;
  out += "# conefree solution: x (n values) then lambda (m values)\n";
  out += "# dual residual = dist(A'lambda + c, K); gap = c'x + b'lambda\n";
  out += fmt::format("# prim_res_2 {}\n", format_double(r.prim_res_2));
  out += fmt::format("# dual_res_2 {}\n", format_double(r.dual_res_2));
  out += fmt::format("# gap {}\n", format_double(r.gap));
  out += fmt::format("# cone_gap {}\n", format_double(r.cone_gap));
  out += fmt::format("STATUS {}\n", to_string(r.status));
  out += fmt::format("POBJ {}\n", format_double(r.pobj));
  out += fmt::format("DOBJ {}\n", format_double(r.dobj));
  out += fmt::format("ITERS {}\n", r.iter);
  for (double v : result.x) {
    out += format_double(v);
    out += '\n';
  }
  for (double v : result.lambda) {
    out += format_double(v);
    out += '\n';
  }
  return out;
}

Solution parse_solution(std::string_view text, std::size_t m, std::size_t n) {
  LineReader reader(text);
  std::vector<std::string_view> tok;
  Solution s;

  reader.require(tok, "STATUS line");
  expect_tokens(tok, 2, reader.line(), "STATUS line");
  if (tok[0] != "STATUS") {
    throw ParseError(Kind::kMalformed, reader.line(), "expected STATUS");
  }
  if (tok[1] == "solved") {
    s.status = SolveStatus::kSolved;
  } else if (tok[1] == "max_iters") {
    s.status = SolveStatus::kMaxIters;
  } else if (tok[1] == "diverged") {
    s.status = SolveStatus::kDiverged;
  } else {
    throw ParseError(Kind::kMalformed, reader.line(),
                     fmt::format("unknown status '{}'", tok[1]));
  }

  auto keyed = [&](const char* key) {
    reader.require(tok, key);
    expect_tokens(tok, 2, reader.line(), key);
    if (tok[0] != key) {
      throw ParseError(Kind::kMalformed, reader.line(),
                       fmt::format("expected {}", key));
    }
    return tok[1];
  };
  std::string_view field = keyed("POBJ");
  s.pobj = parse_real(field, reader.line(), "POBJ");
  field = keyed("DOBJ");
  s.dobj = parse_real(field, reader.line(), "DOBJ");
  field = keyed("ITERS");
  s.iters = parse_count(field, reader.line(), "ITERS");

  s.x.resize(n);
  for (double& v : s.x) {
    reader.require(tok, "x value");
    expect_tokens(tok, 1, reader.line(), "x value");
    v = parse_real(tok[0], reader.line(), "x value");
  }
  s.lambda.resize(m);
  for (double& v : s.lambda) {
    reader.require(tok, "lambda value");
    expect_tokens(tok, 1, reader.line(), "lambda value");
    v = parse_real(tok[0], reader.line(), "lambda value");
  }
  if (reader.next(tok)) {
    throw ParseError(Kind::kDimensionMismatch, reader.line(),
                     "trailing data after the last lambda value");
  }
  return s;
}

std::string trace_csv(const std::vector<IterationReport>& trace) {
  std::string out =
      "iter,prim_res_inf,dual_res_inf,prim_res_2,dual_res_2,cone_gap,pobj,"
      "dobj,gap,status,time_ms\n";
  for (const IterationReport& r : trace) {
    out += fmt::format("{},{},{},{},{},{},{},{},{},{},{:.3f}\n", r.iter,
                       format_double(r.prim_res_inf),
                       format_double(r.dual_res_inf),
                       format_double(r.prim_res_2),
                       format_double(r.dual_res_2), format_double(r.cone_gap),
                       format_double(r.pobj), format_double(r.dobj),
                       format_double(r.gap), to_string(r.status),
                       r.elapsed_ms);
  }
  return out;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string out(kBenchHeader);
  out += '\n';
  for (const BenchRow& r : rows) {
    out += fmt::format(
        "{},{},{},{},{},{},{},{},{},{:.3f},{},{},{},{},{}\n", r.instance_id,
        r.m, r.n, r.nnz, format_double(r.density), to_string(r.cone_kind),
        format_double(r.mu), to_string(r.term_mode), r.iters, r.time_ms,
        format_double(r.prim_res_2), format_double(r.dual_res_2),
        format_double(r.gap), format_double(r.cone_gap), to_string(r.status));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(fmt::format("cannot open '{}'", path));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error(fmt::format("cannot write '{}'", path));
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw std::runtime_error(fmt::format("write to '{}' failed", path));
}

}  // namespace conefree::io
