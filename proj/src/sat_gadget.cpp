// Copyright 2026 The pivotforge Authors
//
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

#include "pivotforge/sat_gadget.hpp"

#include <charconv>
#include <set>

namespace pivotforge
{
namespace
{

struct Token
{
  std::string_view text;
  std::size_t line = 0;
  std::size_t column = 0;
};

// Splits one line into whitespace-separated tokens with 1-based columns.
std::vector<Token> tokenize_line(std::string_view line, std::size_t line_no)
{
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r' || line[i] == '\f' || line[i] == '\v')) {
      ++i;
    }
    const std::size_t start = i;
    while (i < line.size() && !(line[i] == ' ' || line[i] == '\t' || line[i] == '\r' || line[i] == '\f' || line[i] == '\v')) {
      ++i;
    }
    if (i > start) {
      out.push_back(Token{line.substr(start, i - start), line_no, start + 1});
    }
  }
  return out;
}

std::optional<long long> to_integer(std::string_view text)
{
  if (!text.empty() && text.front() == '+') {
    text.remove_prefix(1);
  }
  long long value = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    return std::nullopt;
  }
  return value;
}

void check_enumerable(std::size_t n)
{
  if (n > kMaxBruteForceVars) {
    throw Error(ErrorCode::kTooLarge, std::to_string(n) + " variables exceed the enumeration limit of " +
                                        std::to_string(kMaxBruteForceVars));
  }
}

}  // namespace

CnfFormula parse_dimacs(std::string_view text)
{
  CnfFormula formula;
  std::optional<std::size_t> declared_clauses;
  Clause current;
  std::set<int> current_vars;
  Token clause_start;
  std::size_t line_no = 0;
  std::size_t last_line_len = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    ++line_no;
    last_line_len = line.size();
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    const auto tokens = tokenize_line(line, line_no);
    if (tokens.empty()) {
      continue;
    }
    if (tokens.front().text.front() == 'c') {
      continue;
    }
    if (tokens.front().text == "p") {
      if (declared_clauses) {
        throw ParseError(line_no, tokens.front().column, "second problem line");
      }
      if (tokens.size() != 4 || tokens[1].text != "cnf") {
        throw ParseError(line_no, tokens.front().column, "expected 'p cnf <variables> <clauses>'");
      }
      const auto vars = to_integer(tokens[2].text);
      if (!vars || *vars < 0) {
        throw ParseError(line_no, tokens[2].column, "invalid variable count '" + std::string(tokens[2].text) + "'");
      }
      const auto clauses = to_integer(tokens[3].text);
      if (!clauses || *clauses < 0) {
        throw ParseError(line_no, tokens[3].column, "invalid clause count '" + std::string(tokens[3].text) + "'");
      }
      formula.n_vars = static_cast<std::size_t>(*vars);
      declared_clauses = static_cast<std::size_t>(*clauses);
      continue;
    }
    if (!declared_clauses) {
      throw ParseError(line_no, tokens.front().column, "clause data before the 'p cnf' header");
    }
    for (const auto & tok : tokens) {
      const auto value = to_integer(tok.text);
      if (!value) {
        throw ParseError(line_no, tok.column, "expected an integer literal, got '" + std::string(tok.text) + "'");
      }
      if (*value == 0) {
        if (current.empty()) {
          throw ParseError(line_no, tok.column, "empty clause");
        }
        formula.clauses.push_back(std::move(current));
        current.clear();
        current_vars.clear();
        continue;
      }
      if (current.empty()) {
        clause_start = tok;
        if (formula.clauses.size() == *declared_clauses) {
          throw ParseError(line_no, tok.column, "more clauses than the " + std::to_string(*declared_clauses) + " declared");
        }
      }
      const long long var = *value < 0 ? -*value : *value;
      if (var > static_cast<long long>(formula.n_vars)) {
        throw ParseError(
          line_no, tok.column, "variable " + std::to_string(var) + " out of range 1.." + std::to_string(formula.n_vars));
      }
      if (!current_vars.insert(static_cast<int>(var)).second) {
        throw ParseError(line_no, tok.column, "variable " + std::to_string(var) + " repeated within a clause");
      }
      if (current.size() == 3) {
        throw ParseError(line_no, tok.column, "clause has more than 3 literals");
      }
      current.push_back(Literal{static_cast<int>(var), *value < 0});
    }
  }

  if (!declared_clauses) {
    throw ParseError(line_no, 1, "missing 'p cnf' header");
  }
  if (!current.empty()) {
    throw ParseError(clause_start.line, clause_start.column, "clause not terminated by 0");
  }
  if (formula.clauses.size() != *declared_clauses) {
    throw ParseError(
      line_no, last_line_len + 1,
      "expected " + std::to_string(*declared_clauses) + " clauses, found " + std::to_string(formula.clauses.size()));
  }
  return formula;
}

std::string to_dimacs(const CnfFormula & formula)
{
  std::string out = "p cnf " + std::to_string(formula.n_vars) + " " + std::to_string(formula.clauses.size()) + "\n";
  for (const auto & clause : formula.clauses) {
    for (const auto & lit : clause) {
      out += (lit.negated ? "-" : "") + std::to_string(lit.variable) + " ";
    }
    out += "0\n";
  }
  return out;
}

MultiPoly reduce(const CnfFormula & formula)
{
  const std::size_t n = formula.n_vars;
  if (n > MultiPoly::kMaxVariables) {
    throw Error(ErrorCode::kTooLarge, "polynomials are limited to " + std::to_string(MultiPoly::kMaxVariables) + " variables");
  }
  MultiPoly f(n);
  for (const auto & clause : formula.clauses) {
    MultiPoly term = MultiPoly::constant(n, Rational(1));
    for (const auto & lit : clause) {
      const MultiPoly x = MultiPoly::variable(n, static_cast<std::size_t>(lit.variable));
      term *= lit.negated ? x : MultiPoly::constant(n, Rational(1)) - x;
    }
    f -= term;
  }
  return f;
}

std::size_t violated_clauses(const CnfFormula & formula, VertexId assignment)
{
  std::size_t count = 0;
  for (const auto & clause : formula.clauses) {
    bool satisfied = false;
    for (const auto & lit : clause) {
      const bool value = ((assignment >> (lit.variable - 1)) & 1U) != 0;
      satisfied = satisfied || value != lit.negated;
    }
    count += satisfied ? 0 : 1;
  }
  return count;
}

BruteForceMax brute_force_max(const MultiPoly & p, std::size_t n)
{
  check_enumerable(n);
  if (p.n_vars() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "polynomial has " + std::to_string(p.n_vars()) + " variables, expected " +
                                                 std::to_string(n));
  }
  // On {0,1}^n a monomial is 1 exactly when all its variables are 1.
  std::vector<std::pair<VertexId, Rational>> terms;
  for (const auto & [exps, coef] : p.terms()) {
    VertexId mask = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] > 0) {
        mask |= VertexId{1} << i;
      }
    }
    terms.emplace_back(mask, coef);
  }
  BruteForceMax best;
  for (VertexId v = 0; v < (VertexId{1} << n); ++v) {
    Rational value;
    for (const auto & [mask, coef] : terms) {
      if ((v & mask) == mask) {
        value += coef;
      }
    }
    if (v == 0 || value > best.value) {
      best.value = value;
      best.argmax = v;
    }
  }
  return best;
}

SatResult brute_force_sat(const CnfFormula & formula)
{
  check_enumerable(formula.n_vars);
  for (VertexId v = 0; v < (VertexId{1} << formula.n_vars); ++v) {
    if (violated_clauses(formula, v) == 0) {
      return SatResult{true, v};
    }
  }
  return SatResult{false, std::nullopt};
}

}  // namespace pivotforge
