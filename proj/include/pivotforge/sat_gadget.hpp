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

#ifndef PIVOTFORGE__SAT_GADGET_HPP_
#define PIVOTFORGE__SAT_GADGET_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pivotforge/box_program.hpp"
#include "pivotforge/error.hpp"
#include "pivotforge/multipoly.hpp"
#include "pivotforge/rational.hpp"

namespace pivotforge
{

struct Literal
{
  int variable = 0;  // 1-based
  bool negated = false;

  friend bool operator==(const Literal &, const Literal &) = default;
};

using Clause = std::vector<Literal>;

struct CnfFormula
{
  std::size_t n_vars = 0;
  std::vector<Clause> clauses;
};

/// PARSE_ERROR with a 1-based source position.
class ParseError : public Error
{
public:
  ParseError(std::size_t line, std::size_t column, const std::string & message)
  : Error(ErrorCode::kParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
    line_(line),
    column_(column)
  {
  }

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses DIMACS CNF. Comment lines start with 'c'; exactly one
/// "p cnf <vars> <clauses>" header precedes the clauses; each clause has one
/// to three literals over distinct variables and ends with 0.
CnfFormula parse_dimacs(std::string_view text);

/// DIMACS text for a formula; parse_dimacs(to_dimacs(F)) reproduces F.
std::string to_dimacs(const CnfFormula & formula);

/// -Σ_j ∏_{z_k ∈ C_j} (1 - x_k) ∏_{¬z_l ∈ C_j} x_l
MultiPoly reduce(const CnfFormula & formula);

/// Number of clauses left unsatisfied by the assignment whose bit k-1 is z_k.
std::size_t violated_clauses(const CnfFormula & formula, VertexId assignment);

struct BruteForceMax
{
  Rational value;
  VertexId argmax = 0;  // lowest id attaining the maximum
};

/// Exact maximum over {0,1}^n. Throws TOO_LARGE for n > 24.
BruteForceMax brute_force_max(const MultiPoly & p, std::size_t n);

struct SatResult
{
  bool satisfiable = false;
  std::optional<VertexId> witness;  // lowest satisfying assignment
};

/// Truth-table check. Throws TOO_LARGE for more than 24 variables.
SatResult brute_force_sat(const CnfFormula & formula);

inline constexpr std::size_t kMaxBruteForceVars = 24;

}  // namespace pivotforge

#endif  // PIVOTFORGE__SAT_GADGET_HPP_
