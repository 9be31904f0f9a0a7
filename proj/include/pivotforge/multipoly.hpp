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

#ifndef PIVOTFORGE__MULTIPOLY_HPP_
#define PIVOTFORGE__MULTIPOLY_HPP_

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "pivotforge/rational.hpp"

namespace pivotforge
{

using Exponents = std::vector<std::uint8_t>;

/// Graded lexicographic order: lower total degree first, then exponent
/// vectors compared lexicographically with larger powers of x_1 first.
struct GradedLex
{
  bool operator()(const Exponents & a, const Exponents & b) const;
};

/// Sparse polynomial in a fixed number of variables. No zero coefficients are
/// stored. Variables are numbered from 1 in the public interface.
class MultiPoly
{
public:
  using Terms = std::map<Exponents, Rational, GradedLex>;

  static constexpr std::size_t kMaxVariables = 32;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t n_vars);

  static MultiPoly constant(std::size_t n_vars, const Rational & c);
  /// x_index, 1 <= index <= n_vars.
  static MultiPoly variable(std::size_t n_vars, std::size_t index);

  std::size_t n_vars() const { return n_vars_; }
  const Terms & terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int total_degree() const;

  /// Adds c·x^exponents, dropping the term if it cancels.
  void add_term(const Exponents & exponents, const Rational & c);

  MultiPoly derivative(std::size_t index) const;

  MultiPoly operator-() const;
  MultiPoly & operator+=(const MultiPoly & rhs);
  MultiPoly & operator-=(const MultiPoly & rhs);
  MultiPoly & operator+=(const Rational & rhs);
  MultiPoly & operator*=(const Rational & rhs);
  MultiPoly & operator*=(const MultiPoly & rhs) { return *this = *this * rhs; }

  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly & rhs) { return lhs += rhs; }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly & rhs) { return lhs -= rhs; }
  friend MultiPoly operator*(const MultiPoly & lhs, const MultiPoly & rhs);
  friend MultiPoly operator+(MultiPoly lhs, const Rational & rhs) { return lhs += rhs; }
  friend MultiPoly operator*(MultiPoly lhs, const Rational & rhs) { return lhs *= rhs; }
  friend MultiPoly operator*(const Rational & lhs, MultiPoly rhs) { return rhs *= lhs; }
  friend bool operator==(const MultiPoly &, const MultiPoly &) = default;

private:
  void check_compatible(const MultiPoly & rhs) const;

  std::size_t n_vars_ = 0;
  Terms terms_;
};

enum class PolyOp { kAdd, kMul };

MultiPoly multi_arith(const MultiPoly & a, const MultiPoly & b, PolyOp op);

/// Evaluates p at x over any commutative scalar type that can be built from a
/// Rational (Rational, Dual<Rational>, UniPoly, ...).
template <typename Scalar>
Scalar multi_eval(const MultiPoly & p, std::span<const Scalar> x)
{
  if (x.size() != p.n_vars()) {
    throw std::invalid_argument("multi_eval: point length does not match variable count");
  }
  Scalar total(Rational(0));
  for (const auto & [exponents, coefficient] : p.terms()) {
    Scalar term(coefficient);
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      for (std::uint8_t e = 0; e < exponents[i]; ++e) {
        term = term * x[i];
      }
    }
    total = total + term;
  }
  return total;
}

inline Rational multi_eval(const MultiPoly & p, std::span<const Rational> x)
{
  return multi_eval<Rational>(p, x);
}

}  // namespace pivotforge

#endif  // PIVOTFORGE__MULTIPOLY_HPP_
