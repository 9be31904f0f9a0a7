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

#ifndef PIVOTFORGE__UNIPOLY_HPP_
#define PIVOTFORGE__UNIPOLY_HPP_

#include <initializer_list>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "pivotforge/rational.hpp"

namespace pivotforge
{

/// Dense univariate polynomial with rational coefficients, index = power.
/// The coefficient vector never ends in a zero; the zero polynomial is empty.
class UniPoly
{
public:
  UniPoly() = default;
  explicit UniPoly(Rational constant);
  UniPoly(std::initializer_list<Rational> coefficients);
  explicit UniPoly(std::vector<Rational> coefficients);

  /// c0 + c1·μ
  static UniPoly affine(Rational c0, Rational c1);

  const std::vector<Rational> & coefficients() const { return coeffs_; }
  /// Coefficient of μ^power, zero past the degree.
  Rational coefficient(std::size_t power) const;

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const Rational & leading() const;

  Rational operator()(const Rational & t) const;
  UniPoly derivative() const;

  UniPoly operator-() const;
  UniPoly & operator+=(const UniPoly & rhs);
  UniPoly & operator-=(const UniPoly & rhs);
  UniPoly & operator*=(const UniPoly & rhs);
  UniPoly & operator+=(const Rational & rhs);
  UniPoly & operator*=(const Rational & rhs);

  friend UniPoly operator+(UniPoly lhs, const UniPoly & rhs) { return lhs += rhs; }
  friend UniPoly operator-(UniPoly lhs, const UniPoly & rhs) { return lhs -= rhs; }
  friend UniPoly operator*(const UniPoly & lhs, const UniPoly & rhs);
  friend UniPoly operator+(UniPoly lhs, const Rational & rhs) { return lhs += rhs; }
  friend UniPoly operator*(UniPoly lhs, const Rational & rhs) { return lhs *= rhs; }
  friend UniPoly operator*(const Rational & lhs, UniPoly rhs) { return rhs *= lhs; }
  friend bool operator==(const UniPoly &, const UniPoly &) = default;

  friend std::ostream & operator<<(std::ostream & os, const UniPoly & p);

private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Euclidean division; `divisor` must be nonzero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly & dividend, const UniPoly & divisor);
/// Monic greatest common divisor (zero if both inputs are zero).
UniPoly gcd(UniPoly a, UniPoly b);

Rational uni_eval(const UniPoly & p, const Rational & t);

/// Smallest μ in [0, t_max] with p(μ) ≤ 0, or nullopt when p > 0 on the whole
/// interval. Throws Error(kNotRepresentable) when that infimum is irrational.
std::optional<Rational> first_nonpositive(const UniPoly & p, const Rational & t_max);

/// Number of distinct real roots of p in the half-open interval (a, b].
/// p must be nonzero and a < b.
int count_roots(const UniPoly & p, const Rational & a, const Rational & b);

/// The rational with the smallest denominator in the closed interval [lo, hi].
Rational simplest_between(const Rational & lo, const Rational & hi);

}  // namespace pivotforge

#endif  // PIVOTFORGE__UNIPOLY_HPP_
