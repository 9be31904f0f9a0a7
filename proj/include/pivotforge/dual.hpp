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

#ifndef PIVOTFORGE__DUAL_HPP_
#define PIVOTFORGE__DUAL_HPP_

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "pivotforge/rational.hpp"

namespace pivotforge
{

/// Forward-mode dual number a + a'ε with ε² = 0.
template <typename Scalar>
bool tangent_is_zero(const Scalar & s)
{
  if constexpr (requires { s.is_zero(); }) {
    return s.is_zero();
  } else {
    return s == Scalar{};
  }
}

template <typename Scalar>
struct Dual
{
  Scalar value{};
  Scalar derivative{};

  Dual() = default;
  explicit Dual(Scalar v) : value(std::move(v)), derivative() {}
  Dual(Scalar v, Scalar d) : value(std::move(v)), derivative(std::move(d)) {}

  /// The independent variable at `v`.
  static Dual variable(Scalar v) { return Dual(std::move(v), Scalar(1)); }

  Dual operator-() const { return Dual(-value, -derivative); }

  Dual & operator+=(const Dual & rhs)
  {
    value += rhs.value;
    derivative += rhs.derivative;
    return *this;
  }
  Dual & operator-=(const Dual & rhs)
  {
    value -= rhs.value;
    derivative -= rhs.derivative;
    return *this;
  }
  Dual & operator*=(const Dual & rhs)
  {
    // In a one-coordinate pass most tangents are zero; skip those products.
    const bool lhs_const = tangent_is_zero(derivative);
    const bool rhs_const = tangent_is_zero(rhs.derivative);
    if (lhs_const && !rhs_const) {
      derivative = value * rhs.derivative;
    } else if (!lhs_const && rhs_const) {
      derivative *= rhs.value;
    } else if (!lhs_const) {
      derivative = value * rhs.derivative + derivative * rhs.value;
    }
    value *= rhs.value;
    return *this;
  }
  Dual & operator+=(const Scalar & rhs)
  {
    value += rhs;
    return *this;
  }
  Dual & operator*=(const Scalar & rhs)
  {
    value *= rhs;
    if (!tangent_is_zero(derivative)) {
      derivative *= rhs;
    }
    return *this;
  }

  friend Dual operator+(Dual lhs, const Dual & rhs) { return lhs += rhs; }
  friend Dual operator-(Dual lhs, const Dual & rhs) { return lhs -= rhs; }
  friend Dual operator*(Dual lhs, const Dual & rhs) { return lhs *= rhs; }
  friend Dual operator+(Dual lhs, const Scalar & rhs) { return lhs += rhs; }
  friend Dual operator*(Dual lhs, const Scalar & rhs) { return lhs *= rhs; }
  friend Dual operator*(const Scalar & lhs, Dual rhs) { return rhs *= lhs; }
  friend bool operator==(const Dual &, const Dual &) = default;
};

using DualNumber = Dual<Rational>;

/// Forward-mode dual number with one infinitesimal per coordinate
/// (ε_i ε_j = 0), so a single evaluation yields the whole gradient. An empty
/// tangent means all zeros.
struct GradientDual
{
  Rational value;
  std::vector<Rational> tangent;

  GradientDual() = default;
  explicit GradientDual(Rational v) : value(std::move(v)) {}

  /// Coordinate k (0-based) of an n-dimensional input, seeded with ε_k.
  static GradientDual variable(Rational v, std::size_t n, std::size_t k)
  {
    GradientDual out(std::move(v));
    out.tangent.assign(n, Rational(0));
    out.tangent[k] = Rational(1);
    return out;
  }

  GradientDual operator-() const
  {
    GradientDual out(*this);
    out *= Rational(-1);
    return out;
  }

  GradientDual & operator+=(const GradientDual & rhs)
  {
    value += rhs.value;
    accumulate(rhs.tangent, 1);
    return *this;
  }
  GradientDual & operator-=(const GradientDual & rhs)
  {
    value -= rhs.value;
    accumulate(rhs.tangent, -1);
    return *this;
  }
  GradientDual & operator*=(const GradientDual & rhs)
  {
    // (a + a'ε)(b + b'ε) = ab + (a'b + ab')ε; tangent first, it reads the old value.
    if (tangent.size() < rhs.tangent.size()) {
      tangent.resize(rhs.tangent.size());
    }
    for (std::size_t i = 0; i < tangent.size(); ++i) {
      if (!tangent[i].is_zero()) {
        tangent[i] *= rhs.value;
      }
      if (i < rhs.tangent.size() && !rhs.tangent[i].is_zero()) {
        tangent[i] += value * rhs.tangent[i];
      }
    }
    value *= rhs.value;
    return *this;
  }
  GradientDual & operator+=(const Rational & rhs)
  {
    value += rhs;
    return *this;
  }
  GradientDual & operator*=(const Rational & rhs)
  {
    value *= rhs;
    if (rhs.is_zero()) {
      tangent.clear();
      return *this;
    }
    for (auto & t : tangent) {
      if (!t.is_zero()) {
        t *= rhs;
      }
    }
    return *this;
  }

  friend GradientDual operator+(GradientDual lhs, const GradientDual & rhs) { return lhs += rhs; }
  friend GradientDual operator-(GradientDual lhs, const GradientDual & rhs) { return lhs -= rhs; }
  friend GradientDual operator*(GradientDual lhs, const GradientDual & rhs) { return lhs *= rhs; }
  friend GradientDual operator+(GradientDual lhs, const Rational & rhs) { return lhs += rhs; }
  friend GradientDual operator*(GradientDual lhs, const Rational & rhs) { return lhs *= rhs; }
  friend GradientDual operator*(const Rational & lhs, GradientDual rhs) { return rhs *= lhs; }

private:
  void accumulate(const std::vector<Rational> & other, int sign)
  {
    if (tangent.size() < other.size()) {
      tangent.resize(other.size());
    }
    for (std::size_t i = 0; i < other.size(); ++i) {
      if (other[i].is_zero()) {
        continue;
      }
      if (sign > 0) {
        tangent[i] += other[i];
      } else {
        tangent[i] -= other[i];
      }
    }
  }
};

}  // namespace pivotforge

#endif  // PIVOTFORGE__DUAL_HPP_
