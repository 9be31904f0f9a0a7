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

#ifndef PIVOTFORGE__OBJECTIVES_HPP_
#define PIVOTFORGE__OBJECTIVES_HPP_

#include <memory>
#include <span>
#include <vector>

#include "pivotforge/box_program.hpp"
#include "pivotforge/dual.hpp"
#include "pivotforge/multipoly.hpp"
#include "pivotforge/rational.hpp"
#include "pivotforge/unipoly.hpp"

namespace pivotforge
{

/// Value, gradient and exact line restriction of a smooth objective.
///
/// For every point x and direction d, edge_restriction(x, d) is the
/// polynomial g(μ) = ∇f(x + μd)ᵀd.
class ObjectiveOracle
{
public:
  virtual ~ObjectiveOracle() = default;

  virtual std::size_t n() const = 0;
  virtual Rational value(std::span<const Rational> x) const = 0;
  virtual Vector gradient(std::span<const Rational> x) const = 0;
  virtual UniPoly edge_restriction(std::span<const Rational> x, std::span<const Rational> d) const = 0;

  UniPoly edge_restriction(std::span<const Rational> x, const AxisDirection & d) const
  {
    const Vector dv = d.to_vector(n());
    return edge_restriction(x, std::span<const Rational>(dv));
  }
};

using OraclePtr = std::shared_ptr<const ObjectiveOracle>;

// ---------------------------------------------------------------------------
// The lower-bound family F_n, generic over the scalar.
//
// Scalar must support +, -, * among itself, unary minus, and + / * with a
// Rational. Rational, Dual<Rational>, UniPoly and MultiPoly all qualify.

namespace detail
{

template <typename Scalar>
Scalar zero_like(const Scalar & x)
{
  return x * Rational(0);
}

/// 1 - x_{i-1} + sum_{j=1}^{i-2} x_j with x_0 := 1, for 1 <= i <= n.
template <typename Scalar>
Scalar beta_bracket(std::span<const Scalar> x, std::size_t i)
{
  Scalar bracket = zero_like(x[0]) + Rational(1);
  if (i == 1) {
    bracket = bracket + Rational(-1);  // x_0
  } else {
    bracket = bracket - x[i - 2];
  }
  for (std::size_t j = 1; j + 2 <= i; ++j) {
    bracket = bracket + x[j - 1];
  }
  return bracket;
}

}  // namespace detail

/// α_{n,1..n+1}(x) as a vector indexed from 0 (entry i-1 is α_i); the last
/// entry is α_{n+1} = 0.
template <typename Scalar>
std::vector<Scalar> lower_bound_alphas(std::span<const Scalar> x)
{
  const std::size_t n = x.size();
  std::vector<Scalar> alpha(n + 1, detail::zero_like(x[0]));
  for (std::size_t i = n; i-- > 0;) {
    const Scalar & next = alpha[i + 1];
    // x_i + α_{i+1} - 2 x_i α_{i+1}, built in place to keep temporaries down.
    Scalar a = x[i];
    a *= next;
    a *= Rational(-2);
    a += x[i];
    a += next;
    alpha[i] = std::move(a);
  }
  return alpha;
}

/// β_{n,i}(x) = 2^i (x_i - x_i²)(1 - x_{i-1} + Σ_{j<=i-2} x_j), with x_0 := 1.
template <typename Scalar>
Scalar lower_bound_beta(std::span<const Scalar> x, std::size_t i)
{
  const Scalar & xi = x[i - 1];
  return (xi - xi * xi) * detail::beta_bracket(x, i) * pow2(static_cast<int>(i));
}

/// F_n(x) = Σ_i (2^{i-1} α_i(x) - β_i(x)).
template <typename Scalar>
Scalar lower_bound_value(std::span<const Scalar> x)
{
  // One downward sweep: α_i is carried from α_{i+1}, and prefix = x_1 + ... +
  // x_{i-2} starts full and shrinks, so nothing is stored per coordinate.
  const std::size_t n = x.size();
  Scalar prefix = detail::zero_like(x[0]);
  for (std::size_t j = 1; j + 2 <= n; ++j) {
    prefix += x[j - 1];
  }
  Scalar alpha = detail::zero_like(x[0]);
  Scalar total = detail::zero_like(x[0]);
  for (std::size_t i = n; i >= 1; --i) {
    const Scalar & xi = x[i - 1];
    // α_i = x_i + (1 - 2 x_i) α_{i+1}
    Scalar factor = xi;
    factor *= Rational(-2);
    factor += Rational(1);
    alpha *= factor;
    alpha += xi;

    Scalar term = alpha;
    term *= pow2(static_cast<int>(i) - 1);
    total += term;

    if (i >= 2) {
      // -β_i = 2^i x_i (x_i - 1) · bracket; reuses `factor` as scratch.
      factor = prefix;
      factor -= x[i - 2];
      factor += Rational(1);
      Scalar beta = xi;
      beta += Rational(-1);
      beta *= xi;
      beta *= factor;
      beta *= pow2(static_cast<int>(i));
      total += beta;
      if (i >= 3) {
        prefix -= x[i - 3];
      }
    }
  }
  return total;
}

Rational alpha(std::size_t n, std::size_t i, std::span<const Rational> x);
Rational beta(std::size_t n, std::size_t i, std::span<const Rational> x);
Rational f_value(std::size_t n, std::span<const Rational> x);

/// Closed-form k-th partial of F_n at a vertex of the unit cube.
/// Throws Error(kNotAVertex) off {0,1}^n.
Rational partial_closed_form(std::size_t n, std::size_t k, std::span<const Rational> x);

/// Fully expanded monomial form of F_n.
MultiPoly expand(std::size_t n);

/// ∂f/∂x_k by a single forward-mode pass with the k-th coordinate seeded.
template <typename F>
Rational dual_partial(F && f, std::span<const Rational> x, std::size_t k)
{
  std::vector<DualNumber> xs;
  xs.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    xs.emplace_back(x[i], Rational(i + 1 == k ? 1 : 0));
  }
  return f(std::span<const DualNumber>(xs)).derivative;
}

/// g(μ) = d/dμ f(x + μd), by evaluating f over UniPoly coordinates.
template <typename F>
UniPoly restriction_by_substitution(F && f, std::span<const Rational> x, std::span<const Rational> d)
{
  std::vector<UniPoly> line;
  line.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    line.push_back(UniPoly::affine(x[i], d[i]));
  }
  return f(std::span<const UniPoly>(line)).derivative();
}

// ---------------------------------------------------------------------------

class LowerBoundPolynomial final : public ObjectiveOracle
{
public:
  explicit LowerBoundPolynomial(std::size_t n);

  std::size_t n() const override { return n_; }
  Rational value(std::span<const Rational> x) const override;
  /// Forward-mode dual numbers, one pass per coordinate.
  Vector gradient(std::span<const Rational> x) const override;
  UniPoly edge_restriction(std::span<const Rational> x, std::span<const Rational> d) const override;
  using ObjectiveOracle::edge_restriction;

private:
  std::size_t n_;
};

class LinearObjective final : public ObjectiveOracle
{
public:
  explicit LinearObjective(Vector c);

  const Vector & c() const { return c_; }
  std::size_t n() const override { return c_.size(); }
  Rational value(std::span<const Rational> x) const override;
  Vector gradient(std::span<const Rational> x) const override;
  UniPoly edge_restriction(std::span<const Rational> x, std::span<const Rational> d) const override;
  using ObjectiveOracle::edge_restriction;

private:
  Vector c_;
};

/// An inner oracle on the first d coordinates of an n-dimensional space.
class PaddedObjective final : public ObjectiveOracle
{
public:
  PaddedObjective(OraclePtr inner, std::size_t n);

  const ObjectiveOracle & inner() const { return *inner_; }
  std::size_t n() const override { return n_; }
  Rational value(std::span<const Rational> x) const override;
  Vector gradient(std::span<const Rational> x) const override;
  UniPoly edge_restriction(std::span<const Rational> x, std::span<const Rational> d) const override;
  using ObjectiveOracle::edge_restriction;

private:
  OraclePtr inner_;
  std::size_t n_;
};

/// Wraps an explicit MultiPoly.
class PolynomialObjective final : public ObjectiveOracle
{
public:
  explicit PolynomialObjective(MultiPoly p);

  const MultiPoly & polynomial() const { return p_; }
  std::size_t n() const override { return p_.n_vars(); }
  Rational value(std::span<const Rational> x) const override;
  Vector gradient(std::span<const Rational> x) const override;
  UniPoly edge_restriction(std::span<const Rational> x, std::span<const Rational> d) const override;
  using ObjectiveOracle::edge_restriction;

private:
  MultiPoly p_;
  std::vector<MultiPoly> partials_;
};

/// Throws Error(kDimensionMismatch) if inner->n() > n.
std::shared_ptr<PaddedObjective> pad(OraclePtr inner, std::size_t n);

}  // namespace pivotforge

#endif  // PIVOTFORGE__OBJECTIVES_HPP_
