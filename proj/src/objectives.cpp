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

#include "pivotforge/objectives.hpp"

#include <string>

#include "pivotforge/error.hpp"

namespace pivotforge
{
namespace
{

void check_length(std::size_t expected, std::size_t actual)
{
  if (expected != actual) {
    throw Error(
      ErrorCode::kDimensionMismatch,
      "expected " + std::to_string(expected) + " coordinates, got " + std::to_string(actual));
  }
}

bool is_unit_vertex(std::span<const Rational> x)
{
  for (const auto & v : x) {
    if (!v.is_zero() && v != Rational(1)) {
      return false;
    }
  }
  return true;
}

struct LowerBoundEval
{
  template <typename Scalar>
  Scalar operator()(std::span<const Scalar> x) const
  {
    return lower_bound_value(x);
  }
};

}  // namespace

Rational alpha(std::size_t n, std::size_t i, std::span<const Rational> x)
{
  check_length(n, x.size());
  if (i < 1 || i > n + 1) {
    throw Error(ErrorCode::kInvalidArgument, "alpha index out of range");
  }
  return lower_bound_alphas(x)[i - 1];
}

Rational beta(std::size_t n, std::size_t i, std::span<const Rational> x)
{
  check_length(n, x.size());
  if (i < 1 || i > n) {
    throw Error(ErrorCode::kInvalidArgument, "beta index out of range");
  }
  return lower_bound_beta(x, i);
}

Rational f_value(std::size_t n, std::span<const Rational> x)
{
  check_length(n, x.size());
  return lower_bound_value(x);
}

Rational partial_closed_form(std::size_t n, std::size_t k, std::span<const Rational> x)
{
  check_length(n, x.size());
  if (k < 1 || k > n) {
    throw Error(ErrorCode::kInvalidArgument, "partial index out of range");
  }
  if (!is_unit_vertex(x)) {
    throw Error(ErrorCode::kNotAVertex, "closed-form partial is only valid on {0,1}^n");
  }
  // x_0 := 1
  auto coord = [&x](std::size_t j) { return j == 0 ? Rational(1) : x[j - 1]; };
  const Rational one(1);
  const Rational two(2);

  const Rational alpha_next = lower_bound_alphas(x)[k];  // α_{k+1}
  Rational weighted;
  for (std::size_t i = 1; i <= k; ++i) {
    Rational product = one;
    for (std::size_t j = i; j + 1 <= k; ++j) {
      product *= one - two * coord(j);
    }
    weighted += pow2(static_cast<int>(i) - 1) * product;
  }
  Rational bracket = one - coord(k - 1);
  for (std::size_t i = 1; i + 2 <= k; ++i) {
    bracket += coord(i);
  }
  return (one - two * alpha_next) * weighted - pow2(static_cast<int>(k)) * (one - two * coord(k)) * bracket;
}

MultiPoly expand(std::size_t n)
{
  if (n < 1) {
    throw Error(ErrorCode::kInvalidArgument, "expand needs n >= 1");
  }
  std::vector<MultiPoly> vars;
  vars.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    vars.push_back(MultiPoly::variable(n, i));
  }
  return lower_bound_value(std::span<const MultiPoly>(vars));
}

// ---------------------------------------------------------------------------

LowerBoundPolynomial::LowerBoundPolynomial(std::size_t n) : n_(n)
{
  if (n < 1) {
    throw Error(ErrorCode::kInvalidArgument, "F_n needs n >= 1");
  }
}

Rational LowerBoundPolynomial::value(std::span<const Rational> x) const
{
  check_length(n_, x.size());
  return lower_bound_value(x);
}

Vector LowerBoundPolynomial::gradient(std::span<const Rational> x) const
{
  check_length(n_, x.size());
  // All coordinates at once: one infinitesimal per coordinate.
  std::vector<GradientDual> xs;
  xs.reserve(n_);
  for (std::size_t k = 0; k < n_; ++k) {
    xs.push_back(GradientDual::variable(x[k], n_, k));
  }
  Vector g = lower_bound_value(std::span<const GradientDual>(xs)).tangent;
  g.resize(n_);
  return g;
}

UniPoly LowerBoundPolynomial::edge_restriction(std::span<const Rational> x, std::span<const Rational> d) const
{
  check_length(n_, x.size());
  check_length(n_, d.size());
  return restriction_by_substitution(LowerBoundEval{}, x, d);
}

// ---------------------------------------------------------------------------

LinearObjective::LinearObjective(Vector c) : c_(std::move(c))
{
  if (c_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "linear objective needs n >= 1");
  }
}

Rational LinearObjective::value(std::span<const Rational> x) const
{
  check_length(c_.size(), x.size());
  Rational total;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    total += c_[i] * x[i];
  }
  return total;
}

Vector LinearObjective::gradient(std::span<const Rational> x) const
{
  check_length(c_.size(), x.size());
  return c_;
}

UniPoly LinearObjective::edge_restriction(std::span<const Rational> x, std::span<const Rational> d) const
{
  check_length(c_.size(), x.size());
  check_length(c_.size(), d.size());
  Rational slope;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    slope += c_[i] * d[i];
  }
  return UniPoly(slope);
}

// ---------------------------------------------------------------------------

PaddedObjective::PaddedObjective(OraclePtr inner, std::size_t n) : inner_(std::move(inner)), n_(n)
{
  if (!inner_) {
    throw Error(ErrorCode::kInvalidArgument, "pad: null inner objective");
  }
  if (inner_->n() > n_) {
    throw Error(
      ErrorCode::kDimensionMismatch,
      "cannot pad a " + std::to_string(inner_->n()) + "-dimensional objective to " + std::to_string(n_));
  }
}

Rational PaddedObjective::value(std::span<const Rational> x) const
{
  check_length(n_, x.size());
  return inner_->value(x.first(inner_->n()));
}

Vector PaddedObjective::gradient(std::span<const Rational> x) const
{
  check_length(n_, x.size());
  Vector g = inner_->gradient(x.first(inner_->n()));
  g.resize(n_);
  return g;
}

UniPoly PaddedObjective::edge_restriction(std::span<const Rational> x, std::span<const Rational> d) const
{
  check_length(n_, x.size());
  check_length(n_, d.size());
  return inner_->edge_restriction(x.first(inner_->n()), d.first(inner_->n()));
}

std::shared_ptr<PaddedObjective> pad(OraclePtr inner, std::size_t n)
{
  return std::make_shared<PaddedObjective>(std::move(inner), n);
}

// ---------------------------------------------------------------------------

PolynomialObjective::PolynomialObjective(MultiPoly p) : p_(std::move(p))
{
  for (std::size_t k = 1; k <= p_.n_vars(); ++k) {
    partials_.push_back(p_.derivative(k));
  }
}

Rational PolynomialObjective::value(std::span<const Rational> x) const { return multi_eval(p_, x); }

Vector PolynomialObjective::gradient(std::span<const Rational> x) const
{
  Vector g;
  g.reserve(partials_.size());
  for (const auto & partial : partials_) {
    g.push_back(multi_eval(partial, x));
  }
  return g;
}

UniPoly PolynomialObjective::edge_restriction(std::span<const Rational> x, std::span<const Rational> d) const
{
  check_length(p_.n_vars(), x.size());
  check_length(p_.n_vars(), d.size());
  return restriction_by_substitution(
    [this](std::span<const UniPoly> line) { return multi_eval<UniPoly>(p_, line); }, x, d);
}

}  // namespace pivotforge
