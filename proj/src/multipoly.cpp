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

#include "pivotforge/multipoly.hpp"

#include <algorithm>
#include <numeric>

namespace pivotforge
{
namespace
{

int degree_of(const Exponents & e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

bool GradedLex::operator()(const Exponents & a, const Exponents & b) const
{
  const int da = degree_of(a);
  const int db = degree_of(b);
  if (da != db) {
    return da < db;
  }
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly::MultiPoly(std::size_t n_vars) : n_vars_(n_vars)
{
  if (n_vars > kMaxVariables) {
    throw std::invalid_argument("MultiPoly: too many variables");
  }
}

MultiPoly MultiPoly::constant(std::size_t n_vars, const Rational & c)
{
  MultiPoly p(n_vars);
  p.add_term(Exponents(n_vars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t n_vars, std::size_t index)
{
  if (index < 1 || index > n_vars) {
    throw std::out_of_range("MultiPoly::variable: index out of range");
  }
  MultiPoly p(n_vars);
  Exponents e(n_vars, 0);
  e[index - 1] = 1;
  p.add_term(e, Rational(1));
  return p;
}

int MultiPoly::total_degree() const
{
  int best = -1;
  for (const auto & [e, c] : terms_) {
    best = std::max(best, degree_of(e));
  }
  return best;
}

void MultiPoly::add_term(const Exponents & exponents, const Rational & c)
{
  if (exponents.size() != n_vars_) {
    throw std::invalid_argument("MultiPoly: exponent vector length mismatch");
  }
  if (c.is_zero()) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
}

MultiPoly MultiPoly::derivative(std::size_t index) const
{
  if (index < 1 || index > n_vars_) {
    throw std::out_of_range("MultiPoly::derivative: index out of range");
  }
  MultiPoly out(n_vars_);
  for (const auto & [e, c] : terms_) {
    if (e[index - 1] == 0) {
      continue;
    }
    Exponents lowered = e;
    --lowered[index - 1];
    out.add_term(lowered, c * Rational(static_cast<std::int64_t>(e[index - 1])));
  }
  return out;
}

void MultiPoly::check_compatible(const MultiPoly & rhs) const
{
  if (n_vars_ != rhs.n_vars_) {
    throw std::invalid_argument("MultiPoly: variable counts differ");
  }
}

MultiPoly MultiPoly::operator-() const
{
  MultiPoly out(*this);
  for (auto & [e, c] : out.terms_) {
    c = -c;
  }
  return out;
}

MultiPoly & MultiPoly::operator+=(const MultiPoly & rhs)
{
  check_compatible(rhs);
  for (const auto & [e, c] : rhs.terms_) {
    add_term(e, c);
  }
  return *this;
}

MultiPoly & MultiPoly::operator-=(const MultiPoly & rhs)
{
  check_compatible(rhs);
  for (const auto & [e, c] : rhs.terms_) {
    add_term(e, -c);
  }
  return *this;
}

MultiPoly & MultiPoly::operator+=(const Rational & rhs)
{
  add_term(Exponents(n_vars_, 0), rhs);
  return *this;
}

MultiPoly & MultiPoly::operator*=(const Rational & rhs)
{
  if (rhs.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto & [e, c] : terms_) {
    c *= rhs;
  }
  return *this;
}

MultiPoly operator*(const MultiPoly & lhs, const MultiPoly & rhs)
{
  lhs.check_compatible(rhs);
  MultiPoly out(lhs.n_vars_);
  Exponents e(lhs.n_vars_);
  for (const auto & [ea, ca] : lhs.terms_) {
    for (const auto & [eb, cb] : rhs.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (static_cast<int>(ea[i]) + eb[i] > 255) {
          throw std::overflow_error("MultiPoly: exponent overflow");
        }
        e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
      }
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly multi_arith(const MultiPoly & a, const MultiPoly & b, PolyOp op)
{
  return op == PolyOp::kAdd ? a + b : a * b;
}

}  // namespace pivotforge
