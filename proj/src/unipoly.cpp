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

#include "pivotforge/unipoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "pivotforge/error.hpp"

namespace pivotforge
{

UniPoly::UniPoly(Rational constant)
{
  coeffs_.push_back(std::move(constant));
  trim();
}

UniPoly::UniPoly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UniPoly UniPoly::affine(Rational c0, Rational c1)
{
  return UniPoly(std::vector<Rational>{std::move(c0), std::move(c1)});
}

void UniPoly::trim()
{
  while (!coeffs_.empty() && coeffs_.back().is_zero()) {
    coeffs_.pop_back();
  }
}

Rational UniPoly::coefficient(std::size_t power) const
{
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

const Rational & UniPoly::leading() const
{
  if (coeffs_.empty()) {
    throw std::domain_error("UniPoly: zero polynomial has no leading coefficient");
  }
  return coeffs_.back();
}

Rational UniPoly::operator()(const Rational & t) const
{
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::derivative() const
{
  std::vector<Rational> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out.push_back(coeffs_[i] * Rational(static_cast<std::int64_t>(i)));
  }
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-() const
{
  UniPoly out(*this);
  for (auto & c : out.coeffs_) {
    c = -c;
  }
  return out;
}

UniPoly & UniPoly::operator+=(const UniPoly & rhs)
{
  if (rhs.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size());
  }
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[i] += rhs.coeffs_[i];
  }
  trim();
  return *this;
}

UniPoly & UniPoly::operator-=(const UniPoly & rhs)
{
  if (rhs.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size());
  }
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[i] -= rhs.coeffs_[i];
  }
  trim();
  return *this;
}

UniPoly operator*(const UniPoly & lhs, const UniPoly & rhs)
{
  if (lhs.is_zero() || rhs.is_zero()) {
    return {};
  }
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i].is_zero()) {
      continue;
    }
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return UniPoly(std::move(out));
}

UniPoly & UniPoly::operator*=(const UniPoly & rhs) { return *this = *this * rhs; }

UniPoly & UniPoly::operator+=(const Rational & rhs)
{
  if (coeffs_.empty()) {
    coeffs_.emplace_back();
  }
  coeffs_[0] += rhs;
  trim();
  return *this;
}

UniPoly & UniPoly::operator*=(const Rational & rhs)
{
  if (rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto & c : coeffs_) {
    c *= rhs;
  }
  return *this;
}

std::ostream & operator<<(std::ostream & os, const UniPoly & p)
{
  os << '[';
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    os << (i ? ", " : "") << p.coeffs_[i];
  }
  return os << ']';
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly & dividend, const UniPoly & divisor)
{
  if (divisor.is_zero()) {
    throw std::domain_error("UniPoly: division by the zero polynomial");
  }
  std::vector<Rational> rem = dividend.coefficients();
  const auto & d = divisor.coefficients();
  const std::size_t dd = d.size() - 1;
  if (rem.size() < d.size()) {
    return {UniPoly(), dividend};
  }
  std::vector<Rational> quot(rem.size() - dd);
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (rem[i].is_zero()) {
      continue;
    }
    Rational factor = rem[i] / d.back();
    for (std::size_t j = 0; j <= dd; ++j) {
      rem[i - dd + j] -= factor * d[j];
    }
    quot[i - dd] = std::move(factor);
  }
  rem.resize(dd);
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd(UniPoly a, UniPoly b)
{
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) {
    return a;
  }
  return a * (Rational(1) / a.leading());
}

Rational uni_eval(const UniPoly & p, const Rational & t) { return p(t); }

namespace
{

std::vector<UniPoly> sturm_chain(const UniPoly & squarefree)
{
  std::vector<UniPoly> chain{squarefree, squarefree.derivative()};
  while (!chain.back().is_zero()) {
    UniPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    chain.push_back(-r);
  }
  chain.pop_back();
  return chain;
}

int sign_variations(const std::vector<UniPoly> & chain, const Rational & t)
{
  int variations = 0;
  int last = 0;
  for (const auto & q : chain) {
    const int s = q(t).sign();
    if (s == 0) {
      continue;
    }
    if (last != 0 && s != last) {
      ++variations;
    }
    last = s;
  }
  return variations;
}

UniPoly squarefree_part(const UniPoly & p)
{
  if (p.degree() <= 1) {
    return p;
  }
  UniPoly g = gcd(p, p.derivative());
  return g.degree() <= 0 ? p : divmod(p, g).first;
}

// |leading coefficient| of the primitive integer polynomial proportional to p.
mpz_class primitive_leading(const UniPoly & p)
{
  mpz_class den_lcm(1);
  for (const auto & c : p.coefficients()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
  }
  mpz_class num_gcd(0);
  for (const auto & c : p.coefficients()) {
    mpz_class scaled = c.numerator() * (den_lcm / c.denominator());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  mpz_class lead = p.leading().numerator() * (den_lcm / p.leading().denominator()) / num_gcd;
  return abs(lead);
}

}  // namespace

int count_roots(const UniPoly & p, const Rational & a, const Rational & b)
{
  if (p.is_zero()) {
    throw std::domain_error("count_roots: zero polynomial");
  }
  const auto chain = sturm_chain(squarefree_part(p));
  return sign_variations(chain, a) - sign_variations(chain, b);
}

Rational simplest_between(const Rational & lo_in, const Rational & hi_in)
{
  if (hi_in < lo_in) {
    throw std::invalid_argument("simplest_between: empty interval");
  }
  if (lo_in.sign() <= 0 && hi_in.sign() >= 0) {
    return Rational(0);
  }
  if (hi_in.sign() < 0) {
    return -simplest_between(-hi_in, -lo_in);
  }
  // Continued-fraction descent, 0 < lo <= hi.
  mpq_class lo = lo_in.to_mpq();
  mpq_class hi = hi_in.to_mpq();
  std::vector<mpz_class> terms;
  for (;;) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    if (lo == mpq_class(fl)) {
      terms.push_back(fl);
      break;
    }
    if (mpq_class(fl + 1) <= hi) {
      terms.push_back(fl + 1);
      break;
    }
    terms.push_back(fl);
    mpq_class new_lo = 1 / (hi - fl);
    mpq_class new_hi = 1 / (lo - fl);
    new_lo.canonicalize();
    new_hi.canonicalize();
    lo = new_lo;
    hi = new_hi;
  }
  mpq_class value(terms.back());
  for (std::size_t i = terms.size() - 1; i-- > 0;) {
    value = mpq_class(terms[i]) + 1 / value;
    value.canonicalize();
  }
  return Rational(value);
}

std::optional<Rational> first_nonpositive(const UniPoly & p, const Rational & t_max)
{
  if (t_max.sign() < 0) {
    throw Error(ErrorCode::kInvalidArgument, "first_nonpositive: negative interval bound");
  }
  if (p.is_zero() || p(Rational(0)).sign() <= 0) {
    return Rational(0);
  }
  if (t_max.is_zero() || p.is_constant()) {
    return std::nullopt;
  }
  if (p.degree() == 1) {
    Rational root = -p.coefficient(0) / p.coefficient(1);
    if (root.sign() > 0 && root <= t_max) {
      return root;
    }
    return std::nullopt;
  }

  // p(0) > 0, so the infimum is the smallest root of p in (0, t_max].
  const UniPoly sq = squarefree_part(p);
  const auto chain = sturm_chain(sq);
  auto roots_in = [&chain](const Rational & a, const Rational & b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
  };

  Rational lo(0);
  Rational hi = t_max;
  int count = roots_in(lo, hi);
  if (count == 0) {
    return std::nullopt;
  }
  // Two distinct rationals whose denominators divide `lead` are at least
  // 1/lead² apart, so an isolating interval narrower than that holds at most
  // one candidate rational root, and it is the simplest rational there.
  const mpz_class lead = primitive_leading(sq);
  const Rational resolution(mpq_class(mpz_class(1), lead * lead));
  const Rational half(1, 2);
  while (count > 1 || !(hi - lo < resolution)) {
    Rational mid = (lo + hi) * half;
    const int left = roots_in(lo, mid);
    if (left >= 1) {
      if (left == 1 && sq(mid).is_zero()) {
        return mid;
      }
      hi = std::move(mid);
      count = left;
    } else {
      lo = std::move(mid);
    }
  }
  if (sq(hi).is_zero()) {
    return hi;
  }
  Rational candidate = simplest_between(lo, hi);
  if (lo < candidate && sq(candidate).is_zero()) {
    return candidate;
  }
  throw Error(
    ErrorCode::kNotRepresentable,
    "stopping point is irrational (isolated in (" + lo.to_string() + ", " + hi.to_string() + "])");
}

}  // namespace pivotforge
