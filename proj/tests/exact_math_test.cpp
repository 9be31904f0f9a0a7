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

#include <optional>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "pivotforge/dual.hpp"
#include "pivotforge/error.hpp"
#include "pivotforge/multipoly.hpp"
#include "pivotforge/rational.hpp"
#include "pivotforge/unipoly.hpp"

using pivotforge::DualNumber;
using pivotforge::Error;
using pivotforge::ErrorCode;
using pivotforge::MultiPoly;
using pivotforge::PolyOp;
using pivotforge::Rational;
using pivotforge::UniPoly;

namespace
{

Rational r(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

Rational random_rational(std::mt19937_64 & rng, int num_range, int den_range)
{
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, den_range);
  return Rational(num(rng), den(rng));
}

// ---------------------------------------------------------------------------
// Independent line-search oracle: grid scan with exact bisection for sign
// changes, plus rational-root-theorem enumeration for roots the grid cannot
// see (tangencies). Works on polynomials whose coefficients are integers up to
// a positive rational scale, which is how the generator below builds them.

std::vector<std::int64_t> divisors(std::int64_t v)
{
  v = v < 0 ? -v : v;
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      out.push_back(v / d);
    }
  }
  return out;
}

struct OracleAnswer
{
  enum Kind { kValue, kNone, kIrrational } kind;
  Rational value;
};

OracleAnswer scan_oracle(const std::vector<std::int64_t> & int_coeffs, const Rational & scale, const Rational & t_max)
{
  std::vector<Rational> coeffs;
  for (auto c : int_coeffs) {
    coeffs.push_back(Rational(c) * scale);
  }
  const UniPoly p(coeffs);
  if (p.is_zero() || p(r(0)).sign() <= 0) {
    return {OracleAnswer::kValue, r(0)};
  }
  // rational roots in (0, t_max]
  std::optional<Rational> smallest_rational;
  std::size_t lead_index = int_coeffs.size() - 1;
  while (int_coeffs[lead_index] == 0) {
    --lead_index;
  }
  std::size_t low_index = 0;
  while (int_coeffs[low_index] == 0) {
    ++low_index;
  }
  for (auto num : divisors(int_coeffs[low_index])) {
    for (auto den : divisors(int_coeffs[lead_index])) {
      const Rational cand(num, den);
      if (cand.sign() > 0 && cand <= t_max && p(cand).is_zero()) {
        if (!smallest_rational || cand < *smallest_rational) {
          smallest_rational = cand;
        }
      }
    }
  }
  constexpr int kGrid = 2000;
  Rational prev(0);
  for (int j = 1; j <= kGrid; ++j) {
    Rational t = t_max * Rational(j, kGrid);
    if (p(t).sign() <= 0) {
      Rational a = prev;
      Rational b = t;
      for (int step = 0; step < 60; ++step) {
        Rational mid = (a + b) * r(1, 2);
        if (p(mid).sign() <= 0) {
          b = mid;
        } else {
          a = mid;
        }
      }
      if (smallest_rational && *smallest_rational <= b) {
        return {OracleAnswer::kValue, *smallest_rational};
      }
      return {OracleAnswer::kIrrational, a};
    }
    prev = t;
  }
  if (smallest_rational) {
    return {OracleAnswer::kValue, *smallest_rational};
  }
  return {OracleAnswer::kNone, r(0)};
}

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical")
{
  CHECK(r(2, 4) == r(1, 2));
  CHECK(r(-3, -6) == r(1, 2));
  CHECK(r(1, -2).to_string() == "-1/2");
  CHECK(r(3).to_string() == "3/1");
  CHECK(r(1, 3) + r(1, 6) == r(1, 2));
  CHECK(r(1, 3) * r(3, 7) == r(1, 7));
  CHECK(r(1, 3) / r(2, 3) == r(1, 2));
  CHECK(r(1, 3) < r(1, 2));
  CHECK(Rational::parse("-12/8") == r(-3, 2));
  CHECK(Rational::parse("5") == r(5));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/x"), std::invalid_argument);
  CHECK_THROWS_AS(r(1) / r(0), std::domain_error);
}

TEST_CASE("rational promotes past int64 and demotes back")
{
  const Rational big = pivotforge::pow2(62) * pivotforge::pow2(62);
  CHECK(big.to_string() == "21267647932558653966460912964485513216/1");
  CHECK(big / pivotforge::pow2(62) == pivotforge::pow2(62));
  CHECK(big > pivotforge::pow2(100) / pivotforge::pow2(1));
  CHECK((big - big).is_zero());
  CHECK(pivotforge::pow2(-70) * pivotforge::pow2(70) == r(1));
}

TEST_CASE("rational agrees with GMP on random mixed-size operations")
{
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> wide(-(std::int64_t{1} << 62), std::int64_t{1} << 62);
  for (int trial = 0; trial < 2000; ++trial) {
    std::int64_t d1 = wide(rng);
    std::int64_t d2 = wide(rng);
    if (d1 == 0) d1 = 1;
    if (d2 == 0) d2 = 1;
    const Rational a(wide(rng), d1);
    const Rational b(wide(rng), d2);
    const mpq_class qa = a.to_mpq();
    const mpq_class qb = b.to_mpq();
    CHECK((a + b).to_mpq() == qa + qb);
    CHECK((a - b).to_mpq() == qa - qb);
    CHECK((a * b).to_mpq() == qa * qb);
    if (!b.is_zero()) {
      CHECK((a / b).to_mpq() == qa / qb);
    }
    CHECK(((a < b) == (qa < qb)));
    CHECK((a == b) == (qa == qb));
  }
}

TEST_CASE("uni_eval examples")
{
  CHECK(pivotforge::uni_eval(UniPoly{r(0), r(1)}, r(1, 2)) == r(1, 2));
  CHECK(pivotforge::uni_eval(UniPoly{r(1), r(-2)}, r(1, 2)) == r(0));
  CHECK(pivotforge::uni_eval(UniPoly{r(0)}, r(7)) == r(0));
  CHECK(UniPoly{r(0)}.is_zero());
  CHECK(UniPoly{r(1), r(2), r(0)}.degree() == 1);
}

TEST_CASE("univariate division and gcd")
{
  // (μ-1)(μ-2) / (μ-1)
  const UniPoly p{r(2), r(-3), r(1)};
  const UniPoly d{r(-1), r(1)};
  auto [q, rem] = pivotforge::divmod(p, d);
  CHECK(q == UniPoly{r(-2), r(1)});
  CHECK(rem.is_zero());
  CHECK(pivotforge::gcd(p, UniPoly{r(-2), r(2)}) == d);
  CHECK(pivotforge::count_roots(p, r(0), r(3)) == 2);
  CHECK(pivotforge::count_roots(p, r(1), r(2)) == 1);
  CHECK(pivotforge::count_roots(p, r(0), r(1)) == 1);
}

TEST_CASE("simplest rational in an interval")
{
  CHECK(pivotforge::simplest_between(r(1, 3), r(1, 2)) == r(1, 2));
  CHECK(pivotforge::simplest_between(r(3, 10), r(4, 10)) == r(1, 3));
  CHECK(pivotforge::simplest_between(r(-4, 10), r(-3, 10)) == r(-1, 3));
  CHECK(pivotforge::simplest_between(r(-1, 10), r(4, 10)) == r(0));
  CHECK(pivotforge::simplest_between(r(7, 5), r(7, 5)) == r(7, 5));
  CHECK(pivotforge::simplest_between(r(3, 2), r(5, 2)) == r(2));
}

TEST_CASE("first_nonpositive examples")
{
  CHECK(pivotforge::first_nonpositive(UniPoly{r(-1)}, r(1)) == r(0));
  CHECK(pivotforge::first_nonpositive(UniPoly{r(1), r(-2)}, r(1)) == r(1, 2));
  CHECK(pivotforge::first_nonpositive(UniPoly{r(1)}, r(1)) == std::nullopt);
  CHECK(pivotforge::first_nonpositive(UniPoly{}, r(1)) == r(0));
  // root beyond the interval
  CHECK(pivotforge::first_nonpositive(UniPoly{r(1), r(-2)}, r(1, 4)) == std::nullopt);
  // root exactly at t_max
  CHECK(pivotforge::first_nonpositive(UniPoly{r(1), r(-2)}, r(1, 2)) == r(1, 2));
  // tangency at μ = 1/3: (3μ-1)²
  CHECK(pivotforge::first_nonpositive(UniPoly{r(1), r(-6), r(9)}, r(1)) == r(1, 3));
  // two roots, the smaller one wins: (μ-1/5)(μ-3/4)
  CHECK(pivotforge::first_nonpositive(UniPoly{r(3, 20), r(-19, 20), r(1)}, r(1)) == r(1, 5));
  CHECK_THROWS_AS(pivotforge::first_nonpositive(UniPoly{r(1)}, r(-1)), Error);
}

TEST_CASE("first_nonpositive reports irrational stopping points")
{
  // 1 - 2μ² has its root at 1/√2
  try {
    (void)pivotforge::first_nonpositive(UniPoly{r(1), r(0), r(-2)}, r(1));
    FAIL("expected NOT_REPRESENTABLE");
  } catch (const Error & e) {
    CHECK(e.code() == ErrorCode::kNotRepresentable);
  }
  // same polynomial but the interval stops short of the root
  CHECK(pivotforge::first_nonpositive(UniPoly{r(1), r(0), r(-2)}, r(7, 10)) == std::nullopt);
}

TEST_CASE("first_nonpositive agrees with the grid oracle on random polynomials")
{
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> small(-9, 9);
  std::uniform_int_distribution<int> root_num(0, 12);
  std::uniform_int_distribution<int> root_den(1, 6);
  std::uniform_int_distribution<int> degree_dist(1, 4);
  int value_cases = 0;
  int none_cases = 0;
  int irrational_cases = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<std::int64_t> coeffs;
    if (trial % 2 == 0) {
      // random integer coefficients
      const int degree = degree_dist(rng);
      for (int i = 0; i <= degree; ++i) {
        coeffs.push_back(small(rng));
      }
      if (coeffs.back() == 0) {
        coeffs.back() = 1;
      }
    } else {
      // product of (den·μ - num) factors: rational roots
      coeffs = {small(rng) >= 0 ? 1 : -1};
      const int degree = degree_dist(rng);
      for (int i = 0; i < degree; ++i) {
        const std::int64_t num = root_num(rng);
        const std::int64_t den = root_den(rng);
        std::vector<std::int64_t> next(coeffs.size() + 1, 0);
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
          next[j] += -num * coeffs[j];
          next[j + 1] += den * coeffs[j];
        }
        coeffs = next;
      }
    }
    bool all_zero = true;
    for (auto c : coeffs) all_zero = all_zero && c == 0;
    if (all_zero) continue;

    const Rational scale(std::uniform_int_distribution<int>(1, 9)(rng), std::uniform_int_distribution<int>(1, 9)(rng));
    const Rational t_max(std::uniform_int_distribution<int>(1, 30)(rng), 10);
    std::vector<Rational> rc;
    for (auto c : coeffs) rc.push_back(Rational(c) * scale);
    const UniPoly p(rc);

    const OracleAnswer expected = scan_oracle(coeffs, scale, t_max);
    CAPTURE(p);
    CAPTURE(t_max);
    switch (expected.kind) {
      case OracleAnswer::kValue:
        ++value_cases;
        CHECK(pivotforge::first_nonpositive(p, t_max) == expected.value);
        break;
      case OracleAnswer::kNone:
        ++none_cases;
        CHECK(pivotforge::first_nonpositive(p, t_max) == std::nullopt);
        break;
      case OracleAnswer::kIrrational:
        ++irrational_cases;
        try {
          (void)pivotforge::first_nonpositive(p, t_max);
          FAIL("expected NOT_REPRESENTABLE");
        } catch (const Error & e) {
          CHECK(e.code() == ErrorCode::kNotRepresentable);
        }
        break;
    }
  }
  CHECK(value_cases + none_cases + irrational_cases >= 200);
  CHECK(value_cases > 20);
  CHECK(none_cases > 20);
  CHECK(irrational_cases > 20);
}

TEST_CASE("multi_arith examples")
{
  const MultiPoly x1 = MultiPoly::variable(2, 1);
  const MultiPoly x2 = MultiPoly::variable(2, 2);
  CHECK(pivotforge::multi_arith(x1, -x1, PolyOp::kAdd).is_zero());

  const MultiPoly sq = pivotforge::multi_arith(x1, x1, PolyOp::kMul);
  REQUIRE(sq.terms().size() == 1);
  CHECK(sq.terms().begin()->first == pivotforge::Exponents{2, 0});
  CHECK(sq.total_degree() == 2);

  const MultiPoly lhs = pivotforge::multi_arith(MultiPoly::constant(2, r(1)) - x1 * r(2), x2, PolyOp::kMul);
  const MultiPoly expected = x2 - x1 * x2 * r(2);
  CHECK(lhs == expected);
  for (int a = 0; a <= 1; ++a) {
    for (int b = 0; b <= 1; ++b) {
      const std::vector<Rational> pt{r(a), r(b)};
      CHECK(pivotforge::multi_eval(lhs, pt) == (r(1) - r(2) * r(a)) * r(b));
    }
  }
  CHECK_THROWS(x1 + MultiPoly::variable(3, 1));
}

TEST_CASE("multi_eval examples")
{
  const MultiPoly x1 = MultiPoly::variable(2, 1);
  const MultiPoly x2 = MultiPoly::variable(2, 2);
  const MultiPoly p = x1 - x1 * x2 * r(2);
  CHECK(pivotforge::multi_eval(p, std::vector<Rational>{r(1), r(1)}) == r(-1));
  for (auto q : {r(0), r(5), r(-7, 3)}) {
    CHECK(pivotforge::multi_eval(p, std::vector<Rational>{r(0), q}) == r(0));
  }
}

TEST_CASE("graded lexicographic term order")
{
  const MultiPoly x1 = MultiPoly::variable(2, 1);
  const MultiPoly x2 = MultiPoly::variable(2, 2);
  const MultiPoly p = x2 * x2 + x1 * x2 + x1 * x1 + x2 + x1 + r(1);
  std::vector<pivotforge::Exponents> order;
  for (const auto & [e, c] : p.terms()) order.push_back(e);
  const std::vector<pivotforge::Exponents> expected{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
  CHECK(order == expected);
}

namespace
{

MultiPoly random_multipoly(std::mt19937_64 & rng, std::size_t n_vars, int terms, int max_exp)
{
  std::uniform_int_distribution<int> exp_dist(0, max_exp);
  MultiPoly p(n_vars);
  for (int t = 0; t < terms; ++t) {
    pivotforge::Exponents e(n_vars);
    for (auto & v : e) v = static_cast<std::uint8_t>(exp_dist(rng));
    p.add_term(e, random_rational(rng, 9, 5));
  }
  return p;
}

}  // namespace

TEST_CASE("multi_eval is a ring homomorphism on random inputs")
{
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const MultiPoly a = random_multipoly(rng, 3, 4, 2);
    const MultiPoly b = random_multipoly(rng, 3, 4, 2);
    const std::vector<Rational> x{random_rational(rng, 5, 4), random_rational(rng, 5, 4), random_rational(rng, 5, 4)};
    CHECK(pivotforge::multi_eval(a * b, x) == pivotforge::multi_eval(a, x) * pivotforge::multi_eval(b, x));
    CHECK(pivotforge::multi_eval(a + b, x) == pivotforge::multi_eval(a, x) + pivotforge::multi_eval(b, x));
  }
}

TEST_CASE("dual-number differentiation matches symbolic derivatives")
{
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const MultiPoly p = random_multipoly(rng, 3, 5, 3);
    const std::vector<Rational> x{random_rational(rng, 5, 4), random_rational(rng, 5, 4), random_rational(rng, 5, 4)};
    for (std::size_t k = 1; k <= 3; ++k) {
      std::vector<DualNumber> xs;
      for (std::size_t i = 0; i < 3; ++i) {
        xs.emplace_back(x[i], Rational(i + 1 == k ? 1 : 0));
      }
      const DualNumber out = pivotforge::multi_eval<DualNumber>(p, xs);
      CHECK(out.value == pivotforge::multi_eval(p, x));
      CHECK(out.derivative == pivotforge::multi_eval(p.derivative(k), x));
    }
  }
}

TEST_CASE("dual numbers obey the product rule")
{
  const DualNumber a(r(3), r(2));
  const DualNumber b(r(5), r(-1));
  const DualNumber p = a * b;
  CHECK(p.value == r(15));
  CHECK(p.derivative == r(3) * r(-1) + r(2) * r(5));
}
