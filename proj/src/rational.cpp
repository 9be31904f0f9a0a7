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

#include "pivotforge/rational.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace pivotforge
{
namespace
{

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

constexpr i128 kSmallMax = std::numeric_limits<std::int64_t>::max();
// INT64_MIN is excluded so negation and abs never overflow.
constexpr i128 kSmallMin = -kSmallMax;

bool fits_small(i128 v) { return v >= kSmallMin && v <= kSmallMax; }

u128 gcd128(u128 a, u128 b)
{
  if (a <= std::numeric_limits<std::uint64_t>::max() && b <= std::numeric_limits<std::uint64_t>::max()) {
    return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  }
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

mpz_class mpz_from_i128(i128 v)
{
  const bool negative = v < 0;
  u128 mag = abs128(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));  // NOLINT
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));        // NOLINT
  mpz_class out = (hi << 64) + lo;
  return negative ? mpz_class(-out) : out;
}

bool mpz_fits_small(const mpz_class & z)
{
  return mpz_fits_slong_p(z.get_mpz_t()) != 0 && z != std::numeric_limits<std::int64_t>::min();
}

}  // namespace

void Rational::set_int64_min() { assign_big(mpq_class(mpz_from_i128(kInt64Min))); }

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
{
  if (denominator == 0) {
    throw std::domain_error("Rational: zero denominator");
  }
  normalize_small(numerator, denominator);
}

Rational::Rational(const mpq_class & value) { assign_big(value); }

void Rational::copy_big(const Rational & other)
{
  if (big_) {
    *big_ = *other.big_;
  } else {
    big_ = std::make_unique<mpq_class>(*other.big_);
  }
}

void Rational::assign_big(mpq_class value)
{
  value.canonicalize();
  if (mpz_fits_small(value.get_num()) && mpz_fits_small(value.get_den())) {
    num_ = value.get_num().get_si();
    den_ = value.get_den().get_si();
    big_.reset();
    return;
  }
  if (big_) {
    *big_ = std::move(value);
  } else {
    big_ = std::make_unique<mpq_class>(std::move(value));
  }
}

void Rational::normalize_small(i128 numerator, i128 denominator)
{
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  if (numerator == 0) {
    num_ = 0;
    den_ = 1;
    big_.reset();
    return;
  }
  const u128 g = gcd128(abs128(numerator), static_cast<u128>(denominator));
  if (g > 1) {
    numerator /= static_cast<i128>(g);
    denominator /= static_cast<i128>(g);
  }
  if (fits_small(numerator) && fits_small(denominator)) {
    num_ = static_cast<std::int64_t>(numerator);
    den_ = static_cast<std::int64_t>(denominator);
    big_.reset();
  } else {
    mpq_class q(mpz_from_i128(numerator), mpz_from_i128(denominator));
    assign_big(std::move(q));
  }
}

Rational Rational::parse(std::string_view text)
{
  const auto slash = text.find('/');
  auto parse_int = [](std::string_view part) {
    if (part.empty()) {
      throw std::invalid_argument("Rational: empty integer component");
    }
    std::size_t start = (part.front() == '-' || part.front() == '+') ? 1 : 0;
    if (start == part.size()) {
      throw std::invalid_argument("Rational: missing digits");
    }
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') {
        throw std::invalid_argument("Rational: invalid character in '" + std::string(part) + "'");
      }
    }
    std::string digits(part.front() == '+' ? part.substr(1) : part);
    return mpz_class(digits, 10);
  };
  mpz_class num = parse_int(text.substr(0, slash));
  mpz_class den = slash == std::string_view::npos ? mpz_class(1) : parse_int(text.substr(slash + 1));
  if (den == 0) {
    throw std::invalid_argument("Rational: zero denominator");
  }
  return Rational(mpq_class(num, den));
}

std::string Rational::to_string() const
{
  if (is_small()) {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }
  return big_->get_num().get_str() + "/" + big_->get_den().get_str();
}

double Rational::to_double() const
{
  return is_small() ? static_cast<double>(num_) / static_cast<double>(den_) : big_->get_d();
}

mpq_class Rational::to_mpq() const
{
  if (is_small()) {
    return mpq_class(mpz_from_i128(num_), mpz_from_i128(den_));
  }
  return *big_;
}

mpz_class Rational::numerator() const { return is_small() ? mpz_from_i128(num_) : big_->get_num(); }

mpz_class Rational::denominator() const { return is_small() ? mpz_from_i128(den_) : big_->get_den(); }

int Rational::sign_big() const { return sgn(*big_); }

bool Rational::is_integer() const { return is_small() ? den_ == 1 : big_->get_den() == 1; }

Rational Rational::operator-() const
{
  Rational out(*this);
  if (out.is_small()) {
    out.num_ = -out.num_;
  } else {
    *out.big_ = -*out.big_;
  }
  return out;
}

Rational & Rational::add_general(const Rational & rhs)
{
  if (is_small() && rhs.is_small()) {
    if (den_ == rhs.den_) {
      normalize_small(static_cast<i128>(num_) + rhs.num_, den_);
    } else {
      normalize_small(
        static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_,
        static_cast<i128>(den_) * rhs.den_);
    }
    return *this;
  }
  assign_big(to_mpq() + rhs.to_mpq());
  return *this;
}

Rational & Rational::sub_general(const Rational & rhs)
{
  if (is_small() && rhs.is_small()) {
    if (den_ == rhs.den_) {
      normalize_small(static_cast<i128>(num_) - rhs.num_, den_);
    } else {
      normalize_small(
        static_cast<i128>(num_) * rhs.den_ - static_cast<i128>(rhs.num_) * den_,
        static_cast<i128>(den_) * rhs.den_);
    }
    return *this;
  }
  assign_big(to_mpq() - rhs.to_mpq());
  return *this;
}

Rational & Rational::mul_general(const Rational & rhs)
{
  if (is_small() && rhs.is_small()) {
    if (den_ == 1 && rhs.den_ == 1) {
      const i128 p = static_cast<i128>(num_) * rhs.num_;
      if (fits_small(p)) {
        num_ = static_cast<std::int64_t>(p);
        return *this;
      }
    }
    normalize_small(static_cast<i128>(num_) * rhs.num_, static_cast<i128>(den_) * rhs.den_);
    return *this;
  }
  assign_big(to_mpq() * rhs.to_mpq());
  return *this;
}

Rational & Rational::operator/=(const Rational & rhs)
{
  if (rhs.is_zero()) {
    throw std::domain_error("Rational: division by zero");
  }
  if (is_small() && rhs.is_small()) {
    normalize_small(static_cast<i128>(num_) * rhs.den_, static_cast<i128>(den_) * rhs.num_);
    return *this;
  }
  assign_big(to_mpq() / rhs.to_mpq());
  return *this;
}

bool operator==(const Rational & lhs, const Rational & rhs)
{
  if (lhs.is_small() != rhs.is_small()) {
    return false;  // canonical representation
  }
  if (lhs.is_small()) {
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }
  return *lhs.big_ == *rhs.big_;
}

std::strong_ordering operator<=>(const Rational & lhs, const Rational & rhs)
{
  if (lhs.is_small() && rhs.is_small()) {
    const i128 a = static_cast<i128>(lhs.num_) * rhs.den_;
    const i128 b = static_cast<i128>(rhs.num_) * lhs.den_;
    return a <=> b;
  }
  const int c = cmp(lhs.to_mpq(), rhs.to_mpq());
  return c <=> 0;
}

Rational abs(const Rational & value) { return value.sign() < 0 ? -value : value; }

Rational pow2_general(int exponent)
{
  mpz_class p(1);
  if (exponent >= 0) {
    p <<= static_cast<mp_bitcnt_t>(exponent);
    return Rational(mpq_class(p));
  }
  p <<= static_cast<mp_bitcnt_t>(-exponent);
  return Rational(mpq_class(mpz_class(1), p));
}

}  // namespace pivotforge
