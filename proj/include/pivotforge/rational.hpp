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

#ifndef PIVOTFORGE__RATIONAL_HPP_
#define PIVOTFORGE__RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

namespace pivotforge
{

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in an int64 are kept inline;
/// anything larger is promoted to a GMP rational and demoted again as soon
/// as it fits. The representation is invisible to callers.
class Rational
{
public:
  Rational() = default;
  Rational(std::int64_t value)  // NOLINT(google-explicit-constructor)
  {
    if (value == std::numeric_limits<std::int64_t>::min()) {
      set_int64_min();
    } else {
      num_ = value;
    }
  }
  Rational(int value) : Rational(static_cast<std::int64_t>(value)) {}  // NOLINT
  Rational(std::int64_t numerator, std::int64_t denominator);
  explicit Rational(const mpq_class & value);

  Rational(const Rational & other) : num_(other.num_), den_(other.den_)
  {
    if (other.big_) {
      copy_big(other);
    }
  }
  Rational(Rational && other) noexcept = default;
  Rational & operator=(const Rational & other)
  {
    if (this != &other) {
      num_ = other.num_;
      den_ = other.den_;
      if (other.big_) {
        copy_big(other);
      } else {
        big_.reset();
      }
    }
    return *this;
  }
  Rational & operator=(Rational && other) noexcept = default;
  ~Rational() = default;

  /// Parses "p/q" or "p". Throws std::invalid_argument on malformed input
  /// or a zero denominator.
  static Rational parse(std::string_view text);

  /// Always "p/q", including "/1" for integers.
  std::string to_string() const;
  double to_double() const;
  mpq_class to_mpq() const;
  mpz_class numerator() const;
  mpz_class denominator() const;

  int sign() const { return is_small() ? (num_ > 0) - (num_ < 0) : sign_big(); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const;

  Rational operator-() const;
  // Integer operands take an inline path; everything else goes out of line.
  Rational & operator+=(const Rational & rhs)
  {
    std::int64_t out = 0;
    if (both_small_integers(rhs) && !__builtin_add_overflow(num_, rhs.num_, &out) && out != kInt64Min) {
      num_ = out;
      return *this;
    }
    return add_general(rhs);
  }
  Rational & operator-=(const Rational & rhs)
  {
    std::int64_t out = 0;
    if (both_small_integers(rhs) && !__builtin_sub_overflow(num_, rhs.num_, &out) && out != kInt64Min) {
      num_ = out;
      return *this;
    }
    return sub_general(rhs);
  }
  Rational & operator*=(const Rational & rhs)
  {
    std::int64_t out = 0;
    if (both_small_integers(rhs) && !__builtin_mul_overflow(num_, rhs.num_, &out) && out != kInt64Min) {
      num_ = out;
      return *this;
    }
    return mul_general(rhs);
  }
  /// Throws std::domain_error on division by zero.
  Rational & operator/=(const Rational & rhs);

  friend Rational operator+(Rational lhs, const Rational & rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational & rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational & rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational & rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational & lhs, const Rational & rhs);
  friend std::strong_ordering operator<=>(const Rational & lhs, const Rational & rhs);

  friend std::ostream & operator<<(std::ostream & os, const Rational & value)
  {
    return os << value.to_string();
  }

private:
  static constexpr std::int64_t kInt64Min = std::numeric_limits<std::int64_t>::min();

  bool both_small_integers(const Rational & rhs) const
  {
    return den_ == 1 && rhs.den_ == 1 && !big_ && !rhs.big_;
  }
  Rational & add_general(const Rational & rhs);
  Rational & sub_general(const Rational & rhs);
  Rational & mul_general(const Rational & rhs);
  void copy_big(const Rational & other);
  void set_int64_min();
  int sign_big() const;
  void assign_big(mpq_class value);
  __extension__ typedef __int128 Wide;
  void normalize_small(Wide numerator, Wide denominator);
  bool is_small() const { return !big_; }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

Rational abs(const Rational & value);
Rational pow2_general(int exponent);
inline Rational pow2(int exponent)
{
  return exponent >= 0 && exponent < 62 ? Rational(std::int64_t{1} << exponent) : pow2_general(exponent);
}

}  // namespace pivotforge

#endif  // PIVOTFORGE__RATIONAL_HPP_
