// Copyright 2026 The stabline Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STABLINE_RATIONAL_HPP
#define STABLINE_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "stabline/error.hpp"

namespace stabline {

using BigInt = boost::multiprecision::cpp_int;

// Exact signed fraction. The value is always held in lowest terms with a
// positive denominator, so two Rationals are equal iff their numerators and
// denominators are equal.
class Rational {
 public:
  using Storage = boost::multiprecision::cpp_rational;

  Rational() = default;
  Rational(std::int64_t value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw ZeroDenominatorError("rational with zero denominator");
    value_ = den < 0 ? Storage(BigInt(-num), BigInt(-den)) : Storage(num, den);
  }

  static Rational from_storage(Storage s) {
    Rational r;
    r.value_ = std::move(s);
    return r;
  }

  // Accepts "n", "p/q" and finite decimals "[-+]d*.d*" (at least one digit).
  static Rational parse(std::string_view text);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const {
    return boost::multiprecision::denominator(value_);
  }
  const Storage& storage() const { return value_; }

  int sign() const { return value_.sign(); }
  bool is_zero() const { return value_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }

  // "p/q" in lowest terms, or "p" when the denominator is 1.
  std::string str() const { return value_.str(); }
  double to_double() const { return value_.convert_to<double>(); }

  Rational operator-() const { return from_storage(-value_); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw ZeroDenominatorError("division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = a.value_.compare(b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  Storage value_;
};

/// Reduced fraction p/q with positive denominator. Throws on q == 0.
inline Rational rat(std::int64_t p, std::int64_t q = 1) {
  if (q == 0) throw ZeroDenominatorError("rat(): zero denominator");
  return Rational(BigInt(p), BigInt(q));
}

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

namespace detail {

inline bool all_digits(std::string_view s) {
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

// Decimal digits to BigInt. Leading zeros are stripped first: the BigInt
// string constructor would read "017" as octal.
inline BigInt decimal_digits(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return 0;
  return BigInt(std::string(digits.substr(first)));
}

inline BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty() || !all_digits(s))
    throw ParseError("not a rational numeral: \"" + std::string(whole) + "\"");
  BigInt v = decimal_digits(s);
  return negative ? BigInt(-v) : v;
}

}  // namespace detail

inline Rational Rational::parse(std::string_view text) {
  const std::string_view whole = text;
  if (text.empty()) throw ParseError("empty rational numeral");

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const BigInt num = detail::parse_integer(text.substr(0, slash), whole);
    const std::string_view den_text = text.substr(slash + 1);
    // The denominator may not carry a sign; "1/-2" is rejected.
    if (den_text.empty() || !detail::all_digits(den_text))
      throw ParseError("not a rational numeral: \"" + std::string(whole) + "\"");
    const BigInt den = detail::decimal_digits(den_text);
    if (den == 0)
      throw ParseError("zero denominator in \"" + std::string(whole) + "\"");
    return Rational(num, den);
  }

  if (text.find('.') != std::string_view::npos) {
    bool negative = false;
    if (text.front() == '-' || text.front() == '+') {
      negative = text.front() == '-';
      text.remove_prefix(1);
    }
    const std::size_t d = text.find('.');
    const std::string_view int_part = text.substr(0, d);
    const std::string_view frac_part = text.substr(d + 1);
    if ((int_part.empty() && frac_part.empty()) ||
        !detail::all_digits(int_part) || !detail::all_digits(frac_part))
      throw ParseError("not a rational numeral: \"" + std::string(whole) + "\"");
    std::string digits(int_part);
    digits += frac_part;
    BigInt num = detail::decimal_digits(digits);
    BigInt den = boost::multiprecision::pow(BigInt(10),
                                            static_cast<unsigned>(frac_part.size()));
    if (negative) num = -num;
    return Rational(num, den);
  }

  return Rational(detail::parse_integer(text, whole));
}

}  // namespace stabline

#endif  // STABLINE_RATIONAL_HPP
