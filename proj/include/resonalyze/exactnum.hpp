// Copyright 2026 The Resonalyze Authors
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

#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace resonalyze {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2.
struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;
  double value() const { return hi + lo; }
};

/// An exact number coeff * pi^pi_exp with rational coeff.
///
/// Periods and frequencies in this library are stored as ScaledReal so that
/// the ratio of two periods can be tested for rationality exactly: the ratio
/// is rational iff both carry the same power of pi.
class ScaledReal {
 public:
  ScaledReal() = default;
  explicit ScaledReal(BigRational coeff, int pi_exp = 0);

  // Throws InvalidArgument when den == 0.
  static ScaledReal make(const BigInt& num, const BigInt& den, int pi_exp = 0);
  static ScaledReal integer(std::int64_t value) { return make(value, 1, 0); }
  static ScaledReal pi(const BigInt& num = 1, const BigInt& den = 1) { return make(num, den, 1); }

  // Accepts "p", "p/q", "pi", "p/q*pi", "p/q*pi^e", "2pi", "pi/2", "-3/4*pi^-1".
  static ScaledReal parse(std::string_view text);

  const BigRational& coeff() const { return coeff_; }
  BigInt numerator() const;
  BigInt denominator() const;
  int pi_exponent() const { return pi_exp_; }

  bool is_zero() const { return coeff_ == 0; }
  int sign() const;

  double to_double() const;
  DoubleDouble to_double_double() const;

  // Canonical text "p/q*pi^e" with the pi part and "/1" omitted when trivial.
  std::string to_string() const;

  friend ScaledReal operator*(const ScaledReal& a, const ScaledReal& b);
  friend ScaledReal operator/(const ScaledReal& a, const ScaledReal& b);
  ScaledReal operator-() const { return ScaledReal(-coeff_, pi_exp_); }
  friend bool operator==(const ScaledReal& a, const ScaledReal& b) {
    return a.pi_exp_ == b.pi_exp_ && a.coeff_ == b.coeff_;
  }

 private:
  void canonicalize();

  BigRational coeff_{0};
  int pi_exp_ = 0;
};

ScaledReal sr_make(const BigInt& num, const BigInt& den, int pi_exp);
inline ScaledReal sr_mul(const ScaledReal& a, const ScaledReal& b) { return a * b; }
inline ScaledReal sr_div(const ScaledReal& a, const ScaledReal& b) { return a / b; }

// Classification of a period ratio: either irrational, or m/n in lowest terms.
struct RatioClass {
  struct Rational {
    BigInt m;
    BigInt n;
  };
  std::optional<Rational> rational;

  bool is_rational() const { return rational.has_value(); }
  bool is_integer() const { return rational && rational->n == 1; }
  static RatioClass irrational() { return {}; }
  static RatioClass of(BigInt m, BigInt n) { return {Rational{std::move(m), std::move(n)}}; }
  friend bool operator==(const RatioClass& a, const RatioClass& b) {
    if (a.is_rational() != b.is_rational()) return false;
    return !a.is_rational() || (a.rational->m == b.rational->m && a.rational->n == b.rational->n);
  }
};

// alpha = T2/T1. Rational iff the two periods carry the same power of pi.
RatioClass ratio_kind(const ScaledReal& t2, const ScaledReal& t1);

struct Approximation {
  ScaledReal value;
  double residual = 0.0;  // |x - value|
};

/// Best rational approximation p/q of x / pi^pi_hint with q <= max_denominator,
/// tagged with pi^pi_hint. Throws NoExactRepresentation when the residual
/// exceeds `tolerance`.
Approximation float_to_scaled(double x, std::int64_t max_denominator, int pi_hint = 0,
                              double tolerance = std::numeric_limits<double>::infinity());

/// Splits t = n*T + r with 0 <= r < T using a double-double copy of T, so the
/// remainder stays accurate when n is in the millions.
class PeriodReducer {
 public:
  struct Reduced {
    std::int64_t periods = 0;
    double remainder = 0.0;
  };

  PeriodReducer() = default;
  explicit PeriodReducer(const ScaledReal& period);
  explicit PeriodReducer(DoubleDouble period) : period_(period) {}

  Reduced reduce(double t) const;
  double period() const { return period_.hi; }

 private:
  DoubleDouble period_{};
};

}  // namespace resonalyze
