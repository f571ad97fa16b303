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

#include "resonalyze/exactnum.hpp"

#include <cctype>
#include <cmath>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "resonalyze/errors.hpp"

namespace resonalyze {

namespace {

using BigFloat = boost::multiprecision::cpp_bin_float_50;

BigFloat pi_power(int e) {
  const BigFloat pi = boost::math::constants::pi<BigFloat>();
  BigFloat out = 1;
  for (int i = 0; i < std::abs(e); ++i) out *= pi;
  return e >= 0 ? out : BigFloat(1) / out;
}

class TextParser {
 public:
  explicit TextParser(std::string_view text) : text_(text) {}

  ScaledReal parse() {
    skip_space();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    BigRational coeff = 1;
    int pi_exp = 0;
    bool divide = false;
    bool any = false;
    while (true) {
      skip_space();
      if (at_end()) break;
      if (any) {
        if (peek() == '*') {
          divide = false;
          ++pos_;
          skip_space();
        } else if (peek() == '/') {
          divide = true;
          ++pos_;
          skip_space();
        } else if (starts_with_pi()) {
          divide = false;  // implicit product "2pi"
        } else {
          fail("unexpected character");
        }
      }
      if (starts_with_pi()) {
        pos_ += 2;
        int e = 1;
        skip_space();
        if (peek() == '^') {
          ++pos_;
          e = parse_signed_small();
        }
        pi_exp += divide ? -e : e;
      } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
        BigInt v = parse_digits();
        if (divide) {
          if (v == 0) throw InvalidArgument("zero denominator in '" + std::string(text_) + "'");
          coeff /= BigRational(v);
        } else {
          coeff *= BigRational(v);
        }
      } else {
        fail("expected integer or 'pi'");
      }
      any = true;
    }
    if (!any) fail("empty number");
    return ScaledReal(negative ? BigRational(-coeff) : coeff, pi_exp);
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool starts_with_pi() const { return text_.substr(pos_, 2) == "pi"; }

  BigInt parse_digits() {
    BigInt v = 0;
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected digits");
    return v;
  }

  int parse_signed_small() {
    skip_space();
    bool neg = false;
    if (peek() == '-' || peek() == '+') {
      neg = peek() == '-';
      ++pos_;
    }
    BigInt v = parse_digits();
    if (v > 64) fail("pi exponent out of range");
    int e = v.convert_to<int>();
    return neg ? -e : e;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidArgument("cannot parse exact number '" + std::string(text_) + "': " + why +
                          " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ScaledReal::ScaledReal(BigRational coeff, int pi_exp) : coeff_(std::move(coeff)), pi_exp_(pi_exp) {
  canonicalize();
}

ScaledReal ScaledReal::make(const BigInt& num, const BigInt& den, int pi_exp) {
  if (den == 0) throw InvalidArgument("ScaledReal: zero denominator");
  // Boost rejects a negative denominator, so move the sign onto the numerator.
  if (den < 0) return ScaledReal(BigRational(-num, -den), pi_exp);
  return ScaledReal(BigRational(num, den), pi_exp);
}

ScaledReal sr_make(const BigInt& num, const BigInt& den, int pi_exp) {
  return ScaledReal::make(num, den, pi_exp);
}

ScaledReal ScaledReal::parse(std::string_view text) { return TextParser(text).parse(); }

void ScaledReal::canonicalize() {
  // cpp_rational keeps lowest terms with a positive denominator already.
  if (coeff_ == 0) pi_exp_ = 0;
}

BigInt ScaledReal::numerator() const { return boost::multiprecision::numerator(coeff_); }
BigInt ScaledReal::denominator() const { return boost::multiprecision::denominator(coeff_); }

int ScaledReal::sign() const { return coeff_ > 0 ? 1 : (coeff_ < 0 ? -1 : 0); }

DoubleDouble ScaledReal::to_double_double() const {
  BigFloat v = BigFloat(numerator()) / BigFloat(denominator());
  if (pi_exp_ != 0) v *= pi_power(pi_exp_);
  const double hi = v.convert_to<double>();
  const double lo = BigFloat(v - hi).convert_to<double>();
  return {hi, lo};
}

double ScaledReal::to_double() const { return to_double_double().hi; }

std::string ScaledReal::to_string() const {
  std::string out = numerator().str();
  const BigInt den = denominator();
  if (den != 1) out += "/" + den.str();
  if (pi_exp_ == 1) {
    out += "*pi";
  } else if (pi_exp_ != 0) {
    out += "*pi^" + std::to_string(pi_exp_);
  }
  return out;
}

ScaledReal operator*(const ScaledReal& a, const ScaledReal& b) {
  return ScaledReal(a.coeff_ * b.coeff_, a.pi_exp_ + b.pi_exp_);
}

ScaledReal operator/(const ScaledReal& a, const ScaledReal& b) {
  if (b.is_zero()) throw InvalidArgument("ScaledReal: division by zero");
  return ScaledReal(a.coeff_ / b.coeff_, a.pi_exp_ - b.pi_exp_);
}

RatioClass ratio_kind(const ScaledReal& t2, const ScaledReal& t1) {
  if (t2.sign() <= 0 || t1.sign() <= 0) {
    throw InvalidArgument("ratio_kind: periods must be positive");
  }
  if (t2.pi_exponent() != t1.pi_exponent()) return RatioClass::irrational();
  const BigRational q = t2.coeff() / t1.coeff();
  return RatioClass::of(boost::multiprecision::numerator(q), boost::multiprecision::denominator(q));
}

Approximation float_to_scaled(double x, std::int64_t max_denominator, int pi_hint, double tolerance) {
  if (!std::isfinite(x)) throw InvalidArgument("float_to_scaled: non-finite input");
  if (max_denominator < 1) throw InvalidArgument("float_to_scaled: max_denominator must be >= 1");

  const BigFloat scaled = BigFloat(x) / pi_power(pi_hint);
  // Exact dyadic value of the double nearest to x / pi^hint.
  const double y = scaled.convert_to<double>();
  const BigRational target = BigRational(std::fabs(y));

  BigRational best;
  const BigInt max_den = max_denominator;
  if (boost::multiprecision::denominator(target) <= max_den) {
    best = target;
  } else {
    // Continued-fraction convergents plus the best semiconvergent.
    BigInt p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    BigInt n = boost::multiprecision::numerator(target);
    BigInt d = boost::multiprecision::denominator(target);
    while (true) {
      const BigInt a = n / d;
      const BigInt q2 = q0 + a * q1;
      if (q2 > max_den) break;
      const BigInt p2 = p0 + a * p1;
      p0 = p1;
      q0 = q1;
      p1 = p2;
      q1 = q2;
      const BigInt rem = n - a * d;
      n = d;
      d = rem;
      if (d == 0) break;
    }
    const BigInt k = (max_den - q0) / q1;
    const BigRational bound1(p0 + k * p1, q0 + k * q1);
    const BigRational bound2(p1, q1);
    best = abs(bound2 - target) <= abs(bound1 - target) ? bound2 : bound1;
  }
  if (y < 0) best = -best;

  Approximation out{ScaledReal(best, pi_hint), 0.0};
  out.residual = std::fabs(x - out.value.to_double());
  if (!(out.residual <= tolerance)) {
    throw NoExactRepresentation("no q*pi^" + std::to_string(pi_hint) + " with denominator <= " +
                                    std::to_string(max_denominator) + " within tolerance",
                                out.residual);
  }
  return out;
}

PeriodReducer::PeriodReducer(const ScaledReal& period) : period_(period.to_double_double()) {
  if (period.sign() <= 0) throw InvalidArgument("PeriodReducer: period must be positive");
}

PeriodReducer::Reduced PeriodReducer::reduce(double t) const {
  const double hi = period_.hi;
  const double lo = period_.lo;
  double nf = std::floor(t / hi);
  double r = std::fma(-nf, hi, t) - nf * lo;
  if (r < 0) {
    nf -= 1;
    r = std::fma(-nf, hi, t) - nf * lo;
  } else if (r >= hi) {
    nf += 1;
    r = std::fma(-nf, hi, t) - nf * lo;
  }
  if (r < 0) r = 0;
  if (r >= hi) r = std::nextafter(hi, 0.0);
  return {static_cast<std::int64_t>(nf), r};
}

}  // namespace resonalyze
