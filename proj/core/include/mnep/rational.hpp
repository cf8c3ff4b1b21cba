// Copyright 2026 The mnep Authors.
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

#ifndef MNEP_RATIONAL_HPP
#define MNEP_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace mnep {

/// Exact arbitrary-precision rational, the only scalar type used by the
/// solvers. Thin wrapper around GMP's mpq_class that keeps every value
/// canonical (gcd(|num|, den) = 1, den > 0) and fixes the "p/q" text form
/// used by all file formats.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, like int → mpq
  Rational(long num, long den);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "⟨int⟩" or "⟨int⟩/⟨positive int⟩". Throws std::invalid_argument
  /// on malformed text or a zero denominator.
  static Rational parse(const std::string& text);

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  /// Canonical text form: "p" when the denominator is 1, else "p/q".
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend Rational abs(const Rational& a) { return Rational(mpq_class(abs(a.v_))); }

  /// Nearest double, for reporting only. Never used in solver decisions.
  double to_double() const { return v_.get_d(); }

  /// Direct access to the underlying GMP value, for hot loops.
  mpq_class& mpq() { return v_; }
  const mpq_class& mpq() const { return v_; }
  mpq_ptr raw() { return v_.get_mpq_t(); }
  mpq_srcptr raw() const { return v_.get_mpq_t(); }

 private:
  mpq_class v_;
};

/// Free-function spelling of Rational::parse.
Rational parse_rational(const std::string& text);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace mnep

#endif  // MNEP_RATIONAL_HPP
