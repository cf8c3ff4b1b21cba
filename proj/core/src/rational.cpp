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

#include "mnep/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace mnep {

namespace {

bool all_digits(const std::string& s, size_t from, size_t to) {
  if (from >= to) return false;
  for (size_t i = from; i < to; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(const std::string& text) {
  size_t start = 0;
  bool negative = false;
  if (start < text.size() && (text[start] == '+' || text[start] == '-')) {
    negative = text[start] == '-';
    ++start;
  }
  size_t slash = text.find('/', start);
  size_t num_end = slash == std::string::npos ? text.size() : slash;
  if (!all_digits(text, start, num_end)) {
    throw std::invalid_argument("rational: malformed text '" + text + "'");
  }
  mpz_class num(text.substr(start, num_end - start), 10);
  mpz_class den(1);
  if (slash != std::string::npos) {
    if (!all_digits(text, slash + 1, text.size())) {
      throw std::invalid_argument("rational: malformed text '" + text + "'");
    }
    den = mpz_class(text.substr(slash + 1), 10);
    if (den == 0) {
      throw std::invalid_argument("rational: zero denominator in '" + text + "'");
    }
  }
  if (negative) num = -num;
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const {
  return v_.get_str();
}

Rational parse_rational(const std::string& text) { return Rational::parse(text); }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace mnep
