// Copyright 2026 The igcr Authors
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

#include "igcr/rational.h"

#include <cctype>
#include <string>

#include "igcr/errors.h"
#include "igcr/matrix.h"

namespace igcr {
namespace {

bool IsDecimalInteger(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer ParseDecimal(std::string_view s) {
  std::string digits(s);
  if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
  return Integer(digits, 10);
}

}  // namespace

Rational MakeRational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string ToString(const Rational& q) { return q.get_str(10); }
std::string ToString(const Integer& z) { return z.get_str(10); }

Rational ParseRational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!IsDecimalInteger(text)) {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    return Rational(ParseDecimal(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!IsDecimalInteger(num) || !IsDecimalInteger(den) || den[0] == '-' ||
      den[0] == '+') {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  const Integer d = ParseDecimal(den);
  if (sgn(d) == 0) {
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  return MakeRational(ParseDecimal(num), d);
}

Integer ParseInteger(std::string_view text) {
  if (!IsDecimalInteger(text)) {
    throw ParseError("malformed integer '" + std::string(text) + "'");
  }
  return ParseDecimal(text);
}

bool IsInteger(const Rational& q) { return q.get_den() == 1; }

Integer FloorDiv(const Integer& a, const Integer& b) {
  if (sgn(b) == 0) throw DomainError("division by zero");
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer FloorMod(const Integer& a, const Integer& m) {
  if (sgn(m) <= 0) throw DomainError("modulus must be positive");
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

RationalVector ToRational(std::span<const Integer> v) {
  return RationalVector(v.begin(), v.end());
}

RationalMatrix ToRational(const IntMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
  }
  return out;
}

Rational Dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw DimensionError("dot product length");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational Dot(std::span<const Rational> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw DimensionError("dot product length");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rational(b[i]);
  return s;
}

namespace {

template <typename T>
std::string Format(std::span<const T> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += ToString(v[i]);
  }
  return out + ")";
}

}  // namespace

std::string FormatVector(std::span<const Rational> v) { return Format(v); }
std::string FormatVector(std::span<const Integer> v) { return Format(v); }

}  // namespace igcr
