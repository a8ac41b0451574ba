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

// Exact scalar types. Integer and Rational are thin aliases over GMP; every
// Rational produced by this library is kept canonical (lowest terms, positive
// denominator).

#ifndef IGCR_RATIONAL_H_
#define IGCR_RATIONAL_H_

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace igcr {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

// Builds num/den in lowest terms. Throws DomainError when den == 0.
Rational MakeRational(const Integer& num, const Integer& den);

// "p/q" for non-integers, "p" for integers.
std::string ToString(const Rational& q);
std::string ToString(const Integer& z);

// Accepts "p", "p/q", optional leading sign; whitespace is rejected. Throws
// ParseError on malformed text or a zero denominator.
Rational ParseRational(std::string_view text);
Integer ParseInteger(std::string_view text);

bool IsInteger(const Rational& q);

// Floor division and canonical residue in [0, m) for m > 0.
Integer FloorDiv(const Integer& a, const Integer& b);
Integer FloorMod(const Integer& a, const Integer& m);

RationalVector ToRational(std::span<const Integer> v);

Rational Dot(std::span<const Rational> a, std::span<const Rational> b);
Rational Dot(std::span<const Rational> a, std::span<const Integer> b);

// Joins entries with ", " inside parentheses: (1, 3/4).
std::string FormatVector(std::span<const Rational> v);
std::string FormatVector(std::span<const Integer> v);

}  // namespace igcr

#endif  // IGCR_RATIONAL_H_
