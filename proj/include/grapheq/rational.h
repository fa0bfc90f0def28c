// Copyright 2026 The grapheq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GRAPHEQ_RATIONAL_H_
#define GRAPHEQ_RATIONAL_H_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace grapheq {

// Exact rationals are used for every probability, weight and payoff.
// Floating point only appears when values are displayed.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p/q", plain integers and decimals with an optional exponent
// ("0.25", "3.01", "1e-6"). Decimals are converted exactly.
Rational parse_rational(std::string_view text);

// Canonical "p/q" form; integers render without a denominator.
std::string to_string(const Rational& value);

// Rounds half away from zero to `digits` decimals.
std::string to_fixed(const Rational& value, int digits);

double to_double(const Rational& value);

Rational pow(const Rational& base, unsigned exponent);

// Least common multiple of denominators, used to scale rational tables into
// machine integers.
Integer lcm(const Integer& a, const Integer& b);

// Throws Error(kSizeLimit) when the value does not fit.
std::int64_t to_int64(const Integer& value);

}  // namespace grapheq

#endif  // GRAPHEQ_RATIONAL_H_
