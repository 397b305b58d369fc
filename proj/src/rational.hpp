// Copyright 2026 the pathhom authors
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

#include <gmpxx.h>

#include <string>

namespace pathhom {

// Arbitrary-precision rational, kept in canonical form (gcd 1, positive
// denominator) by GMP.  All arithmetic in the library is exact.
using Rational = mpq_class;

// Parses "3", "-2", "0.35", "1/3", "-7/20".  Decimal strings convert exactly
// (0.35 -> 7/20).  Throws Error{Parse} on anything else.
Rational parse_rational(const std::string& text);

// Renders exactly: finite decimal when the denominator divides a power of
// ten ("7/20" -> "0.35"), otherwise "num/den".  parse_rational round-trips
// the output.
std::string render_rational(const Rational& q);

// Plain "num/den" (or "num" for integers), used for chain coefficients.
std::string render_fraction(const Rational& q);

}  // namespace pathhom
