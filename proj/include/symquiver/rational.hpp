/*
 * Copyright 2026 The symquiver Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <gmpxx.h>

#include <string>

namespace symquiver {

/// Exact rational scalar. mpq_class keeps p/q canonical (q > 0, gcd 1, zero = 0/1).
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& r);

/// Parses "p/q" or "p". Throws InputError on malformed text or zero denominator.
Rational parse_rational(const std::string& text);

/// Integer power with a possibly negative exponent. Throws SingularError for 0^(-k).
Rational pow(const Rational& base, long exponent);

}  // namespace symquiver
