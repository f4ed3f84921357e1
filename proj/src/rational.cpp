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

#include "symquiver/rational.hpp"

#include <cctype>

#include "symquiver/errors.hpp"

namespace symquiver {

Rational make_rational(long num, long den) {
    if (den == 0) throw SingularError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

namespace {

bool is_integer_text(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

mpz_class parse_integer(const std::string& s) {
    std::string t = (!s.empty() && s[0] == '+') ? s.substr(1) : s;
    return mpz_class(t, 10);
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den))
        throw InputError("malformed rational: '" + text + "'");
    mpz_class d = parse_integer(den);
    if (d == 0) throw InputError("zero denominator in rational: '" + text + "'");
    Rational r(parse_integer(num), d);
    r.canonicalize();
    return r;
}

Rational pow(const Rational& base, long exponent) {
    if (exponent < 0) {
        if (base == 0) throw SingularError("zero raised to a negative power");
        Rational inv = 1 / base;
        return pow(inv, -exponent);
    }
    Rational result = 1;
    Rational b = base;
    unsigned long e = static_cast<unsigned long>(exponent);
    while (e) {
        if (e & 1UL) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

}  // namespace symquiver
