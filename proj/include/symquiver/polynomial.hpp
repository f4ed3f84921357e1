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

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "symquiver/matrix.hpp"
#include "symquiver/rational.hpp"

namespace symquiver {

using Monomial = std::vector<unsigned>;

/// Graded lexicographic order: total degree first, then exponents from the first variable.
struct GradedLex {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

unsigned monomial_degree(const Monomial& m);

/// Sparse polynomial with rational coefficients in a fixed number of variables.
class Polynomial {
public:
    using Terms = std::map<Monomial, Rational, GradedLex>;

    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
    static Polynomial constant(std::size_t nvars, const Rational& c);
    static Polynomial variable(std::size_t nvars, std::size_t index);

    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const;
    bool is_homogeneous() const;
    Rational coefficient(const Monomial& m) const;
    void add_term(const Monomial& m, const Rational& c);

    Rational evaluate(const std::vector<Rational>& point) const;
    /// Partial derivative in variable k.
    Polynomial derivative(std::size_t k) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, const Polynomial& a);
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    Polynomial& operator+=(const Polynomial& b);

    /// Variables are printed as u1, u2, ... unless names are given.
    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    std::size_t nvars_ = 0;
    Terms terms_;
};

/// Dense matrix of polynomials sharing one variable set.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars);
    PolyMatrix(const RatMatrix& m, std::size_t nvars);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nvars() const { return nvars_; }
    Polynomial& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    PolyMatrix transpose() const;
    void set_block(std::size_t r0, std::size_t c0, const PolyMatrix& b);
    RatMatrix evaluate(const std::vector<Rational>& point) const;

    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator-(const PolyMatrix& a);
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(const Rational& s, const PolyMatrix& a);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t nvars_ = 0;
    std::vector<Polynomial> entries_;
};

/// Symbolic determinant by row expansion over column subsets.
Polynomial det(const PolyMatrix& m);
/// Symbolic Pfaffian; requires structural skewness (entries compared as polynomials).
Polynomial pfaffian(const PolyMatrix& m);

/// All exponent vectors of total degree d in n variables, in graded lex order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d);

}  // namespace symquiver
