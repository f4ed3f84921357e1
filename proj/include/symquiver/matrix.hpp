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
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "symquiver/rational.hpp"

namespace symquiver {

/// Dense row-major matrix of rationals. 0 x m and m x 0 shapes are legal.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RatMatrix identity(std::size_t n);
    static RatMatrix zero(std::size_t rows, std::size_t cols) { return RatMatrix(rows, cols); }
    /// [[0, I], [-I, 0]] of size 2m.
    static RatMatrix standard_symplectic(std::size_t size);
    static RatMatrix column(const std::vector<Rational>& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    const std::vector<Rational>& entries() const { return entries_; }

    RatMatrix transpose() const;
    RatMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const RatMatrix& b);
    std::vector<Rational> col(std::size_t c) const;

    bool is_zero() const;
    bool is_symmetric() const;
    bool is_skew() const;

    friend bool operator==(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator-(const RatMatrix& a);
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator*(const Rational& s, const RatMatrix& a);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

RatMatrix mul(const RatMatrix& a, const RatMatrix& b);
RatMatrix add(const RatMatrix& a, const RatMatrix& b);
RatMatrix transpose(const RatMatrix& a);
RatMatrix hstack(const RatMatrix& a, const RatMatrix& b);
RatMatrix vstack(const RatMatrix& a, const RatMatrix& b);
RatMatrix kron(const RatMatrix& a, const RatMatrix& b);

/// Fraction-free Bareiss elimination; det of the 0 x 0 matrix is 1.
Rational det(const RatMatrix& m);

/// Pfaffian of a skew-symmetric matrix; 0 for odd size, 1 for 0 x 0.
/// Throws StructureError naming the first entry with m(i,j) != -m(j,i).
Rational pfaffian(const RatMatrix& m);
Rational pfaffian_expansion(const RatMatrix& m);
Rational pfaffian_elimination(const RatMatrix& m);

/// Reduced row echelon form and its pivot columns.
struct Echelon {
    RatMatrix rref;
    std::vector<std::size_t> pivots;
};
Echelon rref(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Canonical kernel basis read off the RREF: one vector per free column, with 1 in
/// that column and 0 in the other free columns.
std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m);
/// The kernel basis vectors as columns of one matrix (cols x nullity).
RatMatrix kernel_matrix(const RatMatrix& m);

std::optional<std::vector<Rational>> solve(const RatMatrix& m, const std::vector<Rational>& b);
/// Solves m X = b for a matrix right-hand side; nullopt if inconsistent.
std::optional<RatMatrix> solve(const RatMatrix& m, const RatMatrix& b);

/// Throws SingularError on singular input.
RatMatrix inverse(const RatMatrix& m);

}  // namespace symquiver
