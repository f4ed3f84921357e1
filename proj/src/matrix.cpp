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

#include "symquiver/matrix.hpp"

#include <sstream>
#include <utility>

#include "symquiver/errors.hpp"

namespace symquiver {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& row : rows) {
        if (row.size() != cols_) throw DimensionError("ragged matrix literal");
        for (const auto& v : row) entries_.push_back(v);
    }
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::standard_symplectic(std::size_t size) {
    if (size % 2) throw DimensionError("symplectic form needs even size");
    std::size_t h = size / 2;
    RatMatrix j(size, size);
    for (std::size_t i = 0; i < h; ++i) {
        j(i, h + i) = 1;
        j(h + i, i) = -1;
    }
    return j;
}

RatMatrix RatMatrix::column(const std::vector<Rational>& v) {
    RatMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

RatMatrix RatMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("block out of range");
    RatMatrix b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
}

void RatMatrix::set_block(std::size_t r0, std::size_t c0, const RatMatrix& b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw DimensionError("block out of range");
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

std::vector<Rational> RatMatrix::col(std::size_t c) const {
    std::vector<Rational> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

bool RatMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (e != 0) return false;
    return true;
}

bool RatMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool RatMatrix::is_skew() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            if ((*this)(i, j) != -(*this)(j, i)) return false;
    return true;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum shape mismatch");
    RatMatrix s(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i) s.entries_[i] = a.entries_[i] + b.entries_[i];
    return s;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionError("matrix difference shape mismatch");
    RatMatrix s(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i) s.entries_[i] = a.entries_[i] - b.entries_[i];
    return s;
}

RatMatrix operator-(const RatMatrix& a) {
    RatMatrix s(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i) s.entries_[i] = -a.entries_[i];
    return s;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_)
        throw DimensionError("matrix product shape mismatch: " + std::to_string(a.rows_) + "x" +
                             std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                             std::to_string(b.cols_));
    RatMatrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
        }
    return p;
}

RatMatrix operator*(const Rational& s, const RatMatrix& a) {
    RatMatrix p(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i) p.entries_[i] = s * a.entries_[i];
    return p;
}

std::string RatMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

RatMatrix mul(const RatMatrix& a, const RatMatrix& b) { return a * b; }
RatMatrix add(const RatMatrix& a, const RatMatrix& b) { return a + b; }
RatMatrix transpose(const RatMatrix& a) { return a.transpose(); }

RatMatrix hstack(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows()) throw DimensionError("hstack row mismatch");
    RatMatrix m(a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

RatMatrix vstack(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.cols()) throw DimensionError("vstack column mismatch");
    RatMatrix m(a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

RatMatrix kron(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t c = 0; c < b.cols(); ++c)
                    k(i * b.rows() + r, j * b.cols() + c) = a(i, j) * b(r, c);
        }
    return k;
}

Rational det(const RatMatrix& m) {
    if (!m.is_square())
        throw DimensionError("det of non-square " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + " matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;

    // Clear denominators row by row so the elimination runs over integers.
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    mpq_class scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
        scale /= l;
    }

    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[k][k];
    }
    Rational d(a[n - 1][n - 1]);
    d *= scale;
    return sign > 0 ? d : Rational(-d);
}

namespace {

void require_skew(const RatMatrix& m) {
    if (!m.is_square())
        throw DimensionError("pfaffian of non-square " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + " matrix");
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j)
            if (m(i, j) != -m(j, i))
                throw StructureError("matrix is not skew-symmetric at (" + std::to_string(i + 1) + "," +
                                     std::to_string(j + 1) + "): " + m(i, j).get_str() + " vs " +
                                     m(j, i).get_str());
}

Rational pf_expand(const RatMatrix& m, std::vector<std::size_t>& idx) {
    if (idx.empty()) return 1;
    std::size_t first = idx[0];
    Rational total = 0;
    for (std::size_t k = 1; k < idx.size(); ++k) {
        const Rational& a = m(first, idx[k]);
        if (a == 0) continue;
        std::vector<std::size_t> rest;
        rest.reserve(idx.size() - 2);
        for (std::size_t t = 1; t < idx.size(); ++t)
            if (t != k) rest.push_back(idx[t]);
        Rational sub = pf_expand(m, rest);
        if (k % 2 == 1)
            total += a * sub;
        else
            total -= a * sub;
    }
    return total;
}

}  // namespace

Rational pfaffian_expansion(const RatMatrix& m) {
    require_skew(m);
    if (m.rows() % 2) return 0;
    std::vector<std::size_t> idx(m.rows());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return pf_expand(m, idx);
}

Rational pfaffian_elimination(const RatMatrix& input) {
    require_skew(input);
    const std::size_t n = input.rows();
    if (n % 2) return 0;
    RatMatrix a = input;
    Rational pf = 1;
    auto swap_index = [&](std::size_t p, std::size_t q) {
        for (std::size_t c = 0; c < n; ++c) std::swap(a(p, c), a(q, c));
        for (std::size_t r = 0; r < n; ++r) std::swap(a(r, p), a(r, q));
    };
    // add s * (row/col src) to (row/col dst): a congruence with determinant 1
    auto add_multiple = [&](std::size_t dst, std::size_t src, const Rational& s) {
        for (std::size_t c = 0; c < n; ++c) a(dst, c) += s * a(src, c);
        for (std::size_t r = 0; r < n; ++r) a(r, dst) += s * a(r, src);
    };
    for (std::size_t k = 0; k < n; k += 2) {
        std::size_t p = k + 1;
        while (p < n && a(k, p) == 0) ++p;
        if (p == n) return 0;
        if (p != k + 1) {
            swap_index(p, k + 1);
            pf = -pf;
        }
        pf *= a(k, k + 1);
        for (std::size_t i = k + 2; i < n; ++i) {
            if (a(k, i) != 0) add_multiple(i, k + 1, -a(k, i) / a(k, k + 1));
            if (a(k + 1, i) != 0) add_multiple(i, k, -a(k + 1, i) / a(k + 1, k));
        }
    }
    return pf;
}

Rational pfaffian(const RatMatrix& m) {
    if (m.rows() <= 8) return pfaffian_expansion(m);
    return pfaffian_elimination(m);
}

Echelon rref(const RatMatrix& m) {
    Echelon e{m, {}};
    RatMatrix& a = e.rref;
    std::size_t row = 0;
    for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
        std::size_t p = row;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
        Rational inv = 1 / a(row, c);
        for (std::size_t j = c; j < a.cols(); ++j) a(row, j) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, c) == 0) continue;
            Rational f = a(r, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(r, j) -= f * a(row, j);
        }
        e.pivots.push_back(c);
        ++row;
    }
    return e;
}

std::size_t rank(const RatMatrix& m) {
    if (m.empty()) return 0;
    return rref(m).pivots.size();
}

std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m) {
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rref(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

RatMatrix kernel_matrix(const RatMatrix& m) {
    auto basis = kernel_basis(m);
    RatMatrix k(m.cols(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < m.cols(); ++i) k(i, j) = basis[j][i];
    return k;
}

std::optional<RatMatrix> solve(const RatMatrix& m, const RatMatrix& b) {
    if (b.rows() != m.rows()) throw DimensionError("solve: right-hand side has wrong length");
    Echelon e = rref(hstack(m, b));
    RatMatrix x(m.cols(), b.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] >= m.cols()) return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[r], j) = e.rref(r, m.cols() + j);
    }
    return x;
}

std::optional<std::vector<Rational>> solve(const RatMatrix& m, const std::vector<Rational>& b) {
    auto x = solve(m, RatMatrix::column(b));
    if (!x) return std::nullopt;
    return x->col(0);
}

RatMatrix inverse(const RatMatrix& m) {
    if (!m.is_square()) throw DimensionError("inverse of non-square matrix");
    Echelon e = rref(hstack(m, RatMatrix::identity(m.rows())));
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (r >= e.pivots.size() || e.pivots[r] != r) throw SingularError("matrix is singular");
    return e.rref.block(0, m.cols(), m.rows(), m.cols());
}

}  // namespace symquiver
