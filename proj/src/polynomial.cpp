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

#include "symquiver/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "symquiver/errors.hpp"

namespace symquiver {

unsigned monomial_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0U); }

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw DimensionError("variable index out of range");
    Polynomial p(nvars);
    Monomial m(nvars, 0);
    m[index] = 1;
    p.add_term(m, 1);
    return p;
}

long Polynomial::degree() const {
    long d = -1;
    for (const auto& [m, c] : terms_) d = std::max<long>(d, monomial_degree(m));
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = monomial_degree(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (monomial_degree(m) != d) return false;
    return true;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (m.size() != nvars_) throw DimensionError("monomial has the wrong number of variables");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != nvars_) throw DimensionError("evaluation point has the wrong number of coordinates");
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            if (m[i]) t *= pow(point[i], static_cast<long>(m[i]));
        total += t;
    }
    return total;
}

Polynomial Polynomial::derivative(std::size_t k) const {
    Polynomial d(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[k] == 0) continue;
        Monomial e = m;
        --e[k];
        d.add_term(e, c * static_cast<long>(m[k]));
    }
    return d;
}

namespace {

void check_same(const Polynomial& a, const Polynomial& b) {
    if (a.nvars() != b.nvars()) throw DimensionError("polynomials over different variable sets");
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& b) {
    check_same(*this, b);
    for (const auto& [m, c] : b.terms_) add_term(m, c);
    return *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial s = a;
    s += b;
    return s;
}

Polynomial operator-(const Polynomial& a) {
    Polynomial s(a.nvars_);
    for (const auto& [m, c] : a.terms_) s.terms_.emplace(m, -c);
    return s;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same(a, b);
    Polynomial p(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m(a.nvars_);
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            p.add_term(m, ca * cb);
        }
    return p;
}

Polynomial operator*(const Rational& s, const Polynomial& a) {
    Polynomial p(a.nvars_);
    if (s == 0) return p;
    for (const auto& [m, c] : a.terms_) p.terms_.emplace(m, s * c);
    return p;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    // highest degree first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        bool unit = monomial_degree(m) > 0 && (c == 1 || c == -1);
        std::string coef = c.get_str();
        if (c < 0) {
            out += first ? "-" : " - ";
            coef = Rational(-c).get_str();
        } else if (!first) {
            out += " + ";
        }
        first = false;
        std::string body;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (!m[i]) continue;
            if (!body.empty()) body += "*";
            body += i < names.size() ? names[i] : "u" + std::to_string(i + 1);
            if (m[i] > 1) body += "^" + std::to_string(m[i]);
        }
        if (body.empty())
            out += coef;
        else if (unit)
            out += body;
        else
            out += coef + "*" + body;
    }
    return out;
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), entries_(rows * cols, Polynomial(nvars)) {}

PolyMatrix::PolyMatrix(const RatMatrix& m, std::size_t nvars) : PolyMatrix(m.rows(), m.cols(), nvars) {
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (m(r, c) != 0) (*this)(r, c) = Polynomial::constant(nvars, m(r, c));
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix t(cols_, rows_, nvars_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

void PolyMatrix::set_block(std::size_t r0, std::size_t c0, const PolyMatrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionError("block out of range");
    for (std::size_t r = 0; r < b.rows_; ++r)
        for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

RatMatrix PolyMatrix::evaluate(const std::vector<Rational>& point) const {
    RatMatrix m(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c).evaluate(point);
    return m;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum shape mismatch");
    PolyMatrix s = a;
    for (std::size_t i = 0; i < s.entries_.size(); ++i) s.entries_[i] += b.entries_[i];
    return s;
}

PolyMatrix operator-(const PolyMatrix& a) {
    PolyMatrix s = a;
    for (auto& e : s.entries_) e = -e;
    return s;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
    PolyMatrix p(a.rows_, b.cols_, a.nvars_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) p(i, j) += a(i, k) * b(k, j);
        }
    return p;
}

PolyMatrix operator*(const Rational& s, const PolyMatrix& a) {
    PolyMatrix p = a;
    for (auto& e : p.entries_) e = s * e;
    return p;
}

Polynomial det(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("det of non-square polynomial matrix");
    const std::size_t n = m.rows();
    if (n > 20) throw DimensionError("symbolic determinant limited to size 20");
    std::unordered_map<unsigned long, Polynomial> layer{{0UL, Polynomial::constant(m.nvars(), 1)}};
    for (std::size_t r = 0; r < n; ++r) {
        std::unordered_map<unsigned long, Polynomial> next;
        for (const auto& [mask, val] : layer) {
            for (std::size_t c = 0; c < n; ++c) {
                if (mask >> c & 1UL) continue;
                if (m(r, c).is_zero()) continue;
                unsigned higher = static_cast<unsigned>(__builtin_popcountl(mask >> (c + 1)));
                Polynomial term = val * m(r, c);
                if (higher % 2) term = -term;
                auto [it, inserted] = next.emplace(mask | (1UL << c), term);
                if (!inserted) it->second += term;
            }
        }
        layer = std::move(next);
    }
    auto it = layer.find(n ? (1UL << n) - 1 : 0UL);
    return it == layer.end() ? Polynomial(m.nvars()) : it->second;
}

Polynomial pfaffian(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("pfaffian of non-square polynomial matrix");
    const std::size_t n = m.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (!(m(i, j) == -m(j, i)))
                throw StructureError("polynomial matrix is not skew-symmetric at (" + std::to_string(i + 1) + "," +
                                     std::to_string(j + 1) + ")");
    if (n % 2) return Polynomial(m.nvars());
    if (n > 20) throw DimensionError("symbolic pfaffian limited to size 20");
    std::unordered_map<unsigned long, Polynomial> memo;
    std::function<Polynomial(unsigned long)> rec = [&](unsigned long mask) -> Polynomial {
        if (mask == 0) return Polynomial::constant(m.nvars(), 1);
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        std::size_t i = static_cast<std::size_t>(__builtin_ctzl(mask));
        unsigned long rest = mask & ~(1UL << i);
        Polynomial total(m.nvars());
        unsigned pos = 0;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!(rest >> j & 1UL)) continue;
            ++pos;
            if (m(i, j).is_zero()) continue;
            Polynomial term = m(i, j) * rec(rest & ~(1UL << j));
            total += pos % 2 ? term : -term;
        }
        memo.emplace(mask, total);
        return total;
    };
    return rec(n ? (1UL << n) - 1 : 0UL);
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (d == 0) out.emplace_back();
        return out;
    }
    Monomial cur(nvars, 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
        if (i + 1 == nvars) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        for (unsigned e = left + 1; e-- > 0;) {
            cur[i] = e;
            rec(i + 1, left - e);
        }
    };
    rec(0, d);
    std::sort(out.begin(), out.end(), GradedLex());
    return out;
}

}  // namespace symquiver
