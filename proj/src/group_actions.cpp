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

#include "symquiver/group_actions.hpp"

#include "symquiver/errors.hpp"

namespace symquiver {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::size_t udim(const DimVector& d, std::size_t x) { return static_cast<std::size_t>(d.at(x - 1)); }

}  // namespace

Rng trial_rng(std::uint64_t seed, std::uint64_t trial) { return Rng(splitmix64(splitmix64(seed) ^ trial)); }

Rational random_rational(Rng& rng) {
    long num = static_cast<long>(rng() % 19) - 9;
    long den = static_cast<long>(rng() % 9) + 1;
    return make_rational(num, den);
}

Rational random_nonzero_rational(Rng& rng) {
    for (;;) {
        Rational r = random_rational(rng);
        if (r != 0) return r;
    }
}

RatMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
    RatMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_rational(rng);
    return m;
}

RatMatrix random_skew(std::size_t n, Rng& rng) {
    RatMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r + 1; c < n; ++c) {
            m(r, c) = random_rational(rng);
            m(c, r) = -m(r, c);
        }
    return m;
}

RatMatrix random_symmetric(std::size_t n, Rng& rng) {
    RatMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r; c < n; ++c) {
            m(r, c) = random_rational(rng);
            m(c, r) = m(r, c);
        }
    return m;
}

RatMatrix sample_sl(std::size_t n, Rng& rng) {
    RatMatrix g = RatMatrix::identity(n);
    if (n < 2) return g;
    for (std::size_t k = 0; k < 2 * n; ++k) {
        std::size_t i = rng() % n;
        std::size_t j = rng() % (n - 1);
        if (j >= i) ++j;
        Rational r = random_rational(rng);
        // left multiplication by I + r E_ij adds r * row j to row i
        for (std::size_t c = 0; c < n; ++c) g(i, c) += r * g(j, c);
    }
    return g;
}

namespace {

RatMatrix cayley(const RatMatrix& s) {
    RatMatrix id = RatMatrix::identity(s.rows());
    return (id - s) * inverse(id + s);
}

}  // namespace

RatMatrix sample_so(std::size_t n, Rng& rng) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        RatMatrix s = random_skew(n, rng);
        if (det(RatMatrix::identity(n) + s) == 0) continue;
        RatMatrix g = cayley(s);
        if (!(g.transpose() * g == RatMatrix::identity(n)) || det(g) != 1)
            throw InternalError("Cayley transform left SO(" + std::to_string(n) + ")");
        return g;
    }
    throw InternalError("SO sampling failed after 100 attempts");
}

RatMatrix sample_sp(std::size_t n, Rng& rng) {
    if (n % 2) throw DimensionError("Sp needs even size, got " + std::to_string(n));
    RatMatrix j = RatMatrix::standard_symplectic(n);
    for (int attempt = 0; attempt < 100; ++attempt) {
        RatMatrix h = j * random_symmetric(n, rng);
        if (det(RatMatrix::identity(n) + h) == 0) continue;
        RatMatrix g = cayley(h);
        if (!(g.transpose() * j * g == j)) throw InternalError("Cayley transform left Sp(" + std::to_string(n) + ")");
        return g;
    }
    throw InternalError("Sp sampling failed after 100 attempts");
}

RatMatrix sample_gl(std::size_t n, Rng& rng) {
    RatMatrix g = sample_sl(n, rng);
    if (n == 0) return g;
    Rational s = random_nonzero_rational(rng);
    for (std::size_t c = 0; c < n; ++c) g(0, c) *= s;
    return g;
}

RatMatrix GroupElement::at(std::size_t x) const {
    if (quiver.vertex_part(x) == Part::Minus) return inverse(components.at(quiver.sigma_vertex(x))).transpose();
    return components.at(x);
}

void GroupElement::validate() const {
    for (std::size_t x : quiver.plus_vertices()) {
        const RatMatrix& g = components.at(x);
        if (g.rows() != udim(dim, x) || !g.is_square()) throw DimensionError("component shape mismatch at " + std::to_string(x));
        if (det(g) == 0) throw SingularError("singular group component at vertex " + std::to_string(x));
    }
    if (auto f = quiver.fixed_vertex()) {
        const RatMatrix& g = components.at(*f);
        RatMatrix form = gram_block(quiver, kind, *f, dim[*f - 1]);
        if (!(g.transpose() * form * g == form)) throw StructureError("fixed-vertex component is not an isometry");
        if (kind == FormKind::Orthogonal && det(g) != 1) throw StructureError("fixed-vertex component has det != 1");
    }
}

GroupElement identity_element(const SymmetricQuiver& q, FormKind kind, const DimVector& dim) {
    GroupElement g{q, kind, dim, {}};
    for (std::size_t x : q.plus_vertices()) g.components.emplace(x, RatMatrix::identity(udim(dim, x)));
    if (auto f = q.fixed_vertex()) g.components.emplace(*f, RatMatrix::identity(udim(dim, *f)));
    return g;
}

GroupElement sample_group_element(const SymmetricQuiver& q, FormKind kind, const DimVector& dim, Rng& rng) {
    GroupElement g{q, kind, dim, {}};
    for (std::size_t x : q.plus_vertices()) g.components.emplace(x, sample_gl(udim(dim, x), rng));
    if (auto f = q.fixed_vertex())
        g.components.emplace(*f, kind == FormKind::Orthogonal ? sample_so(udim(dim, *f), rng)
                                                              : sample_sp(udim(dim, *f), rng));
    g.validate();
    return g;
}

GroupElement compose(const GroupElement& g, const GroupElement& h) {
    GroupElement out = g;
    for (auto& [x, m] : out.components) m = g.components.at(x) * h.components.at(x);
    return out;
}

Representation random_representation(const Quiver& q, const DimVector& dim, Rng& rng) {
    Representation v = zero_representation(q, dim);
    for (std::size_t a = 1; a <= q.n_arrows(); ++a)
        v.map(a) = random_matrix(static_cast<std::size_t>(dim.at(q.head(a) - 1)),
                                 static_cast<std::size_t>(dim.at(q.tail(a) - 1)), rng);
    return v;
}

SymmetricRepresentation random_symmetric_rep(const SymmetricQuiver& q, FormKind kind, const DimVector& dim,
                                             Rng& rng) {
    std::vector<Rational> point;
    for (std::size_t k = 0, n = coordinates(q, kind, dim).size(); k < n; ++k) point.push_back(random_rational(rng));
    return rep_from_point(q, kind, dim, point);
}

SymmetricRepresentation act(const GroupElement& g, const SymmetricRepresentation& sw) {
    if (!(g.quiver == sw.quiver) || g.dim != sw.dim) throw DimensionError("group element and representation differ in shape");
    const Quiver& p = sw.quiver.quiver();
    SymmetricRepresentation out = sw;
    for (auto& [a, m] : out.maps) m = g.at(p.head(a)) * m * inverse(g.at(p.tail(a)));
    out.validate();
    return out;
}

Rational character_value(const GroupElement& g, const Weight& chi) {
    Rational v = 1;
    for (std::size_t x : g.quiver.plus_vertices()) {
        const Rational& e = chi.values.at(x - 1);
        if (e.get_den() != 1) throw ConditionError("character exponent " + e.get_str() + " is not an integer");
        v *= pow(det(g.components.at(x)), e.get_num().get_si());
    }
    return v;
}

Rational weight_character(const GroupElement& g, const Weight& chi) {
    Weight folded{std::vector<Rational>(g.quiver.n_vertices())};
    auto e = folded_exponents(g.quiver, chi);
    auto plus = g.quiver.plus_vertices();
    for (std::size_t k = 0; k < plus.size(); ++k) folded.values[plus[k] - 1] = e[k];
    return character_value(g, folded);
}

}  // namespace symquiver
