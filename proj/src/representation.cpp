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

#include "symquiver/representation.hpp"

#include <algorithm>

#include "symquiver/errors.hpp"

namespace symquiver {

std::string kind_name(FormKind kind) { return kind == FormKind::Orthogonal ? "orthogonal" : "symplectic"; }

FormKind parse_kind(const std::string& text) {
    if (text == "orthogonal" || text == "o") return FormKind::Orthogonal;
    if (text == "symplectic" || text == "sp") return FormKind::Symplectic;
    throw InputError("kind must be 'orthogonal' or 'symplectic', got '" + text + "'");
}

int form_sign(FormKind kind) { return kind == FormKind::Orthogonal ? 1 : -1; }

namespace {

std::string shape(const RatMatrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

std::size_t udim(const DimVector& d, std::size_t x) { return static_cast<std::size_t>(d.at(x - 1)); }

}  // namespace

void Representation::validate() const {
    if (dim.size() != quiver.n_vertices())
        throw DimensionError("dimension vector has " + std::to_string(dim.size()) + " entries for " +
                             quiver.to_string());
    for (long d : dim)
        if (d < 0) throw DimensionError("negative dimension");
    if (maps.size() != quiver.n_arrows()) throw DimensionError("wrong number of arrow maps");
    for (std::size_t a = 1; a <= quiver.n_arrows(); ++a) {
        const RatMatrix& m = map(a);
        if (m.rows() != udim(dim, quiver.head(a)) || m.cols() != udim(dim, quiver.tail(a)))
            throw DimensionError("map on a" + std::to_string(a) + " has shape " + shape(m) + ", expected " +
                                 std::to_string(dim[quiver.head(a) - 1]) + "x" +
                                 std::to_string(dim[quiver.tail(a) - 1]));
    }
}

Representation zero_representation(const Quiver& q, const DimVector& dim) {
    Representation v{q, dim, {}};
    for (std::size_t a = 1; a <= q.n_arrows(); ++a)
        v.maps.emplace_back(udim(dim, q.head(a)), udim(dim, q.tail(a)));
    v.validate();
    return v;
}

void SymmetricRepresentation::validate() const {
    if (!quiver.is_symmetric(dim))
        throw StructureError("dimension vector (" + dim_to_string(dim) + ") is not symmetric on " +
                             quiver.to_string());
    for (long d : dim)
        if (d < 0) throw DimensionError("negative dimension");
    if (kind == FormKind::Symplectic)
        if (auto f = quiver.fixed_vertex(); f && dim[*f - 1] % 2 != 0)
            throw StructureError("symplectic representation needs an even dimension at the fixed vertex " +
                                 std::to_string(*f) + ", got " + std::to_string(dim[*f - 1]));
    auto stored = quiver.stored_arrows();
    if (maps.size() != stored.size()) throw StructureError("expected maps exactly on the stored arrows");
    const Quiver& q = quiver.quiver();
    for (std::size_t a : stored) {
        auto it = maps.find(a);
        if (it == maps.end()) throw StructureError("missing map on a" + std::to_string(a));
        const RatMatrix& m = it->second;
        if (m.rows() != udim(dim, q.head(a)) || m.cols() != udim(dim, q.tail(a)))
            throw DimensionError("map on a" + std::to_string(a) + " has shape " + shape(m) + ", expected " +
                                 std::to_string(dim[q.head(a) - 1]) + "x" + std::to_string(dim[q.tail(a) - 1]));
        if (quiver.arrow_part(a) == Part::Fixed) {
            if (kind == FormKind::Orthogonal && !m.is_skew())
                throw StructureError("orthogonal middle map on a" + std::to_string(a) + " must be skew-symmetric");
            if (kind == FormKind::Symplectic && !m.is_symmetric())
                throw StructureError("symplectic middle map on a" + std::to_string(a) + " must be symmetric");
        }
    }
}

RatMatrix gram_block(const SymmetricQuiver& q, FormKind kind, std::size_t x, long dim_x) {
    const std::size_t n = static_cast<std::size_t>(dim_x);
    switch (q.vertex_part(x)) {
        case Part::Plus:
            return RatMatrix::identity(n);
        case Part::Minus:
            return Rational(form_sign(kind)) * RatMatrix::identity(n);
        case Part::Fixed:
            break;
    }
    if (kind == FormKind::Orthogonal) return RatMatrix::identity(n);
    return RatMatrix::standard_symplectic(n);
}

namespace {

RatMatrix gram_inverse(const SymmetricQuiver& q, FormKind kind, std::size_t x, long dim_x) {
    RatMatrix g = gram_block(q, kind, x, dim_x);
    // every Gram block is a signed permutation: its inverse is its transpose
    return g.transpose();
}

}  // namespace

RatMatrix partner_map(const SymmetricQuiver& q, FormKind kind, const DimVector& dim, std::size_t arrow,
                      const RatMatrix& m) {
    const Quiver& p = q.quiver();
    std::size_t t = p.tail(arrow), h = p.head(arrow);
    return -(gram_inverse(q, kind, t, dim[t - 1]) * m.transpose() * gram_block(q, kind, h, dim[h - 1]));
}

Representation unfold(const SymmetricRepresentation& sv) {
    sv.validate();
    const Quiver& q = sv.quiver.quiver();
    Representation v{q, sv.dim, std::vector<RatMatrix>(q.n_arrows())};
    for (std::size_t a = 1; a <= q.n_arrows(); ++a) {
        if (sv.quiver.arrow_part(a) != Part::Minus) {
            v.map(a) = sv.maps.at(a);
        } else {
            std::size_t b = sv.quiver.sigma_arrow(a);
            v.map(a) = partner_map(sv.quiver, sv.kind, sv.dim, b, sv.maps.at(b));
        }
    }
    v.validate();
    return v;
}

SymmetricRepresentation fold(const Representation& v, FormKind kind) {
    SymmetricRepresentation sv{SymmetricQuiver(v.quiver), kind, v.dim, {}};
    for (std::size_t a : sv.quiver.stored_arrows()) sv.maps.emplace(a, v.map(a));
    sv.validate();
    return sv;
}

RatMatrix form_identification(const SymmetricQuiver& q, FormKind kind, std::size_t x, long dim_x) {
    return gram_block(q, kind, x, dim_x).transpose();
}

bool is_selfdual_under_form(const Representation& v, FormKind kind) {
    SymmetricQuiver q(v.quiver);
    if (!q.is_symmetric(v.dim)) return false;
    Representation d = dualize(v);
    for (std::size_t a = 1; a <= v.quiver.n_arrows(); ++a) {
        std::size_t t = v.quiver.tail(a), h = v.quiver.head(a);
        RatMatrix lhs = d.map(a) * form_identification(q, kind, t, v.dim[t - 1]);
        RatMatrix rhs = form_identification(q, kind, h, v.dim[h - 1]) * v.map(a);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

std::string interval_to_string(const Interval& iv) {
    return "[" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) + "]";
}

Representation indecomposable(const Quiver& q, std::size_t i, std::size_t j) {
    if (i > j) throw InputError("interval needs i <= j, got " + std::to_string(i) + " > " + std::to_string(j));
    if (i < 1 || j > q.n_vertices()) throw InputError("interval outside the vertex range of " + q.to_string());
    DimVector dim(q.n_vertices(), 0);
    for (std::size_t k = i; k <= j; ++k) dim[k - 1] = 1;
    Representation v = zero_representation(q, dim);
    for (std::size_t a = i; a < j; ++a) v.map(a) = RatMatrix::identity(1);
    return v;
}

Representation simple(const Quiver& q, std::size_t x) { return indecomposable(q, x, x); }

Interval projective_interval(const Quiver& q, std::size_t x) {
    std::size_t lo = x, hi = x;
    while (lo > 1 && q.has_path(x, lo - 1)) --lo;
    while (hi < q.n_vertices() && q.has_path(x, hi + 1)) ++hi;
    return {lo, hi};
}

Interval injective_interval(const Quiver& q, std::size_t x) {
    std::size_t lo = x, hi = x;
    while (lo > 1 && q.has_path(lo - 1, x)) --lo;
    while (hi < q.n_vertices() && q.has_path(hi + 1, x)) ++hi;
    return {lo, hi};
}

Representation projective(const Quiver& q, std::size_t x) {
    Interval iv = projective_interval(q, x);
    return indecomposable(q, iv.lo, iv.hi);
}

std::vector<Interval> all_intervals(std::size_t n) {
    std::vector<Interval> out;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j) out.push_back({i, j});
    return out;
}

RatMatrix intertwiner_system(const Representation& v, const Representation& w) {
    if (!(v.quiver == w.quiver)) throw DimensionError("representations live on different quivers");
    const Quiver& q = v.quiver;
    const std::size_t n = q.n_vertices();
    std::vector<std::size_t> offset(n + 1, 0);
    for (std::size_t x = 1; x <= n; ++x) offset[x] = offset[x - 1] + udim(w.dim, x) * udim(v.dim, x);
    std::size_t n_rows = 0;
    for (std::size_t a = 1; a <= q.n_arrows(); ++a) n_rows += udim(w.dim, q.head(a)) * udim(v.dim, q.tail(a));
    RatMatrix sys(n_rows, offset[n]);
    std::size_t row = 0;
    for (std::size_t a = 1; a <= q.n_arrows(); ++a) {
        const std::size_t t = q.tail(a), h = q.head(a);
        const std::size_t vt = udim(v.dim, t), vh = udim(v.dim, h), wt = udim(w.dim, t), wh = udim(w.dim, h);
        const RatMatrix& va = v.map(a);
        const RatMatrix& wa = w.map(a);
        for (std::size_t r = 0; r < wh; ++r)
            for (std::size_t c = 0; c < vt; ++c, ++row) {
                // (f_h V(a))_{rc} - (W(a) f_t)_{rc}
                for (std::size_t k = 0; k < vh; ++k) sys(row, offset[h - 1] + r * vh + k) += va(k, c);
                for (std::size_t k = 0; k < wt; ++k) sys(row, offset[t - 1] + k * vt + c) -= wa(r, k);
            }
    }
    return sys;
}

HomSpace hom_basis(const Representation& v, const Representation& w) {
    RatMatrix sys = intertwiner_system(v, w);
    HomSpace hs;
    const std::size_t n = v.quiver.n_vertices();
    for (const auto& vec : kernel_basis(sys)) {
        std::vector<RatMatrix> f;
        std::size_t off = 0;
        for (std::size_t x = 1; x <= n; ++x) {
            RatMatrix fx(udim(w.dim, x), udim(v.dim, x));
            for (std::size_t r = 0; r < fx.rows(); ++r)
                for (std::size_t c = 0; c < fx.cols(); ++c) fx(r, c) = vec[off++];
            f.push_back(std::move(fx));
        }
        hs.basis.push_back(std::move(f));
    }
    hs.dimension = hs.basis.size();
    return hs;
}

std::size_t hom_dim(const Representation& v, const Representation& w) {
    RatMatrix sys = intertwiner_system(v, w);
    return sys.cols() - rank(sys);
}

std::size_t ext_dim(const Representation& v, const Representation& w) {
    long e = static_cast<long>(hom_dim(v, w)) - euler_form(v.quiver, v.dim, w.dim);
    if (e < 0) throw InternalError("negative Ext dimension");
    return static_cast<std::size_t>(e);
}

Representation dualize(const Representation& v) {
    SymmetricQuiver q(v.quiver);
    const std::size_t n = q.n_vertices();
    DimVector dim(n);
    for (std::size_t x = 1; x <= n; ++x) dim[x - 1] = v.dim[q.sigma_vertex(x) - 1];
    Representation d{v.quiver, dim, std::vector<RatMatrix>(q.n_arrows())};
    for (std::size_t a = 1; a <= q.n_arrows(); ++a) d.map(a) = -v.map(q.sigma_arrow(a)).transpose();
    d.validate();
    return d;
}

Representation direct_sum(const Representation& v, const Representation& w) {
    if (!(v.quiver == w.quiver)) throw DimensionError("direct sum of representations on different quivers");
    DimVector dim(v.dim.size());
    for (std::size_t x = 0; x < dim.size(); ++x) dim[x] = v.dim[x] + w.dim[x];
    Representation s = zero_representation(v.quiver, dim);
    for (std::size_t a = 1; a <= v.quiver.n_arrows(); ++a) {
        s.map(a).set_block(0, 0, v.map(a));
        s.map(a).set_block(v.map(a).rows(), v.map(a).cols(), w.map(a));
    }
    return s;
}

Representation from_intervals(const Quiver& q, const std::vector<Interval>& intervals) {
    Representation s = zero_representation(q, DimVector(q.n_vertices(), 0));
    for (const Interval& iv : intervals) s = direct_sum(s, indecomposable(q, iv.lo, iv.hi));
    return s;
}

std::vector<Interval> fingerprint(const Representation& v) {
    v.validate();
    const Quiver& q = v.quiver;
    auto ivs = all_intervals(q.n_vertices());
    std::vector<Representation> mods;
    for (const auto& iv : ivs) mods.push_back(indecomposable(q, iv.lo, iv.hi));
    const std::size_t k = ivs.size();
    RatMatrix h(k, k);
    std::vector<Rational> rhs(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) h(i, j) = static_cast<long>(hom_dim(mods[i], mods[j]));
        rhs[i] = static_cast<long>(hom_dim(mods[i], v));
    }
    auto mult = solve(h, rhs);
    if (!mult) throw InternalError("interval decomposition system is inconsistent");
    std::vector<Interval> out;
    for (std::size_t j = 0; j < k; ++j) {
        const Rational& m = (*mult)[j];
        if (m < 0 || m.get_den() != 1) throw InternalError("non-integral interval multiplicity " + m.get_str());
        for (long c = 0; c < m.get_num().get_si(); ++c) out.push_back(ivs[j]);
    }
    std::sort(out.begin(), out.end());
    DimVector check(q.n_vertices(), 0);
    for (const auto& iv : out)
        for (std::size_t x = iv.lo; x <= iv.hi; ++x) ++check[x - 1];
    if (check != v.dim) throw InternalError("interval decomposition does not reproduce the dimension vector");
    return out;
}

std::string fingerprint_to_string(const std::vector<Interval>& f) {
    std::string s = "{";
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? " " : "") + interval_to_string(f[i]);
    return s + "}";
}

bool isomorphic(const Representation& v, const Representation& w) {
    return v.quiver == w.quiver && fingerprint(v) == fingerprint(w);
}

}  // namespace symquiver
