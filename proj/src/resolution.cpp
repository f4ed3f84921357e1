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

#include "symquiver/resolution.hpp"

#include <algorithm>
#include <numeric>

#include "symquiver/errors.hpp"

namespace symquiver {

namespace {

std::size_t udim(const DimVector& d, std::size_t x) { return static_cast<std::size_t>(d.at(x - 1)); }

std::vector<long> multiplicities(std::size_t n, const std::vector<std::size_t>& summands) {
    std::vector<long> m(n, 0);
    for (std::size_t x : summands) ++m.at(x - 1);
    return m;
}

std::string path_label(const Quiver& q, std::size_t from, std::size_t to) {
    if (from == to) return "e" + std::to_string(from);
    auto arrows = q.path_arrows(from, to);
    std::string s;
    for (auto it = arrows.rbegin(); it != arrows.rend(); ++it)
        s += (s.empty() ? "" : "·") + std::string("a") + std::to_string(*it);
    return s;
}

}  // namespace

std::vector<long> ProjResolution::p1_multiplicities() const { return multiplicities(quiver.n_vertices(), p1); }
std::vector<long> ProjResolution::p0_multiplicities() const { return multiplicities(quiver.n_vertices(), p0); }

std::string ProjResolution::to_string() const {
    if (p0.empty()) return "0";
    if (p1.empty()) {
        std::string s;
        for (std::size_t x : p0) s += (s.empty() ? "P" : " ⊕ P") + std::to_string(x);
        return s + " (projective)";
    }
    std::string s;
    for (const auto& t : terms) {
        if (!s.empty()) s += "; ";
        s += "P" + std::to_string(t.to) + " → P" + std::to_string(t.from) + " via ";
        if (t.coeff == -1)
            s += "-";
        else if (t.coeff != 1)
            s += t.coeff.get_str() + "*";
        s += path_label(quiver, t.from, t.to);
    }
    return s;
}

ProjResolution canonical_resolution(const Representation& v) {
    v.validate();
    const Quiver& q = v.quiver;
    ProjResolution r{q, v.dim, {}, {}, {}};
    std::vector<std::size_t> col_start(q.n_vertices() + 1, 0);
    for (std::size_t x = 1; x <= q.n_vertices(); ++x) {
        col_start[x] = r.p0.size();
        for (std::size_t l = 0; l < udim(v.dim, x); ++l) r.p0.push_back(x);
    }
    for (std::size_t a = 1; a <= q.n_arrows(); ++a) {
        const std::size_t t = q.tail(a), h = q.head(a);
        for (std::size_t k = 0; k < udim(v.dim, t); ++k) {
            std::size_t row = r.p1.size();
            r.p1.push_back(h);
            for (std::size_t l = 0; l < udim(v.dim, h); ++l)
                if (v.map(a)(l, k) != 0) r.terms.push_back({row, col_start[h] + l, v.map(a)(l, k), h, h});
            r.terms.push_back({row, col_start[t] + k, Rational(-1), t, h});
        }
    }
    return r;
}

ProjResolution interval_resolution(const Quiver& q, const Interval& iv) {
    return minimal_resolution(q, std::vector<Interval>{iv});
}

ProjResolution minimal_resolution(const Quiver& q, const std::vector<Interval>& intervals) {
    const std::size_t n = q.n_vertices();
    struct Summand {
        std::size_t vertex, owner;
    };
    struct RawTerm {
        std::size_t p1_index, p0_index;
        int sign;
    };
    std::vector<Summand> p1, p0;
    std::vector<RawTerm> raw;
    DimVector dim(n, 0);
    for (std::size_t idx = 0; idx < intervals.size(); ++idx) {
        const Interval& iv = intervals[idx];
        if (iv.lo < 1 || iv.hi > n || iv.lo > iv.hi) throw InputError("bad interval " + interval_to_string(iv));
        DimVector e(n, 0);
        for (std::size_t x = iv.lo; x <= iv.hi; ++x) e[x - 1] = 1, ++dim[x - 1];
        std::vector<long> chi(n + 1, 0);
        for (std::size_t y = 1; y <= n; ++y) chi[y] = euler_form(q, e, unit_vector(n, y));
        std::vector<std::size_t> local_p0(n + 1, 0);
        for (std::size_t y = 1; y <= n; ++y) {
            if (chi[y] < -1 || chi[y] > 1) throw InternalError("interval module with non-minimal Euler character");
            if (chi[y] == 1) {
                local_p0[y] = p0.size();
                p0.push_back({y, idx});
            }
        }
        for (std::size_t j = 1; j <= n; ++j) {
            if (chi[j] != -1) continue;
            std::size_t row = p1.size();
            p1.push_back({j, idx});
            std::size_t left = 0, right = 0;
            for (std::size_t v = j; v-- > 1;)
                if (chi[v] == 1) {
                    left = v;
                    break;
                }
            for (std::size_t v = j + 1; v <= n; ++v)
                if (chi[v] == 1) {
                    right = v;
                    break;
                }
            bool any = false;
            for (auto [v, sign] : {std::pair<std::size_t, int>{left, 1}, {right, -1}}) {
                if (!v || !q.has_path(v, j)) continue;
                raw.push_back({row, local_p0[v], sign});
                any = true;
            }
            if (!any) throw InternalError("no generator reaches relation vertex " + std::to_string(j));
        }
    }
    std::vector<std::size_t> row_order(p1.size()), col_order(p0.size());
    std::iota(row_order.begin(), row_order.end(), 0);
    std::iota(col_order.begin(), col_order.end(), 0);
    std::stable_sort(row_order.begin(), row_order.end(), [&](std::size_t a, std::size_t b) {
        return p1[a].vertex != p1[b].vertex ? p1[a].vertex < p1[b].vertex : p1[a].owner < p1[b].owner;
    });
    std::stable_sort(col_order.begin(), col_order.end(), [&](std::size_t a, std::size_t b) {
        return p0[a].vertex != p0[b].vertex ? p0[a].vertex > p0[b].vertex : p0[a].owner < p0[b].owner;
    });
    std::vector<std::size_t> row_pos(p1.size()), col_pos(p0.size());
    ProjResolution r{q, dim, {}, {}, {}};
    for (std::size_t k = 0; k < row_order.size(); ++k) {
        row_pos[row_order[k]] = k;
        r.p1.push_back(p1[row_order[k]].vertex);
    }
    for (std::size_t k = 0; k < col_order.size(); ++k) {
        col_pos[col_order[k]] = k;
        r.p0.push_back(p0[col_order[k]].vertex);
    }
    for (const auto& t : raw)
        r.terms.push_back({row_pos[t.p1_index], col_pos[t.p0_index], Rational(t.sign), p0[t.p0_index].vertex,
                           p1[t.p1_index].vertex});
    std::sort(r.terms.begin(), r.terms.end(),
              [](const PathTerm& a, const PathTerm& b) { return a.row != b.row ? a.row < b.row : a.col < b.col; });
    return r;
}

ProjResolution minimal_resolution(const Representation& v) { return minimal_resolution(v.quiver, fingerprint(v)); }

RatMatrix path_map(const Representation& w, std::size_t from, std::size_t to) {
    RatMatrix m = RatMatrix::identity(udim(w.dim, from));
    if (from == to) return m;
    for (std::size_t a : w.quiver.path_arrows(from, to)) m = w.map(a) * m;
    return m;
}

namespace {

void check_square(const ProjResolution& r, const DimVector& wdim) {
    long e = euler_form(r.quiver, r.source_dim, wdim);
    if (e != 0)
        throw ConditionError("Euler form <(" + dim_to_string(r.source_dim) + "),(" + dim_to_string(wdim) +
                             ")> = " + std::to_string(e) + " is nonzero, so Hom(d,W) is not square");
}

std::vector<std::size_t> offsets(const std::vector<std::size_t>& summands, const DimVector& dim) {
    std::vector<std::size_t> off(summands.size() + 1, 0);
    for (std::size_t k = 0; k < summands.size(); ++k) off[k + 1] = off[k] + udim(dim, summands[k]);
    return off;
}

}  // namespace

RatMatrix hom_matrix(const ProjResolution& r, const Representation& w) {
    if (!(r.quiver == w.quiver)) throw DimensionError("resolution and representation live on different quivers");
    check_square(r, w.dim);
    auto ro = offsets(r.p1, w.dim), co = offsets(r.p0, w.dim);
    RatMatrix m(ro.back(), co.back());
    for (const auto& t : r.terms) {
        RatMatrix block = t.coeff * path_map(w, t.from, t.to);
        for (std::size_t i = 0; i < block.rows(); ++i)
            for (std::size_t j = 0; j < block.cols(); ++j) m(ro[t.row] + i, co[t.col] + j) += block(i, j);
    }
    return m;
}

PolyMatrix hom_matrix(const ProjResolution& r, const std::vector<PolyMatrix>& maps, const DimVector& dim,
                      std::size_t nvars) {
    check_square(r, dim);
    auto ro = offsets(r.p1, dim), co = offsets(r.p0, dim);
    PolyMatrix m(ro.back(), co.back(), nvars);
    for (const auto& t : r.terms) {
        PolyMatrix block(RatMatrix::identity(udim(dim, t.from)), nvars);
        if (t.from != t.to)
            for (std::size_t a : r.quiver.path_arrows(t.from, t.to)) block = maps.at(a - 1) * block;
        block = t.coeff * block;
        for (std::size_t i = 0; i < block.rows(); ++i)
            for (std::size_t j = 0; j < block.cols(); ++j) m(ro[t.row] + i, co[t.col] + j) += block(i, j);
    }
    return m;
}

}  // namespace symquiver
