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

#include "symquiver/semiinvariants.hpp"

#include <sstream>

#include "symquiver/errors.hpp"
#include "symquiver/functors.hpp"

namespace symquiver {

std::string Weight::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + values[i].get_str();
    return s + ")";
}

Weight weight_of(const Representation& v, WeightMode mode) {
    const std::size_t n = v.quiver.n_vertices();
    Weight w{std::vector<Rational>(n)};
    for (std::size_t y = 1; y <= n; ++y) w.values[y - 1] = euler_form(v.quiver, v.dim, unit_vector(n, y));
    if (mode == WeightMode::SymmetricCorrected)
        if (auto f = SymmetricQuiver(v.quiver).fixed_vertex()) w.values[*f - 1] = 0;
    return w;
}

Weight scale(const Weight& w, const Rational& s) {
    Weight out = w;
    for (auto& x : out.values) x *= s;
    return out;
}

Weight add(const Weight& a, const Weight& b) {
    if (a.values.size() != b.values.size()) throw DimensionError("weights of different length");
    Weight out = a;
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += b.values[i];
    return out;
}

bool is_symmetric_weight(const SymmetricQuiver& q, const Weight& chi) {
    if (chi.values.size() != q.n_vertices()) return false;
    for (std::size_t x = 1; x <= q.n_vertices(); ++x)
        if (chi.values[x - 1] != -chi.values[q.sigma_vertex(x) - 1]) return false;
    return true;
}

Weight symmetrize(const SymmetricQuiver& q, const Weight& chi) {
    if (chi.values.size() != q.n_vertices()) throw DimensionError("weight length mismatch");
    Weight out{std::vector<Rational>(q.n_vertices())};
    for (std::size_t x = 1; x <= q.n_vertices(); ++x)
        out.values[x - 1] = (chi.values[x - 1] - chi.values[q.sigma_vertex(x) - 1]) / 2;
    return out;
}

std::vector<Rational> folded_exponents(const SymmetricQuiver& q, const Weight& chi) {
    if (chi.values.size() != q.n_vertices()) throw DimensionError("weight length mismatch");
    std::vector<Rational> e;
    for (std::size_t x : q.plus_vertices()) e.push_back(chi.values[x - 1] - chi.values[q.sigma_vertex(x) - 1]);
    return e;
}

std::vector<long> torus_degree(const SymmetricQuiver& q, const DimVector& beta, const Weight& chi) {
    auto e = folded_exponents(q, chi);
    std::vector<long> d;
    for (std::size_t k = 0; k < e.size(); ++k) {
        Rational v = -e[k] * beta.at(q.plus_vertices()[k] - 1);
        if (v.get_den() != 1) throw ConditionError("weight " + chi.to_string() + " has non-integral torus degree");
        d.push_back(v.get_num().get_si());
    }
    return d;
}

Rational schofield_eval(const Representation& v, const Representation& w) {
    return det(hom_matrix(minimal_resolution(v), w));
}

Rational schofield_eval_canonical(const Representation& v, const Representation& w) {
    return det(hom_matrix(canonical_resolution(v), w));
}

bool is_pf_admissible(const Representation& v) {
    return isomorphic(v, coxeter_minus(dualize(v)));
}

RatMatrix pf_matrix(const Representation& v, const SymmetricRepresentation& sw) {
    return hom_matrix(minimal_resolution(v), unfold(sw));
}

Rational pfaffian_eval(const Representation& v, const SymmetricRepresentation& sw) {
    Representation w = unfold(sw);
    long e = euler_form(v.quiver, v.dim, w.dim);
    if (e != 0)
        throw ConditionError("Euler form <(" + dim_to_string(v.dim) + "),(" + dim_to_string(w.dim) + ")> = " +
                             std::to_string(e) + " is nonzero");
    const bool even = sw.quiver.n_vertices() % 2 == 0;
    FormKind needed = even ? FormKind::Orthogonal : FormKind::Symplectic;
    if (sw.kind != needed)
        throw ConditionError("parity: pf on A" + std::to_string(sw.quiver.n_vertices()) + " needs " +
                             (needed == FormKind::Orthogonal ? "an " : "a ") + kind_name(needed) + " representation, got " + kind_name(sw.kind));
    if (!is_pf_admissible(v))
        throw ConditionError("V = " + fingerprint_to_string(fingerprint(v)) + " is not isomorphic to C^- nabla V");
    RatMatrix m = hom_matrix(minimal_resolution(v), w);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j)
            if (m(i, j) != -m(j, i))
                throw ConditionError("skewness: Hom(d_min^V, W) fails at (" + std::to_string(i + 1) + "," +
                                     std::to_string(j + 1) + ")");
    return pfaffian(m);
}

std::string SemiInvariantDescriptor::to_string(std::size_t n_vertices) const {
    if (kind == DescriptorKind::Det)
        return "cV:" + std::to_string(interval.lo) + "," + std::to_string(interval.hi);
    if (interval.lo + interval.hi == n_vertices) return "pf:" + std::to_string(interval.lo);
    return "pf:" + std::to_string(interval.lo) + "," + std::to_string(interval.hi);
}

SemiInvariantDescriptor make_descriptor(DescriptorKind kind, const SymmetricQuiver& q, const Interval& iv) {
    SemiInvariantDescriptor d;
    d.kind = kind;
    d.interval = iv;
    d.weight = weight_of(indecomposable(q.quiver(), iv.lo, iv.hi), WeightMode::SymmetricCorrected);
    if (kind == DescriptorKind::Pf) d.weight = scale(d.weight, Rational(1, 2));
    return d;
}

SemiInvariantDescriptor parse_descriptor(const std::string& text, const SymmetricQuiver& q) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw InputError("descriptor must look like cV:j,i or pf:i, got '" + text + "'");
    std::string head = text.substr(0, colon);
    std::vector<std::size_t> nums;
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            long v = std::stol(item, &used);
            if (used != item.size() || v < 1) throw InputError("");
            nums.push_back(static_cast<std::size_t>(v));
        } catch (const std::exception&) {
            throw InputError("bad index '" + item + "' in descriptor '" + text + "'");
        }
    }
    Interval iv;
    DescriptorKind kind;
    if (head == "cV" && nums.size() == 2) {
        kind = DescriptorKind::Det;
        iv = {nums[0], nums[1]};
    } else if (head == "pf" && nums.size() == 1) {
        kind = DescriptorKind::Pf;
        if (nums[0] >= q.n_vertices()) throw InputError("pf index out of range in '" + text + "'");
        iv = {nums[0], q.n_vertices() - nums[0]};
    } else if (head == "pf" && nums.size() == 2) {
        kind = DescriptorKind::Pf;
        iv = {nums[0], nums[1]};
    } else {
        throw InputError("descriptor must look like cV:j,i or pf:i, got '" + text + "'");
    }
    if (iv.lo > iv.hi || iv.hi > q.n_vertices()) throw InputError("interval out of range in '" + text + "'");
    return make_descriptor(kind, q, iv);
}

Rational evaluate(const SemiInvariantDescriptor& d, const SymmetricRepresentation& sw) {
    Representation v = indecomposable(sw.quiver.quiver(), d.interval.lo, d.interval.hi);
    if (d.kind == DescriptorKind::Det) return schofield_eval(v, unfold(sw));
    return pfaffian_eval(v, sw);
}

std::vector<Coordinate> coordinates(const SymmetricQuiver& q, FormKind kind, const DimVector& beta) {
    const Quiver& p = q.quiver();
    std::vector<Coordinate> out;
    for (std::size_t a : q.plus_arrows())
        for (std::size_t r = 0; r < static_cast<std::size_t>(beta.at(p.head(a) - 1)); ++r)
            for (std::size_t c = 0; c < static_cast<std::size_t>(beta.at(p.tail(a) - 1)); ++c)
                out.push_back({a, r, c});
    if (auto f = q.fixed_arrow()) {
        const std::size_t n = static_cast<std::size_t>(beta.at(p.tail(*f) - 1));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = kind == FormKind::Symplectic ? r : r + 1; c < n; ++c) out.push_back({*f, r, c});
    }
    return out;
}

std::vector<std::string> coordinate_names(const SymmetricQuiver& q, FormKind kind, const DimVector& beta) {
    std::vector<std::string> names;
    for (const auto& c : coordinates(q, kind, beta))
        names.push_back("a" + std::to_string(c.arrow) + "_" + std::to_string(c.row + 1) + std::to_string(c.col + 1));
    return names;
}

SymmetricRepresentation rep_from_point(const SymmetricQuiver& q, FormKind kind, const DimVector& beta,
                                       const std::vector<Rational>& point) {
    auto coords = coordinates(q, kind, beta);
    if (point.size() != coords.size()) throw DimensionError("point has the wrong number of coordinates");
    const Quiver& p = q.quiver();
    SymmetricRepresentation sw{q, kind, beta, {}};
    for (std::size_t a : q.stored_arrows())
        sw.maps.emplace(a, RatMatrix(static_cast<std::size_t>(beta.at(p.head(a) - 1)),
                                     static_cast<std::size_t>(beta.at(p.tail(a) - 1))));
    for (std::size_t k = 0; k < coords.size(); ++k) {
        const auto& c = coords[k];
        RatMatrix& m = sw.maps.at(c.arrow);
        m(c.row, c.col) = point[k];
        if (q.arrow_part(c.arrow) == Part::Fixed && c.row != c.col)
            m(c.col, c.row) = kind == FormKind::Symplectic ? point[k] : Rational(-point[k]);
    }
    sw.validate();
    return sw;
}

std::vector<Rational> point_of(const SymmetricRepresentation& sw) {
    std::vector<Rational> point;
    for (const auto& c : coordinates(sw.quiver, sw.kind, sw.dim)) point.push_back(sw.maps.at(c.arrow)(c.row, c.col));
    return point;
}

std::vector<PolyMatrix> generic_maps(const SymmetricQuiver& q, FormKind kind, const DimVector& beta) {
    auto coords = coordinates(q, kind, beta);
    const std::size_t nv = coords.size();
    const Quiver& p = q.quiver();
    std::vector<PolyMatrix> maps(p.n_arrows());
    for (std::size_t a = 1; a <= p.n_arrows(); ++a)
        maps[a - 1] = PolyMatrix(static_cast<std::size_t>(beta.at(p.head(a) - 1)),
                                 static_cast<std::size_t>(beta.at(p.tail(a) - 1)), nv);
    for (std::size_t k = 0; k < nv; ++k) {
        const auto& c = coords[k];
        Polynomial u = Polynomial::variable(nv, k);
        maps[c.arrow - 1](c.row, c.col) = u;
        if (q.arrow_part(c.arrow) == Part::Fixed && c.row != c.col)
            maps[c.arrow - 1](c.col, c.row) = kind == FormKind::Symplectic ? u : -u;
    }
    for (std::size_t a = 1; a <= p.n_arrows(); ++a) {
        if (q.arrow_part(a) != Part::Minus) continue;
        std::size_t b = q.sigma_arrow(a);
        std::size_t t = p.tail(b), h = p.head(b);
        PolyMatrix gt(gram_block(q, kind, t, beta[t - 1]).transpose(), nv);
        PolyMatrix gh(gram_block(q, kind, h, beta[h - 1]), nv);
        maps[a - 1] = -(gt * maps[b - 1].transpose() * gh);
    }
    return maps;
}

Polynomial symbolic_polynomial(const SemiInvariantDescriptor& d, const SymmetricQuiver& q, FormKind kind,
                               const DimVector& beta) {
    if (!q.is_symmetric(beta)) throw ConditionError("dimension vector is not symmetric");
    ProjResolution r = interval_resolution(q.quiver(), d.interval);
    const std::size_t nv = coordinates(q, kind, beta).size();
    PolyMatrix m = hom_matrix(r, generic_maps(q, kind, beta), beta, nv);
    if (d.kind == DescriptorKind::Det) return det(m);
    const bool even = q.n_vertices() % 2 == 0;
    if ((kind == FormKind::Orthogonal) != even)
        throw ConditionError("parity: pf on A" + std::to_string(q.n_vertices()) + " needs a " +
                             (even ? "orthogonal" : "symplectic") + " representation");
    try {
        return pfaffian(m);
    } catch (const StructureError& e) {
        throw ConditionError(std::string("skewness: ") + e.what());
    }
}

}  // namespace symquiver
