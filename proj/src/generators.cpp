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

#include "symquiver/generators.hpp"

#include <algorithm>
#include <limits>

#include "symquiver/errors.hpp"
#include "symquiver/functors.hpp"
#include "symquiver/resolution.hpp"

namespace symquiver {

namespace {

long min_over(const DimVector& beta, std::size_t from, std::size_t to) {
    long m = std::numeric_limits<long>::max();
    for (std::size_t k = from; k <= to; ++k) m = std::min(m, beta[k - 1]);
    return m;
}

void check_inputs(const SymmetricQuiver& q, const DimVector& beta, FormKind kind) {
    if (beta.size() != q.n_vertices())
        throw InputError("dimension vector needs " + std::to_string(q.n_vertices()) + " entries");
    if (!q.is_symmetric(beta)) throw InputError("dimension vector (" + dim_to_string(beta) + ") is not symmetric");
    if (kind == FormKind::Symplectic)
        if (auto f = q.fixed_vertex(); f && beta[*f - 1] % 2)
            throw InputError("symplectic kind needs an even dimension at the fixed vertex " + std::to_string(*f));
}

std::vector<SemiInvariantDescriptor> right_generators(const SymmetricQuiver& q, const DimVector& beta,
                                                      FormKind kind) {
    const std::size_t m = q.n_vertices();
    const std::size_t n = m / 2;
    const bool even = m % 2 == 0;
    std::vector<SemiInvariantDescriptor> out;
    const std::size_t i_max = even ? n - 1 : n + 1;
    for (std::size_t i = 1; i <= i_max; ++i)
        for (std::size_t j = 1; j <= i; ++j) {
            if (beta[j - 1] != beta[i]) continue;
            if (j + 1 <= i && min_over(beta, j + 1, i) <= beta[j - 1]) continue;
            auto d = make_descriptor(DescriptorKind::Det, q, {j, i});
            d.degree = beta[j - 1] * static_cast<long>(i - j + 1);
            out.push_back(d);
        }
    const std::size_t last = even ? n : n + 1;
    for (std::size_t i = 1; i <= n; ++i) {
        if (i + 1 <= last && min_over(beta, i + 1, last) <= beta[i - 1]) continue;
        const long len = static_cast<long>(m - 2 * i + 1);
        const bool pf = even ? kind == FormKind::Orthogonal : kind == FormKind::Symplectic;
        if (pf) {
            if (beta[i - 1] % 2) continue;
            auto d = make_descriptor(DescriptorKind::Pf, q, {i, m - i});
            d.degree = beta[i - 1] * len / 2;
            out.push_back(d);
        } else {
            auto d = make_descriptor(DescriptorKind::Det, q, {i, m - i});
            d.degree = beta[i - 1] * len;
            out.push_back(d);
        }
    }
    return out;
}

bool proportional(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.terms().size() != b.terms().size()) return false;
    const auto& [ma, ca] = *a.terms().begin();
    const auto& [mb, cb] = *b.terms().begin();
    if (ma != mb) return false;
    return (cb / ca) * a == b;
}

long descriptor_degree(DescriptorKind kind, const Quiver& q, const Interval& iv, const DimVector& beta) {
    auto mult = interval_resolution(q, iv).p0_multiplicities();
    long deg = 0;
    for (std::size_t y = 0; y < mult.size(); ++y) deg += mult[y] * beta[y];
    return kind == DescriptorKind::Pf ? deg / 2 : deg;
}

}  // namespace

std::vector<SemiInvariantDescriptor> theorem_generators(const SymmetricQuiver& q, const DimVector& beta,
                                                        FormKind kind) {
    check_inputs(q, beta, kind);
    const Quiver& p = q.quiver();
    if (!p.equioriented() || p.n_vertices() < 2)
        throw InputError(p.to_string() + " is not equioriented; reduce it with orientation_path and transport first");
    if (p.dir(1) == Dir::Right) return right_generators(q, beta, kind);
    // relabel by sigma: the mirrored quiver is equioriented to the right
    const std::size_t m = q.n_vertices();
    SymmetricQuiver mirror(Quiver(m, std::vector<Dir>(m - 1, Dir::Right)));
    std::vector<SemiInvariantDescriptor> out;
    for (const auto& d : right_generators(mirror, beta, kind)) {
        auto e = make_descriptor(d.kind, q, {m + 1 - d.interval.hi, m + 1 - d.interval.lo});
        e.degree = d.degree;
        out.push_back(e);
    }
    return out;
}

std::vector<SemiInvariantDescriptor> enumerate_generators(const SymmetricQuiver& q, const DimVector& beta,
                                                          FormKind kind) {
    std::vector<SemiInvariantDescriptor> out;
    std::vector<Polynomial> polys;
    for (const auto& d : theorem_generators(q, beta, kind)) {
        Polynomial p = symbolic_polynomial(d, q, kind, beta);
        if (p.is_zero()) continue;
        if (std::any_of(polys.begin(), polys.end(), [&](const Polynomial& x) { return proportional(x, p); }))
            continue;
        polys.push_back(p);
        out.push_back(d);
    }
    return out;
}

namespace {

Interval path_interval(const Quiver& q, std::size_t from, std::size_t to) {
    Interval a = projective_interval(q, from), b = projective_interval(q, to);
    if (a.lo == b.lo && b.hi < a.hi) return {b.hi + 1, a.hi};
    if (a.hi == b.hi && a.lo < b.lo) return {a.lo, b.lo - 1};
    throw InternalError("path " + std::to_string(from) + " -> " + std::to_string(to) +
                        " does not cut out an interval");
}

SemiInvariantDescriptor path_det(const SymmetricQuiver& q, const DimVector& beta, std::size_t from, std::size_t to) {
    auto d = make_descriptor(DescriptorKind::Det, q, path_interval(q.quiver(), from, to));
    d.degree = beta[from - 1] * static_cast<long>(q.quiver().path_arrows(from, to).size());
    return d;
}

}  // namespace

Reduction reduce_dominated(const SymmetricQuiver& q, const DimVector& beta) {
    if (!q.is_symmetric(beta)) throw InputError("dimension vector is not symmetric");
    Reduction r{q, beta, {}, {}, {}};
    for (std::size_t x = 1; x <= q.n_vertices(); ++x) r.original_vertex.push_back(x);
    for (;;) {
        const Quiver& c = r.quiver.quiver();
        const std::size_t m = c.n_vertices();
        const std::size_t h = m / 2;
        std::size_t pick = 0;
        for (std::size_t x = 2; x <= h && !pick; ++x) {
            if (m % 2 == 0 && x + 1 > h) break;
            if (c.dir(x - 1) != c.dir(x)) continue;
            long bx = r.dim[x - 1];
            if (bx >= r.dim[x - 2] && bx >= r.dim[x]) pick = x;
        }
        if (!pick) break;
        const std::size_t x = pick;
        const bool right = c.dir(x) == Dir::Right;
        const std::size_t y = right ? x - 1 : x + 1, z = right ? x + 1 : x - 1;
        auto orig = [&](std::size_t v) { return r.original_vertex[v - 1]; };
        if (r.dim[x - 1] == r.dim[y - 1]) r.extracted.push_back(path_det(q, beta, orig(y), orig(x)));
        if (r.dim[x - 1] == r.dim[z - 1]) r.extracted.push_back(path_det(q, beta, orig(x), orig(z)));
        r.stripped.push_back(orig(x));
        const std::size_t sx = r.quiver.sigma_vertex(x);
        std::vector<Dir> dirs;
        for (std::size_t a = 1; a < m; ++a)
            if (a != x && a != sx) dirs.push_back(c.dir(a));
        std::vector<std::size_t> labels;
        DimVector dim;
        for (std::size_t v = 1; v <= m; ++v)
            if (v != x && v != sx) {
                labels.push_back(orig(v));
                dim.push_back(r.dim[v - 1]);
            }
        r.quiver = SymmetricQuiver(Quiver(m - 2, dirs));
        r.original_vertex = labels;
        r.dim = dim;
    }
    return r;
}

SemiInvariantDescriptor pullback(const Reduction& r, const SymmetricQuiver& q, const SemiInvariantDescriptor& d) {
    ProjResolution res = interval_resolution(r.quiver.quiver(), d.interval);
    if (res.terms.size() != 1)
        throw StructureError("pullback needs a descriptor with a single-path resolution, got " + res.to_string());
    std::size_t from = r.original_vertex[res.terms[0].from - 1];
    std::size_t to = r.original_vertex[res.terms[0].to - 1];
    auto out = make_descriptor(d.kind, q, path_interval(q.quiver(), from, to));
    out.degree = d.degree;
    return out;
}

TransportResult transport_generator(const SemiInvariantDescriptor& descr, const SymmetricQuiver& q,
                                    const DimVector& beta, const std::vector<std::size_t>& sequence) {
    TransportResult t{descr, q, beta, {}};
    for (std::size_t x : sequence) {
        auto pairs = admissible_pairs(t.quiver);
        auto it = std::find_if(pairs.begin(), pairs.end(), [&](auto pr) { return pr.first == x || pr.second == x; });
        if (it == pairs.end())
            throw StructureError("vertex " + std::to_string(x) + " is not in an admissible pair of " +
                                 t.quiver.to_string());
        auto [sink, source] = *it;
        DimVector next_dim = reflect_pair_dim(t.quiver, sink, t.dim);
        for (long v : next_dim)
            if (v < 0) throw ConditionError("reflection at (" + std::to_string(sink) + "," + std::to_string(source) +
                                            ") gives a negative dimension vector");
        SymmetricQuiver next_q = reflect_quiver(t.quiver, sink);
        std::string step = "(" + std::to_string(sink) + "," + std::to_string(source) + ") " + t.quiver.to_string() +
                           " -> " + next_q.to_string() + ": ";
        if (t.descriptor) {
            const Interval iv = t.descriptor->interval;
            if ((iv.lo == iv.hi && (iv.lo == sink || iv.lo == source))) {
                step += t.descriptor->to_string(q.n_vertices()) + " is the simple at the pair; absent";
                t.descriptor.reset();
            } else {
                Representation v = indecomposable(t.quiver.quiver(), iv.lo, iv.hi);
                auto f = fingerprint(reflect_pair_plus(v, sink).representation);
                if (f.size() != 1) throw InternalError("reflection of an indecomposable is decomposable");
                auto d = make_descriptor(t.descriptor->kind, next_q, f[0]);
                d.degree = descriptor_degree(d.kind, next_q.quiver(), d.interval, next_dim);
                step += t.descriptor->to_string(q.n_vertices()) + " -> " + d.to_string(q.n_vertices());
                t.descriptor = d;
            }
        } else {
            step += "absent";
        }
        t.steps.push_back(step);
        t.quiver = next_q;
        t.dim = next_dim;
    }
    return t;
}

}  // namespace symquiver
