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

#include "symquiver/functors.hpp"

#include <algorithm>
#include <functional>

#include "symquiver/errors.hpp"

namespace symquiver {

namespace {

std::size_t udim(const DimVector& d, std::size_t x) { return static_cast<std::size_t>(d.at(x - 1)); }

// Kernel basis of m scaled to volume 1 against a right inverse when m is onto.
RatMatrix normalized_kernel(const RatMatrix& m) {
    RatMatrix k = kernel_matrix(m);
    if (k.cols() == 0 || rank(m) != m.rows()) return k;
    auto s = solve(m, RatMatrix::identity(m.rows()));
    if (!s) throw InternalError("surjective map has no right inverse");
    Rational vol = det(hstack(k, *s));
    for (std::size_t r = 0; r < k.rows(); ++r) k(r, 0) /= vol;
    return k;
}

// Rows of the returned matrix span the functionals killing the image of m.
RatMatrix normalized_cokernel(const RatMatrix& m) {
    RatMatrix p = kernel_matrix(m.transpose()).transpose();
    if (p.rows() == 0 || rank(m) != m.cols()) return p;
    auto r = solve(p, RatMatrix::identity(p.rows()));
    if (!r) throw InternalError("cokernel projection has no right inverse");
    Rational vol = det(hstack(m, *r));
    for (std::size_t c = 0; c < p.cols(); ++c) p(0, c) *= vol;
    return p;
}

}  // namespace

ReflectionResult reflect_plus(const Representation& v, std::size_t x) {
    const Quiver& q = v.quiver;
    if (!q.is_sink(x)) throw StructureError("vertex " + std::to_string(x) + " is not a sink of " + q.to_string());
    auto in = q.incoming(x);
    std::size_t total = 0;
    for (std::size_t a : in) total += udim(v.dim, q.tail(a));
    RatMatrix sum(udim(v.dim, x), total);
    std::size_t off = 0;
    for (std::size_t a : in) {
        sum.set_block(0, off, v.map(a));
        off += v.map(a).cols();
    }
    RatMatrix k = normalized_kernel(sum);
    Quiver nq = q.reversed_at(x);
    Representation out{nq, v.dim, v.maps};
    out.dim[x - 1] = static_cast<long>(k.cols());
    off = 0;
    for (std::size_t a : in) {
        std::size_t n = udim(v.dim, q.tail(a));
        out.map(a) = k.block(off, 0, n, k.cols());
        off += n;
    }
    out.validate();
    return {out, nq};
}

ReflectionResult reflect_minus(const Representation& v, std::size_t x) {
    const Quiver& q = v.quiver;
    if (!q.is_source(x))
        throw StructureError("vertex " + std::to_string(x) + " is not a source of " + q.to_string());
    auto outs = q.outgoing(x);
    std::size_t total = 0;
    for (std::size_t a : outs) total += udim(v.dim, q.head(a));
    RatMatrix stack(total, udim(v.dim, x));
    std::size_t off = 0;
    for (std::size_t a : outs) {
        stack.set_block(off, 0, v.map(a));
        off += v.map(a).rows();
    }
    RatMatrix p = normalized_cokernel(stack);
    Quiver nq = q.reversed_at(x);
    Representation out{nq, v.dim, v.maps};
    out.dim[x - 1] = static_cast<long>(p.rows());
    off = 0;
    for (std::size_t a : outs) {
        std::size_t n = udim(v.dim, q.head(a));
        out.map(a) = p.block(0, off, p.rows(), n);
        off += n;
    }
    out.validate();
    return {out, nq};
}

namespace {

std::pair<std::size_t, std::size_t> pair_of(const Quiver& q, std::size_t x) {
    SymmetricQuiver sq(q);
    for (auto pr : admissible_pairs(sq))
        if (pr.first == x || pr.second == x) return pr;
    throw StructureError("vertex " + std::to_string(x) + " is not in an admissible pair of " + q.to_string());
}

}  // namespace

ReflectionResult reflect_pair_plus(const Representation& v, std::size_t x) {
    auto [sink, source] = pair_of(v.quiver, x);
    if (sink != x) throw StructureError("vertex " + std::to_string(x) + " is not the sink of its pair");
    ReflectionResult r = reflect_plus(v, sink);
    return reflect_minus(r.representation, source);
}

ReflectionResult reflect_pair_minus(const Representation& v, std::size_t x) {
    auto [sink, source] = pair_of(v.quiver, x);
    if (source != x) throw StructureError("vertex " + std::to_string(x) + " is not the source of its pair");
    ReflectionResult r = reflect_minus(v, source);
    return reflect_plus(r.representation, sink);
}

SymmetricRepresentation reflect_pair_symmetric(const SymmetricRepresentation& sv, std::size_t x) {
    sv.validate();
    auto [sink, source] = pair_of(sv.quiver.quiver(), x);
    Representation full = unfold(sv);
    std::size_t p = sv.quiver.vertex_part(sink) == Part::Plus ? sink : source;
    ReflectionResult r = p == sink ? reflect_plus(full, p) : reflect_minus(full, p);
    SymmetricRepresentation out{reflect_quiver(sv.quiver, x), sv.kind, r.representation.dim, {}};
    out.dim[sv.quiver.sigma_vertex(p) - 1] = out.dim[p - 1];
    for (std::size_t a : out.quiver.stored_arrows()) out.maps.emplace(a, r.representation.map(a));
    out.validate();
    return out;
}

namespace {

std::vector<std::vector<std::size_t>> reflection_orders(const Quiver& q, bool sinks) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    std::vector<bool> used(q.n_vertices() + 1, false);
    std::function<void(const Quiver&)> rec = [&](const Quiver& c) {
        if (cur.size() == q.n_vertices()) {
            out.push_back(cur);
            return;
        }
        for (std::size_t y = 1; y <= c.n_vertices(); ++y) {
            if (used[y] || !(sinks ? c.is_sink(y) : c.is_source(y))) continue;
            used[y] = true;
            cur.push_back(y);
            rec(c.reversed_at(y));
            cur.pop_back();
            used[y] = false;
        }
    };
    rec(q);
    return out;
}

std::vector<std::size_t> first_order(const Quiver& q, bool sinks) {
    std::vector<std::size_t> order;
    std::vector<bool> used(q.n_vertices() + 1, false);
    Quiver c = q;
    while (order.size() < q.n_vertices()) {
        std::size_t pick = 0;
        for (std::size_t y = 1; y <= c.n_vertices() && !pick; ++y)
            if (!used[y] && (sinks ? c.is_sink(y) : c.is_source(y))) pick = y;
        if (!pick) throw InternalError("no admissible numbering for " + q.to_string());
        used[pick] = true;
        order.push_back(pick);
        c = c.reversed_at(pick);
    }
    return order;
}

}  // namespace

std::vector<std::vector<std::size_t>> sink_orders(const Quiver& q) { return reflection_orders(q, true); }
std::vector<std::vector<std::size_t>> source_orders(const Quiver& q) { return reflection_orders(q, false); }

Representation coxeter_plus(const Representation& v, const std::vector<std::size_t>& order) {
    Representation cur = v;
    for (std::size_t x : order) cur = reflect_plus(cur, x).representation;
    return cur;
}

Representation coxeter_minus(const Representation& v, const std::vector<std::size_t>& order) {
    Representation cur = v;
    for (std::size_t x : order) cur = reflect_minus(cur, x).representation;
    return cur;
}

Representation coxeter_plus(const Representation& v) { return coxeter_plus(v, first_order(v.quiver, true)); }
Representation coxeter_minus(const Representation& v) { return coxeter_minus(v, first_order(v.quiver, false)); }

}  // namespace symquiver
