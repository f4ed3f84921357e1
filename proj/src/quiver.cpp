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

#include "symquiver/quiver.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "symquiver/errors.hpp"

namespace symquiver {

Quiver::Quiver(std::size_t n_vertices, std::vector<Dir> dirs) : n_(n_vertices), dirs_(std::move(dirs)) {
    if (n_ == 0) throw StructureError("quiver needs at least one vertex");
    if (dirs_.size() != n_ - 1)
        throw DimensionError("A" + std::to_string(n_) + " needs " + std::to_string(n_ - 1) +
                             " arrow directions, got " + std::to_string(dirs_.size()));
}

std::size_t Quiver::tail(std::size_t arrow) const { return dir(arrow) == Dir::Right ? arrow : arrow + 1; }
std::size_t Quiver::head(std::size_t arrow) const { return dir(arrow) == Dir::Right ? arrow + 1 : arrow; }

std::vector<std::size_t> Quiver::incoming(std::size_t x) const {
    std::vector<std::size_t> out;
    for (std::size_t a = 1; a <= n_arrows(); ++a)
        if (head(a) == x) out.push_back(a);
    return out;
}

std::vector<std::size_t> Quiver::outgoing(std::size_t x) const {
    std::vector<std::size_t> out;
    for (std::size_t a = 1; a <= n_arrows(); ++a)
        if (tail(a) == x) out.push_back(a);
    return out;
}

Quiver Quiver::reversed_at(std::size_t x) const {
    std::vector<Dir> d = dirs_;
    for (std::size_t a = 1; a <= n_arrows(); ++a)
        if (a == x || a + 1 == x) d[a - 1] = d[a - 1] == Dir::Right ? Dir::Left : Dir::Right;
    return Quiver(n_, d);
}

bool Quiver::has_path(std::size_t x, std::size_t y) const {
    if (x == y) return true;
    if (x < y) {
        for (std::size_t a = x; a < y; ++a)
            if (dir(a) != Dir::Right) return false;
    } else {
        for (std::size_t a = y; a < x; ++a)
            if (dir(a) != Dir::Left) return false;
    }
    return true;
}

std::vector<std::size_t> Quiver::path_arrows(std::size_t x, std::size_t y) const {
    if (!has_path(x, y))
        throw StructureError("no path from " + std::to_string(x) + " to " + std::to_string(y) + " in " +
                             to_string());
    std::vector<std::size_t> arrows;
    if (x < y)
        for (std::size_t a = x; a < y; ++a) arrows.push_back(a);
    else
        for (std::size_t a = x - 1; a >= y; --a) arrows.push_back(a);
    return arrows;
}

bool Quiver::equioriented() const {
    return std::all_of(dirs_.begin(), dirs_.end(), [&](Dir d) { return d == dirs_.front(); });
}

std::string Quiver::to_string() const {
    std::string s = "A" + std::to_string(n_) + ":";
    for (Dir d : dirs_) s.push_back(d == Dir::Right ? '>' : '<');
    return s;
}

SymmetricQuiver::SymmetricQuiver(Quiver q) : q_(std::move(q)) {
    const std::size_t n = q_.n_vertices();
    for (std::size_t a = 1; a <= q_.n_arrows(); ++a) {
        std::size_t b = n - a;
        if (q_.dir(a) != q_.dir(b))
            throw StructureError("orientation of " + q_.to_string() + " is not symmetric: a" + std::to_string(a) +
                                 " and a" + std::to_string(b) + " must be reversals of each other");
    }
}

Part SymmetricQuiver::vertex_part(std::size_t x) const {
    std::size_t s = sigma_vertex(x);
    if (x == s) return Part::Fixed;
    return x < s ? Part::Plus : Part::Minus;
}

Part SymmetricQuiver::arrow_part(std::size_t a) const {
    std::size_t s = sigma_arrow(a);
    if (a == s) return Part::Fixed;
    return a < s ? Part::Plus : Part::Minus;
}

std::vector<std::size_t> SymmetricQuiver::plus_vertices() const {
    std::vector<std::size_t> v;
    for (std::size_t x = 1; x <= n_vertices() / 2; ++x) v.push_back(x);
    return v;
}

std::optional<std::size_t> SymmetricQuiver::fixed_vertex() const {
    if (n_vertices() % 2 == 1) return (n_vertices() + 1) / 2;
    return std::nullopt;
}

std::vector<std::size_t> SymmetricQuiver::plus_arrows() const {
    std::vector<std::size_t> v;
    for (std::size_t a = 1; a <= n_arrows(); ++a)
        if (arrow_part(a) == Part::Plus) v.push_back(a);
    return v;
}

std::optional<std::size_t> SymmetricQuiver::fixed_arrow() const {
    if (n_vertices() % 2 == 0) return n_vertices() / 2;
    return std::nullopt;
}

std::vector<std::size_t> SymmetricQuiver::stored_arrows() const {
    auto v = plus_arrows();
    if (auto f = fixed_arrow()) v.push_back(*f);
    return v;
}

bool SymmetricQuiver::is_symmetric(const DimVector& alpha) const {
    if (alpha.size() != n_vertices()) return false;
    for (std::size_t x = 1; x <= n_vertices(); ++x)
        if (alpha[x - 1] != alpha[sigma_vertex(x) - 1]) return false;
    return true;
}

Quiver parse_plain_quiver(const std::string& spec) {
    auto colon = spec.find(':');
    if (spec.empty() || spec[0] != 'A' || colon == std::string::npos)
        throw InputError("quiver spec must look like A<n>:<dirs>, got '" + spec + "'");
    std::string num = spec.substr(1, colon - 1);
    if (num.empty() || !std::all_of(num.begin(), num.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw InputError("bad vertex count in quiver spec '" + spec + "'");
    std::size_t n = std::stoul(num);
    std::vector<Dir> dirs;
    for (char c : spec.substr(colon + 1)) {
        if (c == '>')
            dirs.push_back(Dir::Right);
        else if (c == '<')
            dirs.push_back(Dir::Left);
        else
            throw InputError("bad arrow direction '" + std::string(1, c) + "' in quiver spec '" + spec + "'");
    }
    if (n == 0 || dirs.size() != n - 1)
        throw InputError("quiver spec '" + spec + "' needs exactly " + std::to_string(n ? n - 1 : 0) +
                         " directions");
    return Quiver(n, dirs);
}

SymmetricQuiver parse_quiver(const std::string& spec) { return SymmetricQuiver(parse_plain_quiver(spec)); }

DimVector parse_dim(const std::string& text) {
    DimVector d;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            long v = std::stol(item, &used);
            if (used != item.size() || v < 0) throw InputError("");
            d.push_back(v);
        } catch (const std::exception&) {
            throw InputError("bad dimension entry '" + item + "' in '" + text + "'");
        }
    }
    return d;
}

std::string dim_to_string(const DimVector& d) {
    std::string s;
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s;
}

long euler_form(const Quiver& q, const DimVector& alpha, const DimVector& beta) {
    if (alpha.size() != q.n_vertices() || beta.size() != q.n_vertices())
        throw DimensionError("dimension vectors must have " + std::to_string(q.n_vertices()) + " entries");
    long s = 0;
    for (std::size_t x = 0; x < alpha.size(); ++x) s += alpha[x] * beta[x];
    for (std::size_t a = 1; a <= q.n_arrows(); ++a) s -= alpha[q.tail(a) - 1] * beta[q.head(a) - 1];
    return s;
}

DimVector unit_vector(std::size_t n, std::size_t x) {
    DimVector e(n, 0);
    e.at(x - 1) = 1;
    return e;
}

DimVector reflect_dim(const Quiver& q, std::size_t x, const DimVector& alpha) {
    if (alpha.size() != q.n_vertices()) throw DimensionError("dimension vector length mismatch");
    if (!q.is_sink(x) && !q.is_source(x))
        throw StructureError("vertex " + std::to_string(x) + " is neither a sink nor a source of " + q.to_string());
    DimVector out = alpha;
    long s = -alpha[x - 1];
    if (x > 1) s += alpha[x - 2];
    if (x < q.n_vertices()) s += alpha[x];
    out[x - 1] = s;
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> admissible_pairs(const SymmetricQuiver& q) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const Quiver& p = q.quiver();
    for (std::size_t x = 1; x <= q.n_vertices(); ++x) {
        std::size_t s = q.sigma_vertex(x);
        if (x == s || (x > s ? x - s : s - x) == 1) continue;
        if (p.is_sink(x) && p.is_source(s)) out.emplace_back(x, s);
    }
    return out;
}

namespace {

std::pair<std::size_t, std::size_t> pair_containing(const SymmetricQuiver& q, std::size_t x) {
    for (auto pr : admissible_pairs(q))
        if (pr.first == x || pr.second == x) return pr;
    throw StructureError("vertex " + std::to_string(x) + " is not in an admissible sink-source pair of " +
                         q.to_string());
}

}  // namespace

SymmetricQuiver reflect_quiver(const SymmetricQuiver& q, std::size_t x) {
    auto [sink, source] = pair_containing(q, x);
    return SymmetricQuiver(q.quiver().reversed_at(sink).reversed_at(source));
}

DimVector reflect_pair_dim(const SymmetricQuiver& q, std::size_t x, const DimVector& alpha) {
    auto [sink, source] = pair_containing(q, x);
    DimVector once = reflect_dim(q.quiver(), sink, alpha);
    Quiver q1 = q.quiver().reversed_at(sink);
    return reflect_dim(q1, source, once);
}

std::vector<std::size_t> orientation_path(const SymmetricQuiver& q, const SymmetricQuiver& target) {
    if (q.n_vertices() != target.n_vertices())
        throw DimensionError("orientation_path needs quivers on the same number of vertices");
    std::map<std::string, std::pair<std::string, std::size_t>> parent;
    std::map<std::string, SymmetricQuiver> seen;
    std::deque<SymmetricQuiver> queue{q};
    seen.emplace(q.to_string(), q);
    while (!queue.empty()) {
        SymmetricQuiver cur = queue.front();
        queue.pop_front();
        if (cur == target) {
            std::vector<std::size_t> path;
            std::string key = cur.to_string();
            while (key != q.to_string()) {
                auto [prev, x] = parent.at(key);
                path.push_back(x);
                key = prev;
            }
            std::reverse(path.begin(), path.end());
            return path;
        }
        for (auto [sink, source] : admissible_pairs(cur)) {
            SymmetricQuiver next = reflect_quiver(cur, sink);
            std::string key = next.to_string();
            if (seen.count(key)) continue;
            seen.emplace(key, next);
            parent.emplace(key, std::make_pair(cur.to_string(), sink));
            queue.push_back(next);
        }
    }
    if (q.fixed_arrow() && q.quiver().dir(*q.fixed_arrow()) != target.quiver().dir(*q.fixed_arrow()))
        throw StructureError(target.to_string() + " is not reachable from " + q.to_string() +
                             ": admissible reflections never reverse the middle arrow");
    throw InternalError("no admissible reflection sequence from " + q.to_string() + " to " + target.to_string());
}

std::vector<SymmetricQuiver> symmetric_orientations(std::size_t n) {
    std::vector<SymmetricQuiver> out;
    const std::size_t arrows = n ? n - 1 : 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << arrows); ++mask) {
        std::vector<Dir> dirs(arrows);
        for (std::size_t a = 0; a < arrows; ++a) dirs[a] = (mask >> (arrows - 1 - a)) & 1 ? Dir::Right : Dir::Left;
        Quiver q(n, dirs);
        try {
            out.emplace_back(q);
        } catch (const StructureError&) {
        }
    }
    return out;
}

}  // namespace symquiver
