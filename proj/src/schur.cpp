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

#include "symquiver/schur.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "symquiver/errors.hpp"

namespace symquiver {

Partition normalize(const Partition& p) {
    Partition out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0) throw InputError("partition with a negative part");
        if (i && p[i] > p[i - 1]) throw InputError("partition parts must be weakly decreasing");
        if (p[i] > 0) out.push_back(p[i]);
    }
    return out;
}

long partition_size(const Partition& p) {
    long s = 0;
    for (long x : p) s += x;
    return s;
}

std::size_t height(const Partition& p) {
    std::size_t h = 0;
    for (long x : p)
        if (x > 0) ++h;
    return h;
}

Partition transpose(const Partition& p) {
    Partition t;
    if (p.empty()) return t;
    for (long c = 1; c <= p.front(); ++c) {
        long n = 0;
        for (long x : p)
            if (x >= c) ++n;
        t.push_back(n);
    }
    return t;
}

Partition doubled(const Partition& p) {
    Partition out = p;
    for (auto& x : out) x *= 2;
    return out;
}

Partition parse_partition(const std::string& text) {
    Partition p;
    if (text.empty() || text == "0" || text == "()") return p;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            long v = std::stol(item, &used);
            if (used != item.size()) throw InputError("");
            p.push_back(v);
        } catch (const std::exception&) {
            throw InputError("bad partition part '" + item + "' in '" + text + "'");
        }
    }
    return normalize(p);
}

std::string partition_to_string(const Partition& p) {
    if (p.empty()) return "()";
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s;
}

std::vector<Partition> partitions_of(long n, std::size_t max_height) {
    std::vector<Partition> out;
    if (n < 0) return out;
    Partition cur;
    std::function<void(long, long)> rec = [&](long left, long max_part) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        if (cur.size() >= max_height) return;
        for (long p = std::min(left, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

long lr_coeff(const Partition& lambda_in, const Partition& mu_in, const Partition& nu_in) {
    Partition lambda = normalize(lambda_in), mu = normalize(mu_in), nu = normalize(nu_in);
    if (partition_size(nu) != partition_size(lambda) + partition_size(mu)) return 0;
    if (lambda.size() > nu.size()) return 0;
    for (std::size_t i = 0; i < lambda.size(); ++i)
        if (lambda[i] > nu[i]) return 0;
    lambda.resize(nu.size(), 0);
    struct Cell {
        std::size_t r, c;
    };
    std::vector<Cell> cells;
    for (std::size_t r = 0; r < nu.size(); ++r)
        for (long c = nu[r] - 1; c >= lambda[r]; --c) cells.push_back({r, static_cast<std::size_t>(c)});
    std::map<std::pair<std::size_t, std::size_t>, long> filled;
    std::vector<long> count(mu.size() + 1, 0);
    auto in_skew = [&](std::size_t r, std::size_t c) {
        return r < nu.size() && static_cast<long>(c) >= lambda[r] && static_cast<long>(c) < nu[r];
    };
    long total = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == cells.size()) {
            ++total;
            return;
        }
        auto [r, c] = cells[k];
        long hi = static_cast<long>(mu.size());
        long lo = 1;
        if (in_skew(r, c + 1)) hi = std::min(hi, filled.at({r, c + 1}));
        if (r > 0 && in_skew(r - 1, c)) lo = std::max(lo, filled.at({r - 1, c}) + 1);
        for (long v = lo; v <= hi; ++v) {
            if (count[v] >= mu[v - 1]) continue;
            if (v > 1 && count[v] + 1 > count[v - 1]) continue;
            ++count[v];
            filled[{r, c}] = v;
            rec(k + 1);
            filled.erase({r, c});
            --count[v];
        }
    };
    rec(0);
    return total;
}

std::vector<std::pair<Partition, long>> lr_product(const Partition& lambda, const Partition& mu) {
    std::vector<std::pair<Partition, long>> out;
    long n = partition_size(lambda) + partition_size(mu);
    for (const auto& nu : partitions_of(n)) {
        long c = lr_coeff(lambda, mu, nu);
        if (c) out.emplace_back(nu, c);
    }
    return out;
}

long schur_dim(const Partition& lambda_in, std::size_t n) {
    Partition lambda = normalize(lambda_in);
    if (lambda.size() > n) return 0;
    lambda.resize(n, 0);
    Rational d = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            d *= make_rational(lambda[i] - lambda[j] + static_cast<long>(j - i), static_cast<long>(j - i));
    if (d.get_den() != 1) throw InternalError("non-integral Weyl dimension");
    return d.get_num().get_si();
}

std::vector<CauchyTerm> cauchy_tensor(long d, std::size_t n_v, std::size_t n_w) {
    std::vector<CauchyTerm> out;
    for (const auto& lambda : partitions_of(d)) {
        long a = schur_dim(lambda, n_v), b = schur_dim(lambda, n_w);
        if (a && b) out.push_back({lambda, a, b});
    }
    return out;
}

std::vector<Partition> cauchy_sym2(long d, std::size_t n) {
    std::vector<Partition> out;
    for (const auto& lambda : partitions_of(d, n)) out.push_back(doubled(lambda));
    return out;
}

std::vector<Partition> cauchy_wedge2(long d, std::size_t n) {
    std::vector<Partition> out;
    for (const auto& lambda : partitions_of(d)) {
        Partition p = transpose(doubled(lambda));
        if (height(p) <= n) out.push_back(p);
    }
    return out;
}

namespace {

// lambda padded to n entries, or nullopt if it does not fit.
std::optional<Partition> padded(const Partition& lambda, std::size_t n) {
    Partition p = normalize(lambda);
    if (p.size() > n) return std::nullopt;
    p.resize(n, 0);
    return p;
}

}  // namespace

long sl_invariant_dim(const Partition& lambda, std::size_t n) {
    auto p = padded(lambda, n);
    if (!p) return 0;
    for (long x : *p)
        if (x != p->front()) return 0;
    return 1;
}

std::optional<long> sl_pair_semiinvariant(const Partition& lambda, const Partition& mu, std::size_t n) {
    auto l = padded(lambda, n), m = padded(mu, n);
    if (!l || !m) return std::nullopt;
    if (n == 0) return 0L;
    long k = (*l)[0] + (*m)[n - 1];
    for (std::size_t i = 0; i < n; ++i)
        if ((*l)[i] + (*m)[n - 1 - i] != k) return std::nullopt;
    return k;
}

long so_invariant_dim(const Partition& lambda, std::size_t n) {
    auto p = padded(lambda, n);
    if (!p) return 0;
    if (n == 0) return 1;
    bool all_even = std::all_of(p->begin(), p->end(), [](long x) { return x % 2 == 0; });
    bool all_odd = std::all_of(p->begin(), p->end(), [](long x) { return x % 2 == 1; });
    return all_even || all_odd ? 1 : 0;
}

long sp_invariant_dim(const Partition& lambda, std::size_t n) {
    if (n % 2) return 0;
    auto p = padded(lambda, n);
    if (!p) return 0;
    for (std::size_t i = 0; i + 1 < p->size(); i += 2)
        if ((*p)[i] != (*p)[i + 1]) return 0;
    return 1;
}

namespace {

// (S_mu V^* (x) S_lambda V)^{SL(V)} for dim V = n: lambda - mu constant on n padded entries.
bool sl_dual_pair(const Partition& mu, const Partition& lambda, std::size_t n) {
    auto m = padded(mu, n), l = padded(lambda, n);
    if (!m || !l) return false;
    for (std::size_t i = 1; i < n; ++i)
        if ((*l)[i] - (*m)[i] != (*l)[0] - (*m)[0]) return false;
    return true;
}

}  // namespace

long chain_weight_space_dim(const SymmetricQuiver& q, const DimVector& beta, FormKind kind,
                            const std::vector<long>& torus_in, long d) {
    const Quiver& p = q.quiver();
    if (!p.equioriented() || p.n_vertices() < 2)
        throw StructureError("chain count needs an equioriented quiver, got " + p.to_string());
    if (!q.is_symmetric(beta)) throw ConditionError("dimension vector is not symmetric");
    const std::size_t m = p.n_vertices();
    const std::size_t h = m / 2;
    std::vector<long> torus = torus_in;
    if (torus.size() != h) throw DimensionError("torus degree needs one entry per Q0+ vertex");
    // the mirrored orientation is the same quiver relabelled by sigma, which inverts the scalar torus
    if (p.dir(1) == Dir::Left)
        for (auto& t : torus) t = -t;
    const long c = m % 2 == 0 ? 2 : 1;

    std::vector<long> deg(h + 1, 0);
    long prev = 0;
    for (std::size_t i = 1; i < h; ++i) {
        deg[i] = prev - torus[i - 1];
        prev = deg[i];
    }
    long last = prev - torus[h - 1];
    if (last % c != 0) return 0;
    deg[h] = last / c;
    long total = 0;
    for (std::size_t i = 1; i <= h; ++i) {
        if (deg[i] < 0) return 0;
        total += deg[i];
    }
    if (total != d) return 0;

    auto b = [&](std::size_t x) { return static_cast<std::size_t>(beta[x - 1]); };
    // counts[lambda] over the first i arrows with the vertex conditions at 1..i satisfied
    std::map<Partition, long> counts{{Partition{}, 1}};
    for (std::size_t i = 1; i < h; ++i) {
        std::map<Partition, long> next;
        for (const auto& lambda : partitions_of(deg[i], b(i)))
            for (const auto& [mu, n] : counts)
                if (sl_dual_pair(mu, lambda, b(i))) next[lambda] += n;
        counts = std::move(next);
    }
    std::vector<Partition> last_parts;
    for (const auto& mu : partitions_of(deg[h])) {
        if (m % 2 == 0)
            last_parts.push_back(kind == FormKind::Symplectic ? doubled(mu) : transpose(doubled(mu)));
        else
            last_parts.push_back(mu);
    }
    long dim = 0;
    for (const auto& nu : last_parts) {
        long fixed = 1;
        if (m % 2 == 1) {
            std::size_t f = h + 1;
            fixed = kind == FormKind::Orthogonal ? so_invariant_dim(nu, b(f)) : sp_invariant_dim(nu, b(f));
        }
        if (!fixed) continue;
        for (const auto& [mu, n] : counts)
            if (sl_dual_pair(mu, nu, b(h))) dim += n * fixed;
    }
    return dim;
}

long chain_weight_space_dim(const SymmetricQuiver& q, const DimVector& beta, FormKind kind, const Weight& chi,
                            long d) {
    if (!q.quiver().equioriented())
        throw StructureError("chain count needs an equioriented quiver, got " + q.to_string());
    if (!is_symmetric_weight(q, chi)) return 0;
    std::vector<long> torus;
    try {
        torus = torus_degree(q, beta, chi);
    } catch (const ConditionError&) {
        return 0;
    }
    return chain_weight_space_dim(q, beta, kind, torus, d);
}

}  // namespace symquiver
