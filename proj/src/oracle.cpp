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

#include "symquiver/oracle.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

#include "json.hpp"
#include "symquiver/errors.hpp"
#include "symquiver/functors.hpp"
#include "symquiver/generators.hpp"
#include "symquiver/group_actions.hpp"
#include "symquiver/schur.hpp"

namespace symquiver {

namespace {

std::string torus_to_string(const std::vector<long>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s + ")";
}

std::size_t binomial(std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > 100 * kLieMonomialGuard) return r;
    }
    return r;
}

// Scalar-torus degree of each coordinate, one entry per Q0+ vertex.
std::vector<std::vector<long>> coordinate_torus(const SymmetricQuiver& q, const std::vector<Coordinate>& coords) {
    const auto plus = q.plus_vertices();
    const Quiver& p = q.quiver();
    std::vector<std::vector<long>> out;
    for (const auto& c : coords) {
        std::vector<long> w(plus.size(), 0);
        for (std::size_t k = 0; k < plus.size(); ++k) {
            std::size_t x = plus[k], sx = q.sigma_vertex(x);
            std::size_t h = p.head(c.arrow), t = p.tail(c.arrow);
            w[k] = (h == x) - (h == sx) - (t == x) + (t == sx);
        }
        out.push_back(w);
    }
    return out;
}

std::vector<long> monomial_torus(const Monomial& m, const std::vector<std::vector<long>>& ct, std::size_t h) {
    std::vector<long> d(h, 0);
    for (std::size_t k = 0; k < m.size(); ++k)
        for (std::size_t i = 0; i < h; ++i) d[i] += static_cast<long>(m[k]) * ct[k][i];
    return d;
}

// Derived Lie algebra of the structure group, one matrix per vertex.
std::vector<std::vector<RatMatrix>> derivation_basis(const SymmetricQuiver& q, FormKind kind, const DimVector& beta) {
    const std::size_t m = q.n_vertices();
    auto zero = [&] {
        std::vector<RatMatrix> xs;
        for (std::size_t v = 1; v <= m; ++v) {
            auto n = static_cast<std::size_t>(beta[v - 1]);
            xs.push_back(RatMatrix(n, n));
        }
        return xs;
    };
    std::vector<std::vector<RatMatrix>> out;
    for (std::size_t x : q.plus_vertices()) {
        auto n = static_cast<std::size_t>(beta[x - 1]);
        const std::size_t sx = q.sigma_vertex(x);
        auto push = [&](RatMatrix e) {
            auto xs = zero();
            xs[sx - 1] = Rational(-1) * e.transpose();
            xs[x - 1] = std::move(e);
            out.push_back(std::move(xs));
        };
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                RatMatrix e(n, n);
                e(i, j) = 1;
                push(e);
            }
        for (std::size_t i = 0; i + 1 < n; ++i) {
            RatMatrix e(n, n);
            e(i, i) = 1;
            e(i + 1, i + 1) = -1;
            push(e);
        }
    }
    if (auto f = q.fixed_vertex()) {
        auto n = static_cast<std::size_t>(beta[*f - 1]);
        if (kind == FormKind::Orthogonal) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) {
                    auto xs = zero();
                    xs[*f - 1](i, j) = 1;
                    xs[*f - 1](j, i) = -1;
                    out.push_back(std::move(xs));
                }
        } else {
            RatMatrix jm = gram_block(q, kind, *f, static_cast<long>(n));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j) {
                    RatMatrix s(n, n);
                    s(i, j) = 1;
                    s(j, i) = 1;
                    auto xs = zero();
                    xs[*f - 1] = jm * s;
                    out.push_back(std::move(xs));
                }
        }
    }
    return out;
}

struct SparseEntry {
    std::size_t k;  // output coordinate
    std::size_t l;  // input coordinate
    Rational c;
};

// Linear action of each derivation on the coordinate space.
std::vector<std::vector<SparseEntry>> derivation_actions(const SymmetricQuiver& q, FormKind kind,
                                                         const DimVector& beta) {
    auto coords = coordinates(q, kind, beta);
    const std::size_t nc = coords.size();
    const Quiver& p = q.quiver();
    std::vector<SymmetricRepresentation> units;
    for (std::size_t l = 0; l < nc; ++l) {
        std::vector<Rational> pt(nc);
        pt[l] = 1;
        units.push_back(rep_from_point(q, kind, beta, pt));
    }
    std::vector<std::vector<SparseEntry>> out;
    for (const auto& xs : derivation_basis(q, kind, beta)) {
        std::vector<SparseEntry> entries;
        for (std::size_t l = 0; l < nc; ++l) {
            SymmetricRepresentation d = units[l];
            for (auto& [a, mat] : d.maps) mat = xs[p.head(a) - 1] * mat - mat * xs[p.tail(a) - 1];
            auto pt = point_of(d);
            for (std::size_t k = 0; k < nc; ++k)
                if (pt[k] != 0) entries.push_back({k, l, pt[k]});
        }
        out.push_back(std::move(entries));
    }
    return out;
}

using Groups = std::map<std::vector<long>, std::vector<Monomial>>;

Groups torus_groups(const SymmetricQuiver& q, FormKind kind, const DimVector& beta, long d) {
    auto coords = coordinates(q, kind, beta);
    auto ct = coordinate_torus(q, coords);
    const std::size_t h = q.plus_vertices().size();
    Groups g;
    for (const auto& m : monomials_of_degree(coords.size(), static_cast<unsigned>(d)))
        g[monomial_torus(m, ct, h)].push_back(m);
    return g;
}

// Dimension of every torus group at degree d, zeros included.
std::map<std::vector<long>, long> lie_table_all(const SymmetricQuiver& q, const DimVector& beta, FormKind kind,
                                                long d) {
    if (!q.is_symmetric(beta)) throw InputError("dimension vector (" + dim_to_string(beta) + ") is not symmetric");
    if (d < 0) throw InputError("degree must be nonnegative");
    const std::size_t nc = coordinates(q, kind, beta).size();
    if (nc > 0 && d > 0 && binomial(nc + static_cast<std::size_t>(d) - 1, static_cast<std::size_t>(d)) > kLieMonomialGuard)
        throw ConditionError("size guard: " + std::to_string(nc) + " coordinates in degree " + std::to_string(d) +
                             " exceed " + std::to_string(kLieMonomialGuard) + " monomials");
    auto actions = derivation_actions(q, kind, beta);
    std::map<std::vector<long>, long> out;
    for (const auto& [torus, monos] : torus_groups(q, kind, beta, d)) {
        std::map<Monomial, std::size_t, GradedLex> col;
        for (std::size_t i = 0; i < monos.size(); ++i) col[monos[i]] = i;
        std::vector<std::map<std::size_t, Rational>> rows;
        for (const auto& act : actions) {
            std::map<Monomial, std::map<std::size_t, Rational>, GradedLex> image;
            for (std::size_t i = 0; i < monos.size(); ++i) {
                const Monomial& m = monos[i];
                for (const auto& e : act) {
                    if (m[e.k] == 0) continue;
                    Monomial out_m = m;
                    --out_m[e.k];
                    ++out_m[e.l];
                    image[out_m][i] += e.c * static_cast<long>(m[e.k]);
                }
            }
            for (auto& [om, row] : image) {
                std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
                if (!row.empty()) rows.push_back(std::move(row));
            }
        }
        RatMatrix mat(rows.size(), monos.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (const auto& [c, v] : rows[r]) mat(r, c) = v;
        out[torus] = static_cast<long>(monos.size() - (rows.empty() ? 0 : rank(mat)));
    }
    return out;
}

// Rank of the degree-d span of generator monomials, per torus degree.
std::map<std::vector<long>, long> generated_table(const SymmetricQuiver& q, const DimVector& beta, FormKind kind,
                                                  const std::vector<Polynomial>& gens, long d) {
    auto coords = coordinates(q, kind, beta);
    auto ct = coordinate_torus(q, coords);
    const std::size_t h = q.plus_vertices().size();
    std::map<std::vector<long>, std::vector<Polynomial>> products;
    std::vector<long> degs;
    for (const auto& g : gens) degs.push_back(g.degree());
    std::vector<unsigned> exps(gens.size(), 0);
    std::function<void(std::size_t, long, Polynomial)> rec = [&](std::size_t i, long left, Polynomial acc) {
        if (i == gens.size()) {
            if (left == 0 && !acc.is_zero()) products[monomial_torus(acc.terms().begin()->first, ct, h)].push_back(acc);
            return;
        }
        Polynomial cur = acc;
        for (long used = 0; used <= left; used += degs[i]) {
            rec(i + 1, left - used, cur);
            if (degs[i] <= 0) break;
            cur = cur * gens[i];
        }
    };
    rec(0, d, Polynomial::constant(coords.size(), Rational(1)));
    std::map<std::vector<long>, long> out;
    for (const auto& [torus, polys] : products) {
        std::map<Monomial, std::size_t, GradedLex> idx;
        for (const auto& p : polys)
            for (const auto& [m, c] : p.terms()) idx.emplace(m, idx.size());
        RatMatrix mat(polys.size(), idx.size());
        for (std::size_t r = 0; r < polys.size(); ++r)
            for (const auto& [m, c] : polys[r].terms()) mat(r, idx.at(m)) = c;
        out[torus] = static_cast<long>(rank(mat));
    }
    return out;
}

void check_rep_inputs(const SymmetricQuiver& q, const DimVector& beta, FormKind kind) {
    if (beta.size() != q.n_vertices())
        throw InputError("dimension vector needs " + std::to_string(q.n_vertices()) + " entries");
    if (!q.is_symmetric(beta)) throw InputError("dimension vector (" + dim_to_string(beta) + ") is not symmetric");
    if (kind == FormKind::Symplectic)
        if (auto f = q.fixed_vertex(); f && beta[*f - 1] % 2)
            throw InputError("symplectic kind needs an even dimension at the fixed vertex " + std::to_string(*f));
}

std::string subject_of(const std::string& what, const SymmetricQuiver& q, const DimVector& beta, FormKind kind) {
    return what + " " + q.to_string() + " beta=(" + dim_to_string(beta) + ") " + kind_name(kind);
}

// Shared loop for the ratio-constancy checks.
class RatioTracker {
public:
    RatioTracker(VerificationReport& r, std::string label) : report_(r), label_(std::move(label)) {}
    void add(std::size_t trial, const Rational& num, const Rational& den) {
        ++report_.trials;
        if (den == 0 && num == 0) {
            ++report_.skipped;
            return;
        }
        if (den == 0 || num == 0) {
            report_.failures.push_back({label_ + " trial " + std::to_string(trial), "both values nonzero",
                                        to_string(num) + " / " + to_string(den)});
            return;
        }
        Rational k = num / den;
        if (!ratio_) {
            ratio_ = k;
        } else if (*ratio_ != k) {
            report_.failures.push_back({label_ + " trial " + std::to_string(trial), to_string(*ratio_), to_string(k)});
        }
    }

private:
    VerificationReport& report_;
    std::string label_;
    std::optional<Rational> ratio_;
};

std::uint64_t case_seed(std::uint64_t seed, std::size_t index) { return seed + 0x1000003ULL * (index + 1); }

}  // namespace

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    os << "subject: " << subject << "\n";
    os << "trials: " << trials << "\n";
    os << "skipped: " << skipped << "\n";
    for (const auto& c : oracle_comparisons)
        os << "compare weight=" << c.weight << " degree=" << c.degree << " lie=" << c.oracle_dim
           << " " << reference_name << "=" << c.generated_dim << (c.oracle_dim == c.generated_dim ? "" : "  MISMATCH") << "\n";
    for (const auto& f : failures)
        os << "failure input=" << f.input << " expected=" << f.expected << " actual=" << f.actual << "\n";
    os << "result: " << (passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["subject"] = subject;
    j["trials"] = trials;
    j["skipped"] = skipped;
    j["passed"] = passed();
    j["failures"] = nlohmann::ordered_json::array();
    for (const auto& f : failures)
        j["failures"].push_back({{"input", f.input}, {"expected", f.expected}, {"actual", f.actual}});
    j["oracle_comparisons"] = nlohmann::ordered_json::array();
    for (const auto& c : oracle_comparisons)
        j["oracle_comparisons"].push_back({{"weight", c.weight},
                                           {"degree", c.degree},
                                           {"oracle_dim", c.oracle_dim},
                                           {"generated_dim", c.generated_dim}});
    return j.dump(2);
}

Weight weight_from_torus(const SymmetricQuiver& q, const DimVector& beta, const std::vector<long>& torus) {
    const auto plus = q.plus_vertices();
    if (torus.size() != plus.size()) throw DimensionError("torus degree needs one entry per Q0+ vertex");
    Weight w{std::vector<Rational>(q.n_vertices(), Rational(0))};
    for (std::size_t k = 0; k < plus.size(); ++k) {
        long b = beta.at(plus[k] - 1);
        if (b == 0) {
            if (torus[k] != 0) throw ConditionError("nonzero torus degree at a zero-dimensional vertex");
            continue;
        }
        Rational half(-torus[k], 2 * b);
        half.canonicalize();
        w.values[plus[k] - 1] = half;
        w.values[q.sigma_vertex(plus[k]) - 1] = -half;
    }
    return w;
}

std::map<std::vector<long>, long> lie_weight_table(const SymmetricQuiver& q, const DimVector& beta, FormKind kind,
                                                   long d) {
    auto all = lie_table_all(q, beta, kind, d);
    std::erase_if(all, [](const auto& kv) { return kv.second == 0; });
    return all;
}

long lie_weight_space_dim(const SymmetricQuiver& q, const DimVector& beta, FormKind kind, const Weight& chi, long d) {
    if (!is_symmetric_weight(q, chi)) return 0;
    std::vector<long> torus;
    try {
        torus = torus_degree(q, beta, chi);
    } catch (const ConditionError&) {
        return 0;
    }
    auto table = lie_weight_table(q, beta, kind, d);
    auto it = table.find(torus);
    return it == table.end() ? 0 : it->second;
}

VerificationReport verify_invariance(const SemiInvariantDescriptor& descr, const SymmetricQuiver& q,
                                     const DimVector& beta, FormKind kind, std::size_t trials, std::uint64_t seed) {
    check_rep_inputs(q, beta, kind);
    VerificationReport r;
    r.subject = subject_of("invariance " + descr.to_string(q.n_vertices()) + " weight=" + descr.weight.to_string(), q,
                           beta, kind);
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng = trial_rng(seed, t);
        GroupElement g = sample_group_element(q, kind, beta, rng);
        SymmetricRepresentation w = random_symmetric_rep(q, kind, beta, rng);
        ++r.trials;
        try {
            Rational before = evaluate(descr, w);
            Rational after = evaluate(descr, act(g, w)) * weight_character(g, descr.weight);
            if (before != after)
                r.failures.push_back({"trial " + std::to_string(t), to_string(before), to_string(after)});
        } catch (const ConditionError& e) {
            r.failures.push_back({"trial " + std::to_string(t), "a value", e.what()});
        }
    }
    return r;
}

VerificationReport verify_generation(const SymmetricQuiver& q, const DimVector& beta, FormKind kind, long d_max) {
    check_rep_inputs(q, beta, kind);
    VerificationReport r;
    r.subject = subject_of("generation", q, beta, kind) + " dmax=" + std::to_string(d_max);
    std::vector<Polynomial> gens;
    for (const auto& d : enumerate_generators(q, beta, kind)) gens.push_back(symbolic_polynomial(d, q, kind, beta));
    for (long d = 1; d <= d_max; ++d) {
        auto oracle = lie_weight_table(q, beta, kind, d);
        auto generated = generated_table(q, beta, kind, gens, d);
        std::set<std::vector<long>> keys;
        for (const auto& [k, v] : oracle) keys.insert(k);
        for (const auto& [k, v] : generated) keys.insert(k);
        for (const auto& k : keys) {
            long a = oracle.count(k) ? oracle.at(k) : 0;
            long b = generated.count(k) ? generated.at(k) : 0;
            std::string w = weight_from_torus(q, beta, k).to_string();
            r.oracle_comparisons.push_back({w, d, a, b});
            ++r.trials;
            if (a != b)
                r.failures.push_back({"degree " + std::to_string(d) + " torus " + torus_to_string(k) + " weight " + w,
                                      std::to_string(a), std::to_string(b)});
        }
    }
    return r;
}

VerificationReport verify_cross_oracle(const SymmetricQuiver& q, const DimVector& beta, FormKind kind, long d_max) {
    check_rep_inputs(q, beta, kind);
    VerificationReport r;
    r.subject = subject_of("cross-oracle", q, beta, kind) + " dmax=" + std::to_string(d_max);
    r.reference_name = "chain";
    for (long d = 1; d <= d_max; ++d)
        for (const auto& [k, lie] : lie_table_all(q, beta, kind, d)) {
            long chain = chain_weight_space_dim(q, beta, kind, k, d);
            std::string w = weight_from_torus(q, beta, k).to_string();
            r.oracle_comparisons.push_back({w, d, lie, chain});
            ++r.trials;
            if (lie != chain)
                r.failures.push_back({"degree " + std::to_string(d) + " torus " + torus_to_string(k) + " weight " + w,
                                      std::to_string(lie), std::to_string(chain)});
        }
    return r;
}

VerificationReport verify_reflection_transport(const SymmetricQuiver& q, const DimVector& beta, FormKind kind,
                                               std::size_t trials, std::uint64_t seed) {
    check_rep_inputs(q, beta, kind);
    auto pairs = admissible_pairs(q);
    if (pairs.empty()) throw InputError(q.to_string() + " has no admissible sink-source pair");
    VerificationReport r;
    r.subject = subject_of("transport", q, beta, kind);
    const Quiver& p = q.quiver();
    std::size_t case_index = 0;
    for (auto [sink, source] : pairs) {
        DimVector next = reflect_pair_dim(q, sink, beta);
        // the ring map along the pair needs c_x(beta)(x) > 0
        if (std::any_of(next.begin(), next.end(), [](long v) { return v < 0; }) || next[sink - 1] == 0) continue;
        for (const auto& iv : all_intervals(q.n_vertices())) {
            Representation v = indecomposable(p, iv.lo, iv.hi);
            if (euler_form(p, v.dim, beta) != 0) continue;
            if (iv.lo == iv.hi && (iv.lo == sink || iv.lo == source)) continue;
            Representation cv = reflect_pair_plus(v, sink).representation;
            std::string label = "pair (" + std::to_string(sink) + "," + std::to_string(source) + ") V=" +
                                interval_to_string(iv) + " C+V=" + fingerprint_to_string(fingerprint(cv));
            RatioTracker tracker(r, label);
            const std::uint64_t s = case_seed(seed, case_index++);
            for (std::size_t t = 0; t < trials; ++t) {
                Rng rng = trial_rng(s, t);
                SymmetricRepresentation w = random_symmetric_rep(q, kind, beta, rng);
                SymmetricRepresentation cw = reflect_pair_symmetric(w, sink);
                if (cw.dim != next) {
                    // W has a simple summand at the pair, so C+ drops dimension
                    ++r.trials;
                    ++r.skipped;
                    continue;
                }
                tracker.add(t, schofield_eval(v, unfold(w)), schofield_eval(cv, unfold(cw)));
            }
        }
    }
    return r;
}

VerificationReport verify_duality(const SymmetricQuiver& q, const DimVector& beta, FormKind kind,
                                  std::size_t trials, std::uint64_t seed) {
    check_rep_inputs(q, beta, kind);
    VerificationReport r;
    r.subject = subject_of("duality", q, beta, kind);
    const Quiver& p = q.quiver();
    std::size_t case_index = 0;
    for (const auto& iv : all_intervals(q.n_vertices())) {
        Representation v = indecomposable(p, iv.lo, iv.hi);
        if (euler_form(p, v.dim, beta) != 0) continue;
        Representation dv = coxeter_minus(dualize(v));
        RatioTracker tracker(r, "V=" + interval_to_string(iv) + " C-nablaV=" + fingerprint_to_string(fingerprint(dv)));
        const std::uint64_t s = case_seed(seed, case_index++);
        for (std::size_t t = 0; t < trials; ++t) {
            Rng rng = trial_rng(s, t);
            Representation w = unfold(random_symmetric_rep(q, kind, beta, rng));
            try {
                tracker.add(t, schofield_eval(v, w), schofield_eval(dv, w));
            } catch (const ConditionError& e) {
                ++r.trials;
                r.failures.push_back({"V=" + interval_to_string(iv) + " trial " + std::to_string(t), "a value",
                                      e.what()});
            }
        }
    }
    return r;
}

VerificationReport verify_pf_skewness(const SymmetricQuiver& q, const DimVector& beta, FormKind kind,
                                      std::size_t trials, std::uint64_t seed) {
    check_rep_inputs(q, beta, kind);
    VerificationReport r;
    r.subject = subject_of("pf-skewness", q, beta, kind);
    const Quiver& p = q.quiver();
    std::size_t case_index = 0;
    for (const auto& iv : all_intervals(q.n_vertices())) {
        Representation v = indecomposable(p, iv.lo, iv.hi);
        if (euler_form(p, v.dim, beta) != 0 || !is_pf_admissible(v)) continue;
        const std::uint64_t s = case_seed(seed, case_index++);
        for (std::size_t t = 0; t < trials; ++t) {
            Rng rng = trial_rng(s, t);
            RatMatrix m = pf_matrix(v, random_symmetric_rep(q, kind, beta, rng));
            ++r.trials;
            if (!m.is_skew())
                r.failures.push_back({"V=" + interval_to_string(iv) + " trial " + std::to_string(t),
                                      "skew-symmetric", m.to_string()});
        }
    }
    return r;
}

VerificationReport verify_pfaffian_laws(std::size_t trials, std::uint64_t seed) {
    VerificationReport r;
    r.subject = "pfaffian laws on random skew matrices of sizes 2, 4, 6";
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng = trial_rng(seed, t);
        const std::size_t n = 2 * (t % 3 + 1);
        RatMatrix a = random_skew(n, rng);
        RatMatrix b = random_matrix(n, n, rng);
        ++r.trials;
        Rational pf = pfaffian(a);
        if (det(a) != pf * pf)
            r.failures.push_back({"trial " + std::to_string(t) + " A=" + a.to_string(), to_string(det(a)),
                                  "Pf(A)^2 = " + to_string(pf * pf)});
        Rational lhs = pfaffian(b * a * b.transpose());
        if (lhs != det(b) * pf)
            r.failures.push_back({"trial " + std::to_string(t) + " A=" + a.to_string() + " B=" + b.to_string(),
                                  to_string(det(b) * pf), to_string(lhs)});
    }
    return r;
}

}  // namespace symquiver
