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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "symquiver/errors.hpp"
#include "symquiver/functors.hpp"
#include "symquiver/generators.hpp"
#include "symquiver/group_actions.hpp"
#include "symquiver/oracle.hpp"
#include "symquiver/schur.hpp"

using namespace symquiver;

namespace {

constexpr std::uint64_t kSeed = 20260;
constexpr std::size_t kPfaffianTrials = 200;
constexpr std::size_t kInvarianceTrials = 100;
constexpr std::size_t kVanishingSamples = 50;
constexpr long kVanishingMaxDim = 3;
constexpr std::size_t kSkewTrials = 20;
constexpr long kGenerationDegree = 4;
constexpr std::size_t kTransportTrials = 50;
constexpr long kTransportMaxDim = 3;
// wider range used only to decide which intervals can be transported at all
constexpr long kTransportScanDim = 6;
constexpr std::size_t kLrVariables = 4;
constexpr long kLrMaxSize = 4;
constexpr long kCauchyDegree = 4;
constexpr std::size_t kCauchyMaxRank = 4;
// every suite must finish within this budget
constexpr double kSuiteSeconds = 300.0;

struct Outcome {
    bool ok = true;
    std::string detail;
};

struct Instance {
    std::string quiver;
    FormKind kind;
    DimVector beta;
};

SymmetricQuiver equioriented(std::size_t m) {
    return parse_quiver("A" + std::to_string(m) + ":" + std::string(m - 1, '>'));
}

std::string describe(const Instance& in) {
    return in.quiver + " " + kind_name(in.kind) + " " + dim_to_string(in.beta);
}

bool has_simple_at(const Representation& v, std::size_t x) {
    for (const auto& iv : fingerprint(v))
        if (iv.lo == x && iv.hi == x) return true;
    return false;
}

Outcome pfaffian_laws() {
    auto r = verify_pfaffian_laws(kPfaffianTrials, kSeed);
    return {r.passed() && r.trials == kPfaffianTrials,
            std::to_string(r.trials) + " trials, " + std::to_string(r.failures.size()) + " failures"};
}

std::vector<Instance> invariance_instances() {
    const std::vector<std::vector<DimVector>> dims{
        {{1, 1}, {2, 2}, {3, 3}},
        {{1, 2, 1}, {2, 2, 2}, {2, 4, 2}},
        {{1, 2, 2, 1}, {2, 1, 1, 2}, {1, 3, 3, 1}},
        {{1, 2, 2, 2, 1}, {1, 1, 2, 1, 1}, {2, 3, 2, 3, 2}},
        {{1, 2, 3, 3, 2, 1}, {1, 3, 2, 2, 3, 1}, {2, 2, 1, 1, 2, 2}}};
    std::vector<Instance> out;
    for (std::size_t m = 2; m <= 6; ++m)
        for (const auto& beta : dims[m - 2])
            for (FormKind kind : {FormKind::Symplectic, FormKind::Orthogonal}) {
                if (m % 2 && kind == FormKind::Symplectic && beta[m / 2] % 2) continue;
                out.push_back({equioriented(m).to_string(), kind, beta});
            }
    return out;
}

// Full text of every criterion-2 report, so reruns can be compared byte for byte.
std::string invariance_reports(Outcome& out) {
    std::string text;
    std::size_t generators = 0, trials = 0, failures = 0;
    for (const auto& in : invariance_instances()) {
        auto q = parse_quiver(in.quiver);
        for (const auto& d : enumerate_generators(q, in.beta, in.kind)) {
            auto r = verify_invariance(d, q, in.beta, in.kind, kInvarianceTrials, kSeed);
            ++generators;
            trials += r.trials;
            failures += r.failures.size();
            if (!r.passed() || r.trials != kInvarianceTrials) {
                out.ok = false;
                std::cerr << r.to_text();
            }
            text += r.to_json();
        }
    }
    out.detail = std::to_string(generators) + " generators, " + std::to_string(trials) + " trials, " +
                 std::to_string(failures) + " failures";
    if (generators == 0) out.ok = false;
    return text;
}

std::vector<DimVector> euler_orthogonal_dims(const Quiver& q, const DimVector& alpha) {
    std::vector<DimVector> out;
    const std::size_t n = q.n_vertices();
    DimVector d(n, 0);
    while (true) {
        if (euler_form(q, alpha, d) == 0 && std::any_of(d.begin(), d.end(), [](long x) { return x > 0; }))
            out.push_back(d);
        std::size_t k = 0;
        while (k < n && d[k] == kVanishingMaxDim) d[k++] = 0;
        if (k == n) break;
        ++d[k];
    }
    return out;
}

// A random decomposition of d into interval modules, so that Hom(V, W) is often nonzero.
Representation random_interval_sum(const Quiver& q, const DimVector& d, Rng& rng) {
    const std::size_t n = q.n_vertices();
    DimVector left = d;
    std::vector<Interval> parts;
    while (std::any_of(left.begin(), left.end(), [](long x) { return x > 0; })) {
        std::size_t lo = 0;
        while (left[lo] == 0) ++lo;
        std::size_t hi = lo;
        while (hi + 1 < n && left[hi + 1] > 0 && rng() % 2) ++hi;
        for (std::size_t x = lo; x <= hi; ++x) --left[x];
        parts.push_back({lo + 1, hi + 1});
    }
    return from_intervals(q, parts);
}

Outcome vanishing() {
    std::size_t cases = 0, samples = 0, vanishing_count = 0;
    std::vector<std::string> bad;
    for (std::size_t n = 3; n <= 5; ++n)
        for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
            std::vector<Dir> dirs;
            for (std::size_t a = 0; a + 1 < n; ++a) dirs.push_back(mask >> a & 1 ? Dir::Left : Dir::Right);
            Quiver q(n, dirs);
            for (const auto& iv : all_intervals(n)) {
                auto v = indecomposable(q, iv.lo, iv.hi);
                auto dims = euler_orthogonal_dims(q, v.dim);
                if (dims.empty()) continue;
                ++cases;
                for (std::size_t t = 0; t < kVanishingSamples; ++t) {
                    Rng rng = trial_rng(kSeed + cases, t);
                    const DimVector& d = dims[rng() % dims.size()];
                    Representation w = t % 2 ? random_interval_sum(q, d, rng) : random_representation(q, d, rng);
                    const bool zero = schofield_eval(v, w) == 0;
                    const bool hom = hom_dim(v, w) != 0;
                    ++samples;
                    vanishing_count += zero;
                    if (zero != hom)
                        bad.push_back(q.to_string() + " V=" + interval_to_string(iv) + " W=" + dim_to_string(d));
                }
            }
        }
    std::string detail = std::to_string(cases) + " cases, " + std::to_string(samples) + " samples (" +
                         std::to_string(vanishing_count) + " vanishing), " + std::to_string(bad.size()) +
                         " mismatches";
    if (!bad.empty()) detail += "; first " + bad.front();
    return {bad.empty() && vanishing_count > 0 && vanishing_count < samples, detail};
}

Outcome skewness() {
    struct Control {
        Instance instance;
        bool expect_skew;
    };
    std::vector<Control> controls;
    for (const auto& b : std::vector<DimVector>{{1, 2, 2, 1}, {2, 2, 2, 2}, {1, 1, 1, 1}}) {
        controls.push_back({{"A4:>>>", FormKind::Orthogonal, b}, true});
        controls.push_back({{"A4:>>>", FormKind::Symplectic, b}, false});
    }
    for (const auto& b : std::vector<DimVector>{{1, 2, 2, 2, 1}, {2, 2, 2, 2, 2}, {1, 1, 2, 1, 1}}) {
        controls.push_back({{"A5:>>>>", FormKind::Symplectic, b}, true});
        controls.push_back({{"A5:>>>>", FormKind::Orthogonal, b}, false});
    }
    Outcome out;
    std::size_t conforming = 0, detected = 0;
    for (const auto& c : controls) {
        auto q = parse_quiver(c.instance.quiver);
        auto r = verify_pf_skewness(q, c.instance.beta, c.instance.kind, kSkewTrials, kSeed);
        if (c.expect_skew) {
            conforming += r.trials;
            if (!r.passed() || r.trials == 0) {
                out.ok = false;
                out.detail += " unexpected failure on " + describe(c.instance) + ";";
            }
        } else {
            detected += !r.passed();
            if (r.passed()) {
                out.ok = false;
                out.detail += " negative control not detected on " + describe(c.instance) + ";";
            }
        }
    }
    out.detail = std::to_string(conforming) + " conforming trials skew, " + std::to_string(detected) +
                 " negative controls detected" + out.detail;
    return out;
}

const std::vector<Instance>& generation_instances() {
    static const std::vector<Instance> instances{{"A2:>", FormKind::Symplectic, {1, 1}},
                                                 {"A2:>", FormKind::Orthogonal, {2, 2}},
                                                 {"A4:>>>", FormKind::Symplectic, {1, 2, 2, 1}},
                                                 {"A4:>>>", FormKind::Orthogonal, {1, 2, 2, 1}},
                                                 {"A5:>>>>", FormKind::Symplectic, {1, 2, 2, 2, 1}},
                                                 {"A5:>>>>", FormKind::Orthogonal, {1, 1, 2, 1, 1}}};
    return instances;
}

Outcome oracle_suite(const std::function<VerificationReport(const SymmetricQuiver&, const DimVector&, FormKind, long)>& run) {
    Outcome out;
    std::size_t comparisons = 0, mismatches = 0;
    for (const auto& in : generation_instances()) {
        auto r = run(parse_quiver(in.quiver), in.beta, in.kind, kGenerationDegree);
        comparisons += r.oracle_comparisons.size();
        mismatches += r.failures.size();
        if (!r.passed() || r.oracle_comparisons.empty()) {
            out.ok = false;
            std::cerr << r.to_text();
        }
    }
    out.detail = std::to_string(generation_instances().size()) + " instances, " + std::to_string(comparisons) +
                 " (weight, degree) comparisons, " + std::to_string(mismatches) + " mismatches";
    return out;
}

std::vector<DimVector> transport_dims(long top) {
    std::vector<DimVector> out;
    for (long a = 0; a <= top; ++a)
        for (long b = 0; b <= top; ++b)
            if (a || b) out.push_back({a, b, b, a});
    return out;
}

// (orientation, interval) pairs that some beta puts in reach of an admissible pair reflection.
std::set<std::string> transportable(const std::vector<DimVector>& dims) {
    std::set<std::string> out;
    for (const auto& q : symmetric_orientations(4))
        for (const auto& beta : dims)
            for (auto [sink, source] : admissible_pairs(q)) {
                DimVector next = reflect_pair_dim(q, sink, beta);
                if (std::any_of(next.begin(), next.end(), [](long v) { return v < 0; }) || next[sink - 1] == 0)
                    continue;
                for (const auto& iv : all_intervals(4)) {
                    auto v = indecomposable(q.quiver(), iv.lo, iv.hi);
                    if (euler_form(q.quiver(), v.dim, beta) == 0 && !has_simple_at(v, sink) &&
                        !has_simple_at(v, source))
                        out.insert(q.to_string() + " " + interval_to_string(iv));
                }
            }
    return out;
}

std::string transport_reports(Outcome& out) {
    std::string text;
    std::size_t reports = 0, trials = 0, skipped = 0, failures = 0;
    for (const auto& q : symmetric_orientations(4)) {
        for (const auto& beta : transport_dims(kTransportMaxDim))
            for (FormKind kind : {FormKind::Symplectic, FormKind::Orthogonal}) {
                auto t = verify_reflection_transport(q, beta, kind, kTransportTrials, kSeed);
                auto d = verify_duality(q, beta, kind, kTransportTrials, kSeed);
                for (const auto* r : {&t, &d}) {
                    ++reports;
                    trials += r->trials;
                    skipped += r->skipped;
                    failures += r->failures.size();
                    if (!r->passed()) {
                        out.ok = false;
                        std::cerr << r->to_text();
                    }
                    text += r->to_json();
                }
            }
    }
    auto covered = transportable(transport_dims(kTransportMaxDim));
    auto reachable = transportable(transport_dims(kTransportScanDim));
    out.detail = std::to_string(reports) + " reports, " + std::to_string(trials) + " trials (" +
                 std::to_string(skipped) + " skipped), " + std::to_string(failures) + " failures, " +
                 std::to_string(covered.size()) + " of " + std::to_string(reachable.size()) +
                 " transportable orientation/interval pairs covered";
    if (reports == 0 || trials == 0 || covered != reachable) out.ok = false;
    return text;
}

Outcome littlewood_richardson() {
    using testing::IntPoly;
    std::size_t products = 0, bad_products = 0, cauchy = 0, bad_cauchy = 0;
    for (long a = 0; a <= kLrMaxSize; ++a)
        for (long b = 0; b <= kLrMaxSize; ++b)
            for (const auto& lambda : partitions_of(a, kLrVariables))
                for (const auto& mu : partitions_of(b, kLrVariables)) {
                    IntPoly expected = testing::multiply(testing::schur_polynomial(lambda, kLrVariables),
                                                         testing::schur_polynomial(mu, kLrVariables));
                    IntPoly got;
                    for (long s = 0; s <= a + b; ++s) {
                        if (s != a + b) continue;
                        for (const auto& nu : partitions_of(s)) {
                            long c = lr_coeff(lambda, mu, nu);
                            if (c == 0) continue;
                            for (const auto& [e, m] : testing::schur_polynomial(nu, kLrVariables)) got[e] += c * m;
                        }
                    }
                    std::erase_if(got, [](const auto& kv) { return kv.second == 0; });
                    ++products;
                    bad_products += got != expected;
                }
    for (long d = 0; d <= kCauchyDegree; ++d)
        for (std::size_t nv = 1; nv <= kCauchyMaxRank; ++nv) {
            for (std::size_t nw = 1; nw <= kCauchyMaxRank; ++nw) {
                long total = 0;
                for (const auto& term : cauchy_tensor(d, nv, nw)) total += term.dim_v * term.dim_w;
                ++cauchy;
                bad_cauchy += total != testing::sym_power_dim(static_cast<long>(nv * nw), d);
            }
            const long n = static_cast<long>(nv);
            long sym = 0, wedge = 0;
            for (const auto& l : cauchy_sym2(d, nv)) sym += schur_dim(l, nv);
            for (const auto& l : cauchy_wedge2(d, nv)) wedge += schur_dim(l, nv);
            cauchy += 2;
            bad_cauchy += sym != testing::sym_power_dim(n * (n + 1) / 2, d);
            bad_cauchy += wedge != testing::sym_power_dim(n * (n - 1) / 2, d);
        }
    return {bad_products == 0 && bad_cauchy == 0,
            std::to_string(products) + " products (" + std::to_string(bad_products) + " wrong), " +
                std::to_string(cauchy) + " Cauchy identities (" + std::to_string(bad_cauchy) + " wrong)"};
}

}  // namespace

int main() {
    bool all = true;
    auto line = [&](int n, const std::string& name, const std::function<Outcome()>& body) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = body();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > kSuiteSeconds) {
            o.ok = false;
            o.detail += "; over the time budget";
        }
        all = all && o.ok;
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.1fs", secs);
        std::cout << "criterion " << n << " " << name << ": " << (o.ok ? "PASS" : "FAIL") << " (" << o.detail << ", "
                  << timing << ")" << std::endl;
    };

    std::string invariance_first, transport_first;
    line(1, "pfaffian laws", pfaffian_laws);
    line(2, "semi-invariance", [&] {
        Outcome o;
        invariance_first = invariance_reports(o);
        return o;
    });
    line(3, "vanishing criterion", vanishing);
    line(4, "skew-symmetry parity", skewness);
    line(5, "generation", [] { return oracle_suite(verify_generation); });
    line(6, "cross-oracle", [] { return oracle_suite(verify_cross_oracle); });
    line(7, "reflection transport", [&] {
        Outcome o;
        transport_first = transport_reports(o);
        return o;
    });
    line(8, "littlewood-richardson", littlewood_richardson);
    line(9, "determinism", [&] {
        Outcome a, b;
        std::string inv = invariance_reports(a);
        std::string tr = transport_reports(b);
        const bool same_inv = !inv.empty() && inv == invariance_first;
        const bool same_tr = !tr.empty() && tr == transport_first;
        return Outcome{same_inv && same_tr, "invariance reports " + std::string(same_inv ? "identical" : "differ") +
                                                " (" + std::to_string(inv.size()) + " bytes), transport reports " +
                                                (same_tr ? "identical" : "differ") + " (" +
                                                std::to_string(tr.size()) + " bytes)"};
    });
    std::cout << (all ? "acceptance: PASS" : "acceptance: FAIL") << std::endl;
    return all ? 0 : 1;
}
