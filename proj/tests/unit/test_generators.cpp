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

#include <gtest/gtest.h>

#include <set>

#include "symquiver/errors.hpp"
#include "symquiver/functors.hpp"
#include "symquiver/generators.hpp"
#include "symquiver/group_actions.hpp"

using namespace symquiver;

namespace {

std::vector<std::string> names(const std::vector<SemiInvariantDescriptor>& ds, std::size_t n) {
    std::vector<std::string> out;
    for (const auto& d : ds) out.push_back(d.to_string(n));
    return out;
}

SymmetricQuiver equioriented(std::size_t m) {
    return parse_quiver("A" + std::to_string(m) + ":" + std::string(m - 1, '>'));
}

// Symmetric dimension vectors with entries in 1..top, symplectic ones even at the fixed vertex.
std::vector<DimVector> symmetric_dims(std::size_t m, long top, FormKind kind) {
    std::vector<DimVector> out;
    const std::size_t h = (m + 1) / 2;
    std::vector<long> half(h, 1);
    while (true) {
        DimVector d(m);
        for (std::size_t i = 0; i < h; ++i) d[i] = d[m - 1 - i] = half[i];
        if (!(m % 2 && kind == FormKind::Symplectic && d[h - 1] % 2)) out.push_back(d);
        std::size_t k = 0;
        while (k < h && half[k] == top) half[k++] = 1;
        if (k == h) break;
        ++half[k];
    }
    return out;
}

bool proportional(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    Rational c = a.terms().begin()->second / b.terms().begin()->second;
    return a == c * b;
}

// True iff p is a scalar times a monomial in the polynomials of gens.
bool is_product_of(const Polynomial& p, const std::vector<SemiInvariantDescriptor>& gens, const SymmetricQuiver& q,
                   FormKind kind, const DimVector& beta) {
    std::vector<Polynomial> polys;
    for (const auto& g : gens) polys.push_back(symbolic_polynomial(g, q, kind, beta));
    auto rec = [&](auto&& self, std::size_t i, const Polynomial& acc) -> bool {
        if (acc.degree() == p.degree()) return proportional(p, acc);
        if (i == polys.size() || acc.degree() > p.degree()) return false;
        return self(self, i, acc * polys[i]) || self(self, i + 1, acc);
    };
    return rec(rec, 0, Polynomial::constant(p.nvars(), Rational(1)));
}

}  // namespace

TEST(Enumerate, Examples) {
    auto a4 = equioriented(4);
    EXPECT_EQ(names(enumerate_generators(a4, {1, 2, 2, 1}, FormKind::Symplectic), 4),
              (std::vector<std::string>{"cV:1,3", "cV:2,2"}));
    EXPECT_EQ(names(enumerate_generators(a4, {1, 2, 2, 1}, FormKind::Orthogonal), 4),
              (std::vector<std::string>{"pf:2"}));
    auto a2 = equioriented(2);
    auto sp = enumerate_generators(a2, {1, 1}, FormKind::Symplectic);
    ASSERT_EQ(names(sp, 2), (std::vector<std::string>{"cV:1,1"}));
    EXPECT_EQ(sp[0].degree, 1);
    EXPECT_EQ(names(enumerate_generators(a2, {2, 2}, FormKind::Orthogonal), 2), (std::vector<std::string>{"pf:1"}));
    auto pf = enumerate_generators(a4, {1, 2, 2, 1}, FormKind::Orthogonal)[0];
    EXPECT_EQ(pf.weight, (Weight{{0, Rational(1, 2), Rational(-1, 2), 0}}));
}

TEST(Enumerate, LongPathDetVanishesOnOrthogonalReps) {
    auto a4 = equioriented(4);
    EXPECT_TRUE(symbolic_polynomial(parse_descriptor("cV:1,3", a4), a4, FormKind::Orthogonal, {1, 2, 2, 1}).is_zero());
}

TEST(Enumerate, Errors) {
    const DimVector beta{1, 2, 2, 1};
    EXPECT_THROW(enumerate_generators(parse_quiver("A4:<><"), beta, FormKind::Symplectic), InputError);
    const DimVector lopsided{1, 2, 3, 1};
    EXPECT_THROW(enumerate_generators(equioriented(4), lopsided, FormKind::Symplectic), InputError);
    const DimVector odd{1, 1, 1};
    EXPECT_THROW(enumerate_generators(equioriented(3), odd, FormKind::Symplectic), InputError);
}

TEST(Enumerate, WeightsDistinctAndIndependent) {
    for (std::size_t m = 2; m <= 6; ++m)
        for (FormKind kind : {FormKind::Orthogonal, FormKind::Symplectic}) {
            auto q = equioriented(m);
            for (const auto& beta : symmetric_dims(m, 3, kind)) {
                auto gens = enumerate_generators(q, beta, kind);
                std::set<Weight> seen;
                RatMatrix rows(gens.size(), m);
                for (std::size_t i = 0; i < gens.size(); ++i) {
                    EXPECT_TRUE(seen.insert(gens[i].weight).second) << q.to_string() << " " << dim_to_string(beta);
                    for (std::size_t x = 0; x < m; ++x) rows(i, x) = gens[i].weight.values[x];
                }
                EXPECT_EQ(rank(rows), gens.size()) << q.to_string() << " " << dim_to_string(beta);
            }
        }
}

TEST(Enumerate, DegreesAndPfaffianStructure) {
    for (std::size_t m = 2; m <= 6; ++m)
        for (FormKind kind : {FormKind::Orthogonal, FormKind::Symplectic}) {
            auto q = equioriented(m);
            for (const auto& beta : symmetric_dims(m, 2, kind))
                for (const auto& d : enumerate_generators(q, beta, kind)) {
                    Polynomial p = symbolic_polynomial(d, q, kind, beta);
                    EXPECT_FALSE(p.is_zero());
                    EXPECT_TRUE(p.is_homogeneous());
                    EXPECT_EQ(p.degree(), d.degree) << q.to_string() << " " << d.to_string(m);
                    if (d.kind != DescriptorKind::Pf) continue;
                    auto v = indecomposable(q.quiver(), d.interval.lo, d.interval.hi);
                    Rng rng = trial_rng(m, 0);
                    RatMatrix a = pf_matrix(v, random_symmetric_rep(q, kind, beta, rng));
                    EXPECT_EQ(a.transpose(), -a) << q.to_string() << " " << d.to_string(m);
                }
        }
}

TEST(Reduce, Cases) {
    auto a6 = equioriented(6);
    auto strict = reduce_dominated(a6, {1, 3, 2, 2, 3, 1});
    EXPECT_EQ(strict.quiver.to_string(), "A4:>>>");
    EXPECT_EQ(strict.dim, (DimVector{1, 2, 2, 1}));
    EXPECT_EQ(strict.stripped, (std::vector<std::size_t>{2}));
    EXPECT_EQ(strict.original_vertex, (std::vector<std::size_t>{1, 3, 4, 6}));
    EXPECT_TRUE(strict.extracted.empty());

    auto equal = reduce_dominated(a6, {1, 2, 2, 2, 2, 1});
    EXPECT_EQ(equal.dim, (DimVector{1, 2, 2, 1}));
    EXPECT_EQ(names(equal.extracted, 6), (std::vector<std::string>{"cV:2,2"}));

    auto none = reduce_dominated(a6, {1, 2, 3, 3, 2, 1});
    EXPECT_EQ(none.quiver, a6);
    EXPECT_EQ(none.dim, (DimVector{1, 2, 3, 3, 2, 1}));
    EXPECT_TRUE(none.stripped.empty());
}

TEST(Reduce, PullbackMatchesDirectEnumeration) {
    for (std::size_t m = 4; m <= 6; ++m)
        for (FormKind kind : {FormKind::Orthogonal, FormKind::Symplectic}) {
            auto q = equioriented(m);
            for (const auto& beta : symmetric_dims(m, 3, kind)) {
                auto r = reduce_dominated(q, beta);
                std::vector<SemiInvariantDescriptor> combined = r.extracted;
                for (const auto& d : enumerate_generators(r.quiver, r.dim, kind)) combined.push_back(pullback(r, q, d));
                auto direct = enumerate_generators(q, beta, kind);
                auto combined_names = names(combined, m), direct_names = names(direct, m);
                for (const auto& name : direct_names)
                    EXPECT_NE(std::find(combined_names.begin(), combined_names.end(), name), combined_names.end())
                        << name << " on " << q.to_string() << " " << dim_to_string(beta) << " " << kind_name(kind);
                // anything else must already lie in the algebra generated by the direct list
                for (const auto& d : combined) {
                    if (std::find(direct_names.begin(), direct_names.end(), d.to_string(m)) != direct_names.end()) continue;
                    EXPECT_TRUE(is_product_of(symbolic_polynomial(d, q, kind, beta), direct, q, kind, beta))
                        << d.to_string(m) << " on " << q.to_string() << " " << dim_to_string(beta);
                }
            }
        }
}

TEST(Transport, Examples) {
    auto a4 = equioriented(4);
    auto c13 = parse_descriptor("cV:1,3", a4);
    auto same = transport_generator(c13, a4, {1, 2, 2, 1}, {});
    ASSERT_TRUE(same.descriptor);
    EXPECT_EQ(same.descriptor->to_string(4), "cV:1,3");
    EXPECT_EQ(same.quiver, a4);

    auto moved = transport_generator(c13, a4, {1, 2, 2, 1}, {4});
    ASSERT_TRUE(moved.descriptor);
    EXPECT_EQ(moved.quiver.to_string(), "A4:<><");
    auto reflected = reflect_pair_plus(indecomposable(a4.quiver(), 1, 3), 4).representation;
    EXPECT_EQ(fingerprint(reflected), (std::vector<Interval>{moved.descriptor->interval}));
    EXPECT_EQ(moved.descriptor->to_string(4), "cV:2,4");
    EXPECT_EQ(transport_generator(c13, a4, {1, 2, 2, 1}, {1}).descriptor->to_string(4), "cV:2,4");
    EXPECT_EQ(moved.steps.size(), 1u);

    auto gone = transport_generator(parse_descriptor("cV:1,1", a4), a4, {1, 2, 2, 1}, {4});
    EXPECT_FALSE(gone.descriptor);

    const DimVector negative{2, 1, 1, 2};
    EXPECT_THROW(transport_generator(c13, a4, negative, {4}), Error);
    EXPECT_THROW(transport_generator(c13, a4, {1, 2, 2, 1}, {2}), Error);
}

TEST(Transport, PreservesSemiInvariance) {
    auto a4 = equioriented(4);
    for (FormKind kind : {FormKind::Symplectic, FormKind::Orthogonal}) {
        DimVector beta{1, 2, 2, 1};
        for (const auto& d : enumerate_generators(a4, beta, kind)) {
            auto t = transport_generator(d, a4, beta, {4});
            if (!t.descriptor) continue;
            for (std::uint64_t k = 0; k < 10; ++k) {
                Rng rng = trial_rng(70, k);
                auto sw = random_symmetric_rep(t.quiver, kind, t.dim, rng);
                auto g = sample_group_element(t.quiver, kind, t.dim, rng);
                EXPECT_EQ(evaluate(*t.descriptor, act(g, sw)) * weight_character(g, t.descriptor->weight),
                          evaluate(*t.descriptor, sw));
            }
            EXPECT_EQ(symbolic_polynomial(*t.descriptor, t.quiver, kind, t.dim).degree(), t.descriptor->degree);
        }
    }
}
