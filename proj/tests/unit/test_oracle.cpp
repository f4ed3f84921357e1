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

#include "json.hpp"
#include "symquiver/errors.hpp"
#include "symquiver/generators.hpp"
#include "symquiver/oracle.hpp"
#include "symquiver/schur.hpp"

using namespace symquiver;

TEST(LieOracle, Examples) {
    auto a2 = parse_quiver("A2:>");
    auto det = parse_descriptor("cV:1,1", a2);
    EXPECT_EQ(lie_weight_space_dim(a2, {1, 1}, FormKind::Symplectic, det.weight, 1), 1);
    EXPECT_EQ(lie_weight_space_dim(a2, {1, 1}, FormKind::Symplectic, det.weight, 2), 0);
    EXPECT_EQ(lie_weight_space_dim(a2, {1, 1}, FormKind::Symplectic, scale(det.weight, 3), 3), 1);
    for (long d = 1; d <= 3; ++d) {
        auto table = lie_weight_table(a2, {2, 2}, FormKind::Orthogonal, d);
        ASSERT_EQ(table.size(), 1u);
        EXPECT_EQ(table.begin()->second, 1);
    }
    auto a3 = parse_quiver("A3:>>");
    EXPECT_EQ(lie_weight_space_dim(a3, {1, 2, 1}, FormKind::Symplectic, Weight{{0, 1, 0}}, 1), 0);
}

TEST(LieOracle, TorusWeightsRoundTrip) {
    auto q = parse_quiver("A5:>>>>");
    DimVector beta{1, 2, 2, 2, 1};
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b) {
            std::vector<long> t{2 * a, 4 * b};
            Weight w = weight_from_torus(q, beta, t);
            EXPECT_TRUE(is_symmetric_weight(q, w));
            EXPECT_EQ(torus_degree(q, beta, w), t);
        }
}

TEST(LieOracle, GuardThrows) {
    auto q = parse_quiver("A6:>>>>>");
    EXPECT_THROW(lie_weight_table(q, {3, 3, 3, 3, 3, 3}, FormKind::Symplectic, 4), ConditionError);
}

TEST(LieOracle, AgreesWithChainCount) {
    auto a4 = parse_quiver("A4:>>>");
    auto r = verify_cross_oracle(a4, {1, 2, 2, 1}, FormKind::Symplectic, 4);
    EXPECT_TRUE(r.passed()) << r.to_text();
    EXPECT_FALSE(r.oracle_comparisons.empty());
    for (const auto& c : r.oracle_comparisons) EXPECT_EQ(c.oracle_dim, c.generated_dim);
    auto c13 = parse_descriptor("cV:1,3", a4);
    EXPECT_EQ(lie_weight_space_dim(a4, {1, 2, 2, 1}, FormKind::Symplectic, c13.weight, 3),
              chain_weight_space_dim(a4, {1, 2, 2, 1}, FormKind::Symplectic, c13.weight, 3));
}

TEST(Invariance, GeneratorsPassAndCorruptionFails) {
    auto a4 = parse_quiver("A4:>>>");
    DimVector beta{1, 2, 2, 1};
    for (const auto& d : enumerate_generators(a4, beta, FormKind::Symplectic)) {
        auto r = verify_invariance(d, a4, beta, FormKind::Symplectic, 100, 3);
        EXPECT_TRUE(r.passed()) << r.to_text();
        EXPECT_EQ(r.trials, 100u);
        auto bad = d;
        bad.weight = add(bad.weight, Weight{{1, 0, 0, -1}});
        auto rb = verify_invariance(bad, a4, beta, FormKind::Symplectic, 100, 3);
        EXPECT_FALSE(rb.passed());
        ASSERT_FALSE(rb.failures.empty());
        EXPECT_FALSE(rb.failures[0].input.empty());
    }
    auto zero = verify_invariance(parse_descriptor("cV:2,2", a4), a4, beta, FormKind::Symplectic, 0, 3);
    EXPECT_TRUE(zero.passed());
    EXPECT_EQ(zero.trials, 0u);
}

TEST(Generation, SmallRings) {
    auto a2 = parse_quiver("A2:>");
    EXPECT_TRUE(verify_generation(a2, {1, 1}, FormKind::Symplectic, 3).passed());
    EXPECT_TRUE(verify_generation(a2, {2, 2}, FormKind::Orthogonal, 2).passed());
    auto r = verify_generation(parse_quiver("A4:>>>"), {1, 2, 2, 1}, FormKind::Symplectic, 4);
    EXPECT_TRUE(r.passed()) << r.to_text();
    EXPECT_FALSE(r.oracle_comparisons.empty());
}

TEST(Transport, ConstantRatios) {
    for (const auto& q : symmetric_orientations(4)) {
        auto t = verify_reflection_transport(q, {1, 2, 2, 1}, FormKind::Symplectic, 20, 5);
        EXPECT_TRUE(t.passed()) << t.to_text();
        auto d = verify_duality(q, {1, 2, 2, 1}, FormKind::Symplectic, 20, 5);
        EXPECT_TRUE(d.passed()) << d.to_text();
    }
}

TEST(Skewness, PositiveAndNegativeControls) {
    auto a4 = parse_quiver("A4:>>>");
    EXPECT_TRUE(verify_pf_skewness(a4, {1, 2, 2, 1}, FormKind::Orthogonal, 10, 1).passed());
    EXPECT_FALSE(verify_pf_skewness(a4, {1, 2, 2, 1}, FormKind::Symplectic, 10, 1).passed());
}

TEST(PfaffianLaws, Pass) {
    auto r = verify_pfaffian_laws(30, 2);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.trials, 30u);
}

TEST(Reports, DeterministicTextAndJson) {
    auto a4 = parse_quiver("A4:>>>");
    auto d = parse_descriptor("cV:1,3", a4);
    auto a = verify_invariance(d, a4, {1, 2, 2, 1}, FormKind::Symplectic, 20, 9);
    auto b = verify_invariance(d, a4, {1, 2, 2, 1}, FormKind::Symplectic, 20, 9);
    EXPECT_EQ(a.to_text(), b.to_text());
    EXPECT_EQ(a.to_json(), b.to_json());
    EXPECT_NE(a.to_text().find("result: PASS"), std::string::npos);
    auto j = nlohmann::json::parse(a.to_json());
    EXPECT_EQ(j["trials"], 20);
    EXPECT_TRUE(j["failures"].is_array());

    auto g = verify_generation(parse_quiver("A2:>"), {1, 1}, FormKind::Symplectic, 2);
    auto jg = nlohmann::json::parse(g.to_json());
    ASSERT_TRUE(jg["oracle_comparisons"].is_array());
    EXPECT_EQ(jg["oracle_comparisons"].size(), g.oracle_comparisons.size());
}
