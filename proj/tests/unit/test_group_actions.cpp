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

#include "symquiver/errors.hpp"
#include "symquiver/group_actions.hpp"
#include "symquiver/semiinvariants.hpp"

using namespace symquiver;

TEST(Sampling, SpecialLinear) {
    Rng rng = trial_rng(1, 0);
    EXPECT_EQ(sample_sl(0, rng).rows(), 0u);
    EXPECT_EQ(sample_sl(1, rng), RatMatrix::identity(1));
    for (std::size_t n = 1; n <= 5; ++n)
        for (int t = 0; t < 10; ++t) EXPECT_EQ(det(sample_sl(n, rng)), 1);
}

TEST(Sampling, GroupMembershipIsExact) {
    Rng rng = trial_rng(2, 0);
    for (std::size_t n = 1; n <= 5; ++n)
        for (int t = 0; t < 10; ++t) {
            RatMatrix g = sample_so(n, rng);
            EXPECT_EQ(g.transpose() * g, RatMatrix::identity(n));
            EXPECT_EQ(det(g), 1);
        }
    for (std::size_t n = 2; n <= 6; n += 2) {
        RatMatrix j = RatMatrix::standard_symplectic(n);
        for (int t = 0; t < 10; ++t) {
            RatMatrix g = sample_sp(n, rng);
            EXPECT_EQ(g.transpose() * j * g, j);
        }
    }
    for (int t = 0; t < 10; ++t) EXPECT_NE(det(sample_gl(3, rng)), 0);
}

TEST(Sampling, SameSeedSameElement) {
    Rng a = trial_rng(9, 4), b = trial_rng(9, 4);
    EXPECT_EQ(sample_sp(4, a), sample_sp(4, b));
}

TEST(GroupElement, ValidationAndComposition) {
    for (std::string spec : {"A4:>>>", "A5:>>>>", "A5:<>><", "A6:><><>"})
        for (FormKind kind : {FormKind::Orthogonal, FormKind::Symplectic}) {
            auto q = parse_quiver(spec);
            DimVector dim(q.n_vertices(), 2);
            Rng rng = trial_rng(3, static_cast<std::uint64_t>(kind));
            auto g = sample_group_element(q, kind, dim, rng);
            auto h = sample_group_element(q, kind, dim, rng);
            EXPECT_NO_THROW(g.validate());
            EXPECT_NO_THROW(compose(g, h).validate());
            for (std::size_t x : q.plus_vertices())
                EXPECT_EQ(g.at(q.sigma_vertex(x)), inverse(g.at(x)).transpose());
            if (auto f = q.fixed_vertex()) {
                RatMatrix form = kind == FormKind::Orthogonal ? RatMatrix::identity(2) : RatMatrix::standard_symplectic(2);
                EXPECT_EQ(g.at(*f).transpose() * form * g.at(*f), form);
            }
        }
    auto a3 = parse_quiver("A3:>>");
    GroupElement bad = identity_element(a3, FormKind::Orthogonal, {1, 2, 1});
    bad.components[2] = RatMatrix{{2, 0}, {0, 1}};
    EXPECT_THROW(bad.validate(), Error);
}

TEST(Action, IdentityAndAssociativity) {
    for (std::string spec : {"A2:>", "A4:>>>", "A5:><<>", "A6:<<><<"})
        for (FormKind kind : {FormKind::Orthogonal, FormKind::Symplectic}) {
            auto q = parse_quiver(spec);
            DimVector dim(q.n_vertices(), 2);
            for (std::uint64_t t = 0; t < 5; ++t) {
                Rng rng = trial_rng(4, t);
                auto sw = random_symmetric_rep(q, kind, dim, rng);
                EXPECT_EQ(act(identity_element(q, kind, dim), sw).maps, sw.maps);
                auto g = sample_group_element(q, kind, dim, rng);
                auto h = sample_group_element(q, kind, dim, rng);
                auto moved = act(g, sw);
                EXPECT_NO_THROW(moved.validate()) << spec;
                EXPECT_TRUE(is_selfdual_under_form(unfold(moved), kind)) << spec;
                EXPECT_EQ(act(compose(g, h), sw).maps, act(g, act(h, sw)).maps) << spec;
            }
        }
}

TEST(Characters, Examples) {
    auto a4 = parse_quiver("A4:>>>");
    DimVector dim{1, 2, 2, 1};
    auto g = identity_element(a4, FormKind::Symplectic, dim);
    g.components[1] = RatMatrix{{2}};
    Weight chi{{1, 0, 0, -1}};
    EXPECT_EQ(character_value(g, chi), 2);
    EXPECT_EQ(weight_character(g, chi), 4);
    EXPECT_EQ(character_value(g, Weight{{0, 0, 0, 0}}), 1);
    Rng rng = trial_rng(5, 0);
    auto s = identity_element(a4, FormKind::Symplectic, dim);
    s.components[2] = sample_sl(2, rng);
    EXPECT_EQ(character_value(s, Weight{{3, -2, 2, -3}}), 1);
    EXPECT_THROW(character_value(g, Weight{{Rational(1, 2), 0, 0, 0}}), ConditionError);
}

TEST(Characters, Multiplicative) {
    auto q = parse_quiver("A5:>>>>");
    DimVector dim{2, 1, 2, 1, 2};
    Weight chi{{1, -2, 0, 2, -1}};
    for (std::uint64_t t = 0; t < 10; ++t) {
        Rng rng = trial_rng(6, t);
        auto g = sample_group_element(q, FormKind::Orthogonal, dim, rng);
        auto h = sample_group_element(q, FormKind::Orthogonal, dim, rng);
        EXPECT_EQ(character_value(compose(g, h), chi), character_value(g, chi) * character_value(h, chi));
        EXPECT_EQ(weight_character(compose(g, h), chi), weight_character(g, chi) * weight_character(h, chi));
    }
}
