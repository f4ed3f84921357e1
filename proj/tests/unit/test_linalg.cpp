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

#include "oracles.hpp"
#include "symquiver/errors.hpp"
#include "symquiver/matrix.hpp"
#include "symquiver/rational.hpp"

using namespace symquiver;
using symquiver::testing::leibniz_det;
using symquiver::testing::matching_pfaffian;

namespace {

RatMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
    RatMatrix m(rows.size(), rows.size() ? rows.begin()->size() : 0);
    std::size_t r = 0;
    for (const auto& row : rows) {
        std::size_t c = 0;
        for (long v : row) m(r, c++) = v;
        ++r;
    }
    return m;
}

}  // namespace

TEST(Rational, CanonicalForm) {
    Rational r = make_rational(6, -4);
    EXPECT_EQ(to_string(r), "-3/2");
    EXPECT_EQ(to_string(Rational(0)), "0");
    EXPECT_EQ(parse_rational("10/4"), Rational(5, 2));
    EXPECT_EQ(parse_rational("-7"), Rational(-7));
}

TEST(Rational, RejectsMalformed) {
    EXPECT_THROW(parse_rational("1/0"), InputError);
    EXPECT_THROW(parse_rational("abc"), InputError);
    EXPECT_THROW(parse_rational(""), InputError);
    EXPECT_THROW(parse_rational("1.5"), InputError);
}

TEST(Det, Examples) {
    EXPECT_EQ(det(mat({{2, 0}, {0, 3}})), 6);
    EXPECT_EQ(det(RatMatrix(0, 0)), 1);
    RatMatrix a(2, 2);
    a(0, 1) = Rational(5, 2);
    a(1, 0) = Rational(-5, 2);
    EXPECT_EQ(det(a), Rational(25, 4));
    EXPECT_THROW(det(RatMatrix(2, 3)), DimensionError);
}

TEST(Det, AgreesWithLeibnizAndIsMultiplicative) {
    for (std::uint64_t t = 0; t < 60; ++t) {
        Rng rng = trial_rng(11, t);
        const std::size_t n = 1 + t % 6;
        RatMatrix m = random_matrix(n, n, rng), k = random_matrix(n, n, rng);
        EXPECT_EQ(det(m), leibniz_det(m));
        EXPECT_EQ(det(m) * det(k), det(m * k));
    }
}

TEST(Pfaffian, Examples) {
    RatMatrix a(2, 2);
    a(0, 1) = 7;
    a(1, 0) = -7;
    EXPECT_EQ(pfaffian(a), 7);
    EXPECT_EQ(pfaffian(RatMatrix(0, 0)), 1);
    RatMatrix odd(3, 3);
    odd(0, 1) = 1;
    odd(1, 0) = -1;
    EXPECT_EQ(pfaffian(odd), 0);
}

TEST(Pfaffian, FourByFourFormula) {
    Rng rng = trial_rng(5, 0);
    RatMatrix m = random_skew(4, rng);
    EXPECT_EQ(pfaffian(m), m(0, 1) * m(2, 3) - m(0, 2) * m(1, 3) + m(0, 3) * m(1, 2));
}

TEST(Pfaffian, MatchesMatchingSumAndSquaresToDet) {
    for (std::uint64_t t = 0; t < 40; ++t) {
        Rng rng = trial_rng(21, t);
        const std::size_t n = 2 * (1 + t % 5);  // 2..10 covers both code paths
        RatMatrix m = random_skew(n, rng);
        if (n <= 8) { EXPECT_EQ(pfaffian(m), matching_pfaffian(m)) << "size " << n; }
        EXPECT_EQ(pfaffian(m) * pfaffian(m), det(m)) << "size " << n;
        RatMatrix b = random_matrix(n, n, rng);
        EXPECT_EQ(pfaffian(b * m * b.transpose()), det(b) * pfaffian(m));
    }
}

TEST(Pfaffian, ExpansionAndEliminationAgree) {
    for (std::uint64_t t = 0; t < 20; ++t) {
        Rng rng = trial_rng(3, t);
        RatMatrix m = random_skew(2 * (1 + t % 4), rng);
        if (t % 5 == 0) m = RatMatrix(m.rows(), m.cols());
        EXPECT_EQ(pfaffian_expansion(m), pfaffian_elimination(m));
    }
    Rng rng = trial_rng(3, 99);
    RatMatrix m = random_skew(10, rng);
    EXPECT_EQ(pfaffian(m), matching_pfaffian(m));
}

TEST(Pfaffian, NonSkewNamesEntry) {
    RatMatrix m = mat({{0, 1}, {2, 0}});
    try {
        pfaffian(m);
        FAIL() << "expected StructureError";
    } catch (const StructureError& e) {
        EXPECT_NE(std::string(e.what()).find("(1,2)"), std::string::npos) << e.what();
    }
}

TEST(Linalg, RankKernelSolveInverse) {
    EXPECT_EQ(rank(RatMatrix::identity(3)), 3u);
    auto k = kernel_basis(mat({{1, 1}}));
    ASSERT_EQ(k.size(), 1u);
    // proportional to (1,-1); the canonical representative has 1 in the free column
    EXPECT_EQ(k[0], (std::vector<Rational>{-1, 1}));
    auto x = solve(mat({{2}}), std::vector<Rational>{3});
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ((*x)[0], Rational(3, 2));
    EXPECT_THROW(inverse(mat({{1, 2}, {2, 4}})), SingularError);
    EXPECT_FALSE(solve(mat({{1, 2}, {2, 4}}), std::vector<Rational>{1, 0}).has_value());
}

TEST(Linalg, RankNullityAndInverseOnRandomMatrices) {
    for (std::uint64_t t = 0; t < 40; ++t) {
        Rng rng = trial_rng(8, t);
        const std::size_t r = 1 + t % 4, c = 1 + (t / 4) % 5;
        RatMatrix m = random_matrix(r, c, rng);
        if (t % 3 == 0 && r > 1)
            for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 2;
        auto ker = kernel_basis(m);
        EXPECT_EQ(rank(m) + ker.size(), c);
        for (const auto& v : ker) { EXPECT_TRUE((m * RatMatrix::column(v)).is_zero()); }
        if (r == c && det(m) != 0) { EXPECT_EQ(m * inverse(m), RatMatrix::identity(r)); }
    }
}

TEST(Linalg, EmptyShapesAreLegal) {
    RatMatrix a(0, 3), b(3, 0);
    EXPECT_EQ((b * a).rows(), 3u);
    EXPECT_TRUE((b * a).is_zero());
    EXPECT_EQ((a * b).rows(), 0u);
    EXPECT_EQ(rank(a), 0u);
    EXPECT_EQ(kernel_basis(a).size(), 3u);
}
