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

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "symquiver/polynomial.hpp"
#include "symquiver/representation.hpp"

namespace symquiver {

/// One path term of a differential P1 -> P0 between indecomposable projectives.
/// The path runs from the P0 vertex of column col to the P1 vertex of row row.
struct PathTerm {
    std::size_t row = 0;
    std::size_t col = 0;
    Rational coeff;
    std::size_t from = 0;
    std::size_t to = 0;
};

/// 0 -> P1 -> P0 -> V -> 0 with P1, P0 given as lists of summand vertices.
struct ProjResolution {
    Quiver quiver;
    DimVector source_dim;
    std::vector<std::size_t> p1;
    std::vector<std::size_t> p0;
    std::vector<PathTerm> terms;

    std::vector<long> p1_multiplicities() const;
    std::vector<long> p0_multiplicities() const;
    bool is_projective() const { return p1.empty(); }
    /// e.g. "P4 → P1 via a3·a2·a1".
    std::string to_string() const;
};

/// The standard resolution with P1 = sum_a V(ta) (x) P_ha and P0 = sum_x V(x) (x) P_x.
ProjResolution canonical_resolution(const Representation& v);

/// Minimal resolution of the interval module on iv.
ProjResolution interval_resolution(const Quiver& q, const Interval& iv);
/// Minimal resolution of a direct sum of interval modules. P1 summands are sorted by
/// increasing vertex, P0 summands by decreasing vertex, ties broken by summand order.
ProjResolution minimal_resolution(const Quiver& q, const std::vector<Interval>& intervals);
ProjResolution minimal_resolution(const Representation& v);

/// W applied to the path from x to y; the identity when x == y.
RatMatrix path_map(const Representation& w, std::size_t from, std::size_t to);

/// Hom(d, W): sum over columns of W(P0 vertex) -> sum over rows of W(P1 vertex).
/// ConditionError naming both dimension vectors when the Euler form is nonzero.
RatMatrix hom_matrix(const ProjResolution& r, const Representation& w);
/// Same assembly over symbolic arrow maps (maps[a-1]) with dimension vector dim.
PolyMatrix hom_matrix(const ProjResolution& r, const std::vector<PolyMatrix>& maps, const DimVector& dim,
                      std::size_t nvars);

}  // namespace symquiver
