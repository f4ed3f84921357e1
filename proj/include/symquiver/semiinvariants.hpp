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
#include <optional>
#include <string>
#include <vector>

#include "symquiver/polynomial.hpp"
#include "symquiver/representation.hpp"
#include "symquiver/resolution.hpp"

namespace symquiver {

/// Vertex-indexed character exponents. Rational so that half weights of Pfaffians fit.
struct Weight {
    std::vector<Rational> values;

    friend bool operator==(const Weight& a, const Weight& b) { return a.values == b.values; }
    friend bool operator<(const Weight& a, const Weight& b) { return a.values < b.values; }
    std::string to_string() const;
};

enum class WeightMode { Plain, SymmetricCorrected };

/// Plain: y -> <dim V, e_y>. SymmetricCorrected: additionally zero at the fixed vertex.
Weight weight_of(const Representation& v, WeightMode mode);
Weight scale(const Weight& w, const Rational& s);
Weight add(const Weight& a, const Weight& b);

/// chi(sigma x) = -chi(x) for all x, hence zero at the fixed vertex.
bool is_symmetric_weight(const SymmetricQuiver& q, const Weight& chi);
/// (chi - chi o sigma) / 2.
Weight symmetrize(const SymmetricQuiver& q, const Weight& chi);
/// e_x = chi(x) - chi(sigma x) for x in Q0+: the exponent of det g_x in the character.
std::vector<Rational> folded_exponents(const SymmetricQuiver& q, const Weight& chi);
/// Degree of the scalar torus at each x in Q0+: -e_x * beta_x. Throws if not integral.
std::vector<long> torus_degree(const SymmetricQuiver& q, const DimVector& beta, const Weight& chi);

/// det Hom(d_min^V, W). ConditionError when the Euler form is nonzero.
Rational schofield_eval(const Representation& v, const Representation& w);
/// Same with the canonical resolution; equal to schofield_eval up to a constant factor.
Rational schofield_eval_canonical(const Representation& v, const Representation& w);

/// V is isomorphic to C^- nabla V.
bool is_pf_admissible(const Representation& v);
/// Hom(d_min^V, W) for the unfolded W, no parity or skewness checks.
RatMatrix pf_matrix(const Representation& v, const SymmetricRepresentation& sw);
/// Pf Hom(d_min^V, W). ConditionError citing the failed precondition: Euler form, parity,
/// V not isomorphic to C^- nabla V, or skewness.
Rational pfaffian_eval(const Representation& v, const SymmetricRepresentation& sw);

enum class DescriptorKind { Det, Pf };

/// Symbolic identity of c^V or pf^V with V an interval module.
struct SemiInvariantDescriptor {
    DescriptorKind kind = DescriptorKind::Det;
    Interval interval;
    Weight weight;
    long degree = 0;

    /// "cV:j,i"; "pf:i" when the interval is [i, n-i], otherwise "pf:j,i".
    std::string to_string(std::size_t n_vertices) const;
};

/// Parses "cV:j,i", "pf:i" (interval [i, n-i]) or "pf:j,i"; fills the weight from the quiver.
SemiInvariantDescriptor parse_descriptor(const std::string& text, const SymmetricQuiver& q);
/// Descriptor for an interval with its stated weight (halved for Pf); degree left at 0.
SemiInvariantDescriptor make_descriptor(DescriptorKind kind, const SymmetricQuiver& q, const Interval& iv);

/// Numeric value of the descriptor on an orthogonal/symplectic representation.
Rational evaluate(const SemiInvariantDescriptor& d, const SymmetricRepresentation& sw);

/// Coordinates of ORep/SpRep: stored Q1+ entries row-major by arrow, then the upper triangle of
/// the middle block (with diagonal for symplectic, strict for orthogonal).
struct Coordinate {
    std::size_t arrow = 0;
    std::size_t row = 0;
    std::size_t col = 0;
};
std::vector<Coordinate> coordinates(const SymmetricQuiver& q, FormKind kind, const DimVector& beta);
std::vector<std::string> coordinate_names(const SymmetricQuiver& q, FormKind kind, const DimVector& beta);
SymmetricRepresentation rep_from_point(const SymmetricQuiver& q, FormKind kind, const DimVector& beta,
                                       const std::vector<Rational>& point);
std::vector<Rational> point_of(const SymmetricRepresentation& sw);

/// The unfolded generic representation with coordinate variables.
std::vector<PolyMatrix> generic_maps(const SymmetricQuiver& q, FormKind kind, const DimVector& beta);

/// Exact polynomial of the descriptor in the coordinates.
Polynomial symbolic_polynomial(const SemiInvariantDescriptor& d, const SymmetricQuiver& q, FormKind kind,
                               const DimVector& beta);

}  // namespace symquiver
