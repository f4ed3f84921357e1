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
#include <map>
#include <string>
#include <vector>

#include "symquiver/matrix.hpp"
#include "symquiver/quiver.hpp"

namespace symquiver {

enum class FormKind { Orthogonal, Symplectic };

std::string kind_name(FormKind kind);
/// Accepts "orthogonal" / "symplectic" (also "o" / "sp").
FormKind parse_kind(const std::string& text);
/// +1 for orthogonal, -1 for symplectic.
int form_sign(FormKind kind);

/// A representation of a type A quiver; maps[a-1] is dim(ha) x dim(ta).
struct Representation {
    Quiver quiver;
    DimVector dim;
    std::vector<RatMatrix> maps;

    const RatMatrix& map(std::size_t arrow) const { return maps.at(arrow - 1); }
    RatMatrix& map(std::size_t arrow) { return maps.at(arrow - 1); }
    /// Throws DimensionError on a shape mismatch.
    void validate() const;
};

Representation zero_representation(const Quiver& q, const DimVector& dim);

/// Orthogonal or symplectic representation storing only the Q1+ and fixed-arrow maps.
struct SymmetricRepresentation {
    SymmetricQuiver quiver;
    FormKind kind = FormKind::Orthogonal;
    DimVector dim;
    std::map<std::size_t, RatMatrix> maps;

    /// Checks symmetric dim, stored arrow set, shapes, the middle block structure and
    /// even fixed-vertex dimension for symplectic kind. Throws StructureError/DimensionError.
    void validate() const;
};

/// Gram block pairing V(x) with V(sigma x): I on Q0+, eps I on Q0-, and I or J on the fixed vertex.
RatMatrix gram_block(const SymmetricQuiver& q, FormKind kind, std::size_t x, long dim_x);

/// The map on sigma(a) forced by the form, given the map on a.
RatMatrix partner_map(const SymmetricQuiver& q, FormKind kind, const DimVector& dim, std::size_t arrow,
                      const RatMatrix& m);

Representation unfold(const SymmetricRepresentation& sv);

/// Restricts a representation of a symmetric quiver to its stored arrows. No form check.
SymmetricRepresentation fold(const Representation& v, FormKind kind);

/// Isomorphism V(x) -> (nabla V)(x) induced by the form.
RatMatrix form_identification(const SymmetricQuiver& q, FormKind kind, std::size_t x, long dim_x);

/// True iff the form identification intertwines v and dualize(v).
bool is_selfdual_under_form(const Representation& v, FormKind kind);

struct Interval {
    std::size_t lo = 0;
    std::size_t hi = 0;
    friend bool operator==(const Interval& a, const Interval& b) { return a.lo == b.lo && a.hi == b.hi; }
    friend bool operator<(const Interval& a, const Interval& b) {
        return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
    }
};

std::string interval_to_string(const Interval& iv);

/// V_{i,j}: one-dimensional on i..j with identity maps inside the support.
Representation indecomposable(const Quiver& q, std::size_t i, std::size_t j);
Representation simple(const Quiver& q, std::size_t x);
/// Indecomposable projective at x, supported on the vertices reachable from x.
Representation projective(const Quiver& q, std::size_t x);
Interval projective_interval(const Quiver& q, std::size_t x);
/// Indecomposable injective at x, supported on the vertices that reach x.
Interval injective_interval(const Quiver& q, std::size_t x);
std::vector<Interval> all_intervals(std::size_t n);

struct HomSpace {
    std::size_t dimension = 0;
    /// Each element holds one W(x) x V(x) matrix per vertex.
    std::vector<std::vector<RatMatrix>> basis;
};

/// Linear system whose kernel is Hom(V, W); unknowns are the f_x entries, vertex by vertex, row-major.
RatMatrix intertwiner_system(const Representation& v, const Representation& w);
HomSpace hom_basis(const Representation& v, const Representation& w);
std::size_t hom_dim(const Representation& v, const Representation& w);
/// hom_dim - Euler form; InternalError if negative.
std::size_t ext_dim(const Representation& v, const Representation& w);

/// nabla V; the quiver must be symmetric.
Representation dualize(const Representation& v);

Representation direct_sum(const Representation& v, const Representation& w);
Representation from_intervals(const Quiver& q, const std::vector<Interval>& intervals);

/// Interval multiset of V, sorted. InternalError if the multiplicities are not natural numbers.
std::vector<Interval> fingerprint(const Representation& v);
std::string fingerprint_to_string(const std::vector<Interval>& f);
bool isomorphic(const Representation& v, const Representation& w);

}  // namespace symquiver
