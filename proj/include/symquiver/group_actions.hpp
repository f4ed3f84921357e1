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
#include <cstdint>
#include <map>
#include <random>

#include "symquiver/representation.hpp"
#include "symquiver/semiinvariants.hpp"

namespace symquiver {

using Rng = std::mt19937_64;

/// Independent stream for one trial, derived from the seed and the trial index.
Rng trial_rng(std::uint64_t seed, std::uint64_t trial);

/// numerator in [-9, 9], denominator in [1, 9].
Rational random_rational(Rng& rng);
Rational random_nonzero_rational(Rng& rng);
RatMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng);
RatMatrix random_skew(std::size_t n, Rng& rng);
RatMatrix random_symmetric(std::size_t n, Rng& rng);

/// Product of 2n random shears I + r E_ij.
RatMatrix sample_sl(std::size_t n, Rng& rng);
/// Cayley transform (I - S)(I + S)^{-1} of a random skew S.
RatMatrix sample_so(std::size_t n, Rng& rng);
/// Cayley transform of H = J S with S random symmetric; n must be even.
RatMatrix sample_sp(std::size_t n, Rng& rng);
/// Random element of GL(n): a first-row scaling of an SL sample.
RatMatrix sample_gl(std::size_t n, Rng& rng);

/// Element of GL(Q0+) x SO/Sp(fixed vertex); g_{sigma x} = (g_x^{-1})^T is implied.
struct GroupElement {
    SymmetricQuiver quiver;
    FormKind kind = FormKind::Orthogonal;
    DimVector dim;
    std::map<std::size_t, RatMatrix> components;

    /// Component at any vertex, using the implied rule on Q0-.
    RatMatrix at(std::size_t x) const;
    /// Checks invertibility and the fixed-vertex isometry identity exactly.
    void validate() const;
};

GroupElement identity_element(const SymmetricQuiver& q, FormKind kind, const DimVector& dim);
GroupElement sample_group_element(const SymmetricQuiver& q, FormKind kind, const DimVector& dim, Rng& rng);
/// (g h)_x = g_x h_x.
GroupElement compose(const GroupElement& g, const GroupElement& h);

Representation random_representation(const Quiver& q, const DimVector& dim, Rng& rng);
SymmetricRepresentation random_symmetric_rep(const SymmetricQuiver& q, FormKind kind, const DimVector& dim, Rng& rng);

/// g . W on the stored arrows: g_ha W(a) g_ta^{-1}.
SymmetricRepresentation act(const GroupElement& g, const SymmetricRepresentation& sw);

/// prod over x in Q0+ of det(g_x)^{chi(x)}. ConditionError if an exponent is not an integer.
Rational character_value(const GroupElement& g, const Weight& chi);
/// The character of a semi-invariant of stated weight chi: exponents chi(x) - chi(sigma x) on Q0+.
Rational weight_character(const GroupElement& g, const Weight& chi);

}  // namespace symquiver
