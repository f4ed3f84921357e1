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
#include <string>
#include <vector>

#include "symquiver/semiinvariants.hpp"

namespace symquiver {

struct Failure {
    std::string input;
    std::string expected;
    std::string actual;
};

struct OracleComparison {
    std::string weight;
    long degree = 0;
    long oracle_dim = 0;
    long generated_dim = 0;
};

struct VerificationReport {
    std::string subject;
    std::size_t trials = 0;
    std::size_t skipped = 0;
    std::vector<Failure> failures;
    std::vector<OracleComparison> oracle_comparisons;
    /// Text label for generated_dim.
    std::string reference_name = "generated";

    bool passed() const { return failures.empty(); }
    std::string to_text() const;
    /// One JSON object; comparisons and failures as arrays of records.
    std::string to_json() const;
};

/// Largest number of degree-d monomials the Lie oracle will handle.
inline constexpr std::size_t kLieMonomialGuard = 5000;

/// Symmetric weight whose torus degree on Q0+ is `torus`.
Weight weight_from_torus(const SymmetricQuiver& q, const DimVector& beta, const std::vector<long>& torus);

/// Dimension of the degree-d invariants of the derived group, split by torus degree on Q0+.
/// Entries with dimension 0 are omitted.
std::map<std::vector<long>, long> lie_weight_table(const SymmetricQuiver& q, const DimVector& beta, FormKind kind,
                                                   long d);
long lie_weight_space_dim(const SymmetricQuiver& q, const DimVector& beta, FormKind kind, const Weight& chi,
                          long d);

VerificationReport verify_invariance(const SemiInvariantDescriptor& descr, const SymmetricQuiver& q,
                                     const DimVector& beta, FormKind kind, std::size_t trials, std::uint64_t seed);

VerificationReport verify_generation(const SymmetricQuiver& q, const DimVector& beta, FormKind kind, long d_max);

/// lie_weight_space_dim against chain_weight_space_dim for every torus degree seen by either.
VerificationReport verify_cross_oracle(const SymmetricQuiver& q, const DimVector& beta, FormKind kind, long d_max);

/// c^V(W) / c^{C+V}(C+W) constant in W, for every interval V and admissible pair.
VerificationReport verify_reflection_transport(const SymmetricQuiver& q, const DimVector& beta, FormKind kind,
                                               std::size_t trials, std::uint64_t seed);

/// c^V(W) / c^{C- nabla V}(W) constant in W on orthogonal/symplectic W.
VerificationReport verify_duality(const SymmetricQuiver& q, const DimVector& beta, FormKind kind,
                                  std::size_t trials, std::uint64_t seed);

/// Hom(d_min^V, W) skew-symmetric for every V with V = C- nabla V and zero Euler form.
VerificationReport verify_pf_skewness(const SymmetricQuiver& q, const DimVector& beta, FormKind kind,
                                      std::size_t trials, std::uint64_t seed);

/// det A = Pf(A)^2 and Pf(B A B^T) = det B Pf A on random skew A of sizes 2, 4, 6.
VerificationReport verify_pfaffian_laws(std::size_t trials, std::uint64_t seed);

}  // namespace symquiver
