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

#include "symquiver/semiinvariants.hpp"

namespace symquiver {

/// Descriptors whose min/equality conditions hold, before removing zero or proportional ones.
/// The quiver must be equioriented.
std::vector<SemiInvariantDescriptor> theorem_generators(const SymmetricQuiver& q, const DimVector& beta,
                                                        FormKind kind);

/// theorem_generators with identically zero polynomials dropped and proportional ones merged,
/// keeping the first of each class.
std::vector<SemiInvariantDescriptor> enumerate_generators(const SymmetricQuiver& q, const DimVector& beta,
                                                          FormKind kind);

/// Result of stripping dominated vertices: the smaller quiver, its dimension vector, the
/// original label of each remaining vertex and the det factors split off on the way.
struct Reduction {
    SymmetricQuiver quiver;
    DimVector dim;
    std::vector<std::size_t> original_vertex;
    std::vector<SemiInvariantDescriptor> extracted;
    std::vector<std::size_t> stripped;
};

Reduction reduce_dominated(const SymmetricQuiver& q, const DimVector& beta);

/// A descriptor on the reduced quiver, rewritten as the semi-invariant of the composite path on q.
SemiInvariantDescriptor pullback(const Reduction& r, const SymmetricQuiver& q,
                                 const SemiInvariantDescriptor& d);

/// One transported generator. descriptor is empty when the generator is killed by a step.
struct TransportResult {
    std::optional<SemiInvariantDescriptor> descriptor;
    SymmetricQuiver quiver;
    DimVector dim;
    std::vector<std::string> steps;
};

/// Follows descr along admissible pair reflections; each step names a member of the pair.
TransportResult transport_generator(const SemiInvariantDescriptor& descr, const SymmetricQuiver& q,
                                    const DimVector& beta, const std::vector<std::size_t>& sequence);

}  // namespace symquiver
