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
#include <vector>

#include "symquiver/representation.hpp"

namespace symquiver {

struct ReflectionResult {
    Representation representation;
    Quiver quiver;
};

/// C_x^+ at a sink x. The new space at x is the kernel of the sum map, with the basis scaled
/// so that it has volume 1 against any right inverse of the sum map.
ReflectionResult reflect_plus(const Representation& v, std::size_t x);
/// C_x^- at a source x, with the dual normalization of the cokernel.
ReflectionResult reflect_minus(const Representation& v, std::size_t x);

/// C^+_{(x,sigma x)} = C^-_{sigma x} C^+_x for an admissible sink x.
ReflectionResult reflect_pair_plus(const Representation& v, std::size_t x);
/// C^-_{(x,sigma x)} = C^+_{sigma x} C^-_x for an admissible source x.
ReflectionResult reflect_pair_minus(const Representation& v, std::size_t x);

/// Pair reflection of an orthogonal/symplectic representation; x is either member of the pair.
/// The Q0+ member is reflected and the partner arrows follow from the form.
SymmetricRepresentation reflect_pair_symmetric(const SymmetricRepresentation& sv, std::size_t x);

/// All orders x_1..x_n in which each vertex is a sink (resp. source) when it is reflected.
std::vector<std::vector<std::size_t>> sink_orders(const Quiver& q);
std::vector<std::vector<std::size_t>> source_orders(const Quiver& q);

Representation coxeter_plus(const Representation& v);
Representation coxeter_minus(const Representation& v);
Representation coxeter_plus(const Representation& v, const std::vector<std::size_t>& order);
Representation coxeter_minus(const Representation& v, const std::vector<std::size_t>& order);

}  // namespace symquiver
