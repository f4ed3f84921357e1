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

#include <stdexcept>
#include <string>

namespace symquiver {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shape mismatch between matrices, vectors or quivers.
struct DimensionError : Error {
    using Error::Error;
};

struct SingularError : Error {
    using Error::Error;
};

// Input that violates a structural invariant (non-skew matrix, bad form block, ...).
struct StructureError : Error {
    using Error::Error;
};

// Malformed user input: parse failures, invalid flags.
struct InputError : Error {
    using Error::Error;
};

// A precondition of a semi-invariant (Euler form, parity, skewness) fails.
struct ConditionError : Error {
    using Error::Error;
};

// Raised when an internal consistency check fails.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace symquiver
