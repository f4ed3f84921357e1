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
#include <tuple>
#include <vector>

#include "symquiver/quiver.hpp"
#include "symquiver/representation.hpp"
#include "symquiver/semiinvariants.hpp"

namespace symquiver {

/// Weakly decreasing positive parts.
using Partition = std::vector<long>;

/// Drops zero parts; InputError if not weakly decreasing or negative.
Partition normalize(const Partition& p);
long partition_size(const Partition& p);
std::size_t height(const Partition& p);
Partition transpose(const Partition& p);
Partition doubled(const Partition& p);
Partition parse_partition(const std::string& text);
std::string partition_to_string(const Partition& p);

/// Partitions of n with at most max_height parts, in reverse lexicographic order.
std::vector<Partition> partitions_of(long n, std::size_t max_height = static_cast<std::size_t>(-1));

/// Number of LR tableaux of shape nu/lambda and content mu.
long lr_coeff(const Partition& lambda, const Partition& mu, const Partition& nu);
/// All nu with nonzero c^nu_{lambda mu}.
std::vector<std::pair<Partition, long>> lr_product(const Partition& lambda, const Partition& mu);

/// Weyl dimension of S_lambda(k^n); 0 when the height exceeds n.
long schur_dim(const Partition& lambda, std::size_t n);

struct CauchyTerm {
    Partition lambda;
    long dim_v = 0;
    long dim_w = 0;
};
/// S_d(V (x) W) = sum over |lambda| = d of S_lambda V (x) S_lambda W; zero terms omitted.
std::vector<CauchyTerm> cauchy_tensor(long d, std::size_t n_v, std::size_t n_w);
/// S_d(S_2 V) = sum of S_{2 lambda} V.
std::vector<Partition> cauchy_sym2(long d, std::size_t n);
/// S_d(wedge^2 V) = sum of S_{(2 lambda)'} V.
std::vector<Partition> cauchy_wedge2(long d, std::size_t n);

/// dim (S_lambda V)^{SL(V)}: 1 iff lambda = (k^n).
long sl_invariant_dim(const Partition& lambda, std::size_t n);
/// Weight lambda_1 + mu_n of the SL(V) invariant in S_lambda V (x) S_mu V, if there is one.
std::optional<long> sl_pair_semiinvariant(const Partition& lambda, const Partition& mu, std::size_t n);
/// dim (S_lambda V)^{SO(V)}: lambda = 2mu or 2mu + (1^n), height at most n.
long so_invariant_dim(const Partition& lambda, std::size_t n);
/// dim (S_lambda V)^{Sp(V)}: even columns, height at most n.
long sp_invariant_dim(const Partition& lambda, std::size_t n);

/// Dimension of the degree-d, weight-chi part of the semi-invariant ring of an equioriented
/// symmetric A_m, counted through the Cauchy decompositions. chi must be symmetric.
long chain_weight_space_dim(const SymmetricQuiver& q, const DimVector& beta, FormKind kind, const Weight& chi,
                            long d);
/// Same, keyed by the scalar-torus degree on Q0+.
long chain_weight_space_dim(const SymmetricQuiver& q, const DimVector& beta, FormKind kind,
                            const std::vector<long>& torus, long d);

}  // namespace symquiver
