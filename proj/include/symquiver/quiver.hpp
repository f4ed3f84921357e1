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
#include <utility>
#include <vector>

namespace symquiver {

/// Dimension vector; entry k belongs to vertex k+1.
using DimVector = std::vector<long>;

/// Direction of arrow a_i between vertices i and i+1.
enum class Dir { Right, Left };

/// Type A quiver with vertices 1..n, any orientation.
class Quiver {
public:
    Quiver() = default;
    Quiver(std::size_t n_vertices, std::vector<Dir> dirs);

    std::size_t n_vertices() const { return n_; }
    std::size_t n_arrows() const { return n_ ? n_ - 1 : 0; }
    const std::vector<Dir>& dirs() const { return dirs_; }
    Dir dir(std::size_t arrow) const { return dirs_.at(arrow - 1); }

    /// Tail and head of arrow a (1-based).
    std::size_t tail(std::size_t arrow) const;
    std::size_t head(std::size_t arrow) const;

    /// Arrows with head (resp. tail) x, in increasing index order.
    std::vector<std::size_t> incoming(std::size_t x) const;
    std::vector<std::size_t> outgoing(std::size_t x) const;
    bool is_sink(std::size_t x) const { return outgoing(x).empty(); }
    bool is_source(std::size_t x) const { return incoming(x).empty(); }

    /// Same graph with every arrow at x reversed.
    Quiver reversed_at(std::size_t x) const;

    /// True iff there is a directed path from x to y (x == y allowed).
    bool has_path(std::size_t x, std::size_t y) const;
    /// Arrows of the directed path from x to y in traversal order; empty when x == y.
    std::vector<std::size_t> path_arrows(std::size_t x, std::size_t y) const;

    bool equioriented() const;

    /// "A<n>:<dirs>".
    std::string to_string() const;

    friend bool operator==(const Quiver& a, const Quiver& b) { return a.n_ == b.n_ && a.dirs_ == b.dirs_; }

private:
    std::size_t n_ = 0;
    std::vector<Dir> dirs_;
};

enum class Part { Plus, Fixed, Minus };

/// Type A quiver with the involution i -> n-i+1 on vertices and a_i -> a_{n-i} on arrows.
class SymmetricQuiver {
public:
    SymmetricQuiver() = default;
    /// Throws StructureError when the orientation is not compatible with the involution.
    explicit SymmetricQuiver(Quiver q);

    const Quiver& quiver() const { return q_; }
    std::size_t n_vertices() const { return q_.n_vertices(); }
    std::size_t n_arrows() const { return q_.n_arrows(); }

    std::size_t sigma_vertex(std::size_t x) const { return q_.n_vertices() + 1 - x; }
    std::size_t sigma_arrow(std::size_t a) const { return q_.n_vertices() - a; }

    Part vertex_part(std::size_t x) const;
    Part arrow_part(std::size_t a) const;

    std::vector<std::size_t> plus_vertices() const;
    std::optional<std::size_t> fixed_vertex() const;
    std::vector<std::size_t> plus_arrows() const;
    std::optional<std::size_t> fixed_arrow() const;
    /// Q1+ followed by the fixed arrow, if any.
    std::vector<std::size_t> stored_arrows() const;

    bool is_symmetric(const DimVector& alpha) const;
    std::string to_string() const { return q_.to_string(); }

    friend bool operator==(const SymmetricQuiver& a, const SymmetricQuiver& b) { return a.q_ == b.q_; }

private:
    Quiver q_;
};

/// Parses "A<n>:<dirs>" without the symmetry check.
Quiver parse_plain_quiver(const std::string& spec);
/// Parses and validates "A<n>:<dirs>"; the error names the offending arrow pair.
SymmetricQuiver parse_quiver(const std::string& spec);

/// Parses "1,2,2,1".
DimVector parse_dim(const std::string& text);
std::string dim_to_string(const DimVector& d);

long euler_form(const Quiver& q, const DimVector& alpha, const DimVector& beta);
DimVector unit_vector(std::size_t n, std::size_t x);

/// c_x(alpha) at a sink or source x.
DimVector reflect_dim(const Quiver& q, std::size_t x, const DimVector& alpha);

/// Sink-source pairs (x, sigma(x)) with no arrow joining x and sigma(x); sink first.
std::vector<std::pair<std::size_t, std::size_t>> admissible_pairs(const SymmetricQuiver& q);

/// Reflects at x and sigma(x); x may be either member of an admissible pair.
SymmetricQuiver reflect_quiver(const SymmetricQuiver& q, std::size_t x);
/// c_{sigma(x)} c_x alpha for the admissible pair containing x.
DimVector reflect_pair_dim(const SymmetricQuiver& q, std::size_t x, const DimVector& alpha);

/// Sinks x_1..x_k of admissible pairs carrying q to target. Throws StructureError
/// when target is outside the reachable class (the middle arrow of A_{2n} never flips).
std::vector<std::size_t> orientation_path(const SymmetricQuiver& q, const SymmetricQuiver& target);

/// All symmetric orientations of A_n, in lexicographic order of their direction strings.
std::vector<SymmetricQuiver> symmetric_orientations(std::size_t n);

}  // namespace symquiver
