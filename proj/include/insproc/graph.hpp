/*
 * Copyright 2026 The insproc Authors
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

#include "insproc/rational.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace insproc {

/// Dense vertex index in [0, vertex_count). External formats are 1-based.
using VertexId = std::uint32_t;

/// A finite sequence of vertices. The empty word is allowed.
using Word = std::vector<VertexId>;

/**
 * @brief Finite vertex set with an exact nonnegative weight on every ordered pair.
 *
 * Directed: w(i,j) and w(j,i) are independent, loops are permitted. The
 * positive-edge adjacency is cached and kept in sync by set_weight().
 */
class WeightedGraph {
public:
    explicit WeightedGraph(std::size_t vertex_count);

    std::size_t vertex_count() const noexcept { return n_; }

    const Rational& weight(VertexId i, VertexId j) const { return weights_[index(i, j)]; }
    bool positive(VertexId i, VertexId j) const { return positive_[index(i, j)] != 0; }

    /// Rejects negative weights and out-of-range vertices.
    void set_weight(VertexId i, VertexId j, Rational w);

    /// Heads of positive-weight edges leaving i, ascending.
    std::span<const VertexId> out_neighbors(VertexId i) const { return out_[i]; }

    bool is_symmetric() const;
    bool is_loopless() const;
    bool contains(VertexId v) const noexcept { return v < n_; }

    friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
        return a.n_ == b.n_ && a.weights_ == b.weights_;
    }

private:
    std::size_t index(VertexId i, VertexId j) const { return static_cast<std::size_t>(i) * n_ + j; }
    void rebuild_row(VertexId i);

    std::size_t n_;
    std::vector<Rational> weights_;
    std::vector<char> positive_;
    std::vector<std::vector<VertexId>> out_;
};

/// w·K_q: loopless, every off-diagonal weight equal to w.
WeightedGraph make_complete(std::size_t q, const Rational& w);

/// w·K_{r,...,r} with q parts on [qr]: w(i,j) = w exactly when i ≢ j (mod q).
WeightedGraph make_multipartite(std::size_t q, std::size_t r, const Rational& w);

struct WeightViolation {
    VertexId from;
    VertexId to;
    Rational weight;
};

struct UniformWeightReport {
    bool is_uniform = false;
    std::optional<Rational> w;
    std::vector<WeightViolation> violations;
};

/// Uniform weight means all weights in {0, w}, symmetric, zero diagonal.
UniformWeightReport uniform_weight(const WeightedGraph& g);

using Triple = std::array<VertexId, 3>;

struct TriangleScan {
    std::optional<Triple> witness;
    std::uint64_t triples_scanned = 0;
};

/// Scans (a,b,c) in lexicographic order for w(a,b) w(b,c) w(a,c) > 0; vertices may repeat.
TriangleScan scan_directed_triangles(const WeightedGraph& g);

inline std::optional<Triple> has_directed_triangle(const WeightedGraph& g) {
    return scan_directed_triangles(g).witness;
}

bool is_strongly_connected(const WeightedGraph& g);

/// Kite (abc;d): abc a triangle, d adjacent to a and to neither b nor c.
struct Kite {
    VertexId a, b, c, d;
    friend bool operator==(const Kite&, const Kite&) = default;
};

/// Induced-subgraph test on four distinct vertices. Requires a symmetric loopless graph.
bool is_kite(const WeightedGraph& g, const Kite& k);

/// First kite in lexicographic order of (a,b,c,d). Requires a symmetric loopless graph.
std::optional<Kite> find_kite(const WeightedGraph& g);

/// Common out-degree of the positive edge set, if any.
std::optional<std::size_t> regularity(const WeightedGraph& g);

/// Common number of triangles through every positive edge. Requires symmetric, loopless.
std::optional<std::size_t> triangles_per_edge(const WeightedGraph& g);

struct MultipartiteClassification {
    bool is_complete_multipartite = false;
    /// Parts ordered by their smallest vertex; each part ascending. Empty unless complete multipartite.
    std::vector<std::vector<VertexId>> parts;
    /// part_of[v] is the index of v's part.
    std::vector<std::size_t> part_of;
    std::size_t q = 0;
    /// Common part size; absent when sizes differ.
    std::optional<std::size_t> r;
};

/// Classifies by the non-adjacency relation. Requires symmetric, loopless.
MultipartiteClassification classify_multipartite(const WeightedGraph& g);

/// Maps every symbol to its part index. The classification must belong to g.
Word block_projection(const WeightedGraph& g, const MultipartiteClassification& cls, std::span<const VertexId> x);

/**
 * @brief Graph on the parts with w(P,Q) = w(i,j) for any i∈P, j∈Q.
 *
 * Throws Error(precondition) if the weight is not constant between two parts,
 * i.e. when block_projection would not preserve weights.
 */
WeightedGraph quotient_graph(const WeightedGraph& g, const MultipartiteClassification& cls);

} // namespace insproc
