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

#include "insproc/graph.hpp"
#include "insproc/process.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace insproc {

/// A window of n symbols over [0, q).
using Tuple = std::vector<VertexId>;

/**
 * @brief Loopless shift of finite type: every length-n window lies in the allowed set.
 *
 * The allowed set is kept sorted and deduplicated, so vertex i of the de Bruijn
 * graph is allowed()[i].
 */
class ShiftOfFiniteType {
public:
    /// Throws Error(invalid_argument) on n < 2, an empty set, out-of-range symbols,
    /// wrong tuple length, or a constant tuple.
    ShiftOfFiniteType(std::size_t q, std::size_t n, std::vector<Tuple> allowed);

    std::size_t alphabet_size() const noexcept { return q_; }
    std::size_t window_length() const noexcept { return n_; }
    const std::vector<Tuple>& allowed() const noexcept { return allowed_; }
    bool contains(const Tuple& t) const;
    /// Index of t in allowed(), if present.
    std::optional<VertexId> index_of(const Tuple& t) const;

private:
    std::size_t q_;
    std::size_t n_;
    std::vector<Tuple> allowed_;
};

/// {(a,b) : a ≠ b} over [0, q).
ShiftOfFiniteType proper_coloring_shift(std::size_t q);

/// Vertices are the allowed tuples; weight 1 from s to t when s shifted by one equals t's prefix.
WeightedGraph de_bruijn(const ShiftOfFiniteType& s);

struct LRViolation {
    /// Tuple whose counts disagree with the first tuple's.
    Tuple tuple;
    /// Allowed tuples that can precede it.
    std::size_t left_count;
    /// Allowed tuples that can follow it.
    std::size_t right_count;
    Tuple reference;
    std::size_t reference_count;
};

struct LRReport {
    bool is_constant = false;
    std::optional<std::size_t> K;
    std::optional<LRViolation> violation;
};

/**
 * @brief L(t) counts allowed tuples overlapping t from the left, R(t) from the right;
 * both must equal a common K over the whole allowed set, unreachable tuples included.
 */
LRReport check_lr(const ShiftOfFiniteType& s);

/// Stitches overlapping tuples into a word of length (path length) + n − 1.
/// Throws Error(invalid_argument) naming the first bad position.
Word project(std::span<const Tuple> path);

/**
 * @brief Exact sampling of the de Bruijn process, projected to symbols.
 *
 * Words have `window` symbols: paths of window − n + 1 tuples, or for window < n a
 * single tuple cut to its first `window` symbols. Throws Error(precondition) unless
 * check_lr finds a constant K ≥ 1.
 */
SampleBatch sample_sft(const ShiftOfFiniteType& s, std::size_t window, std::uint64_t seed, std::size_t count,
                       std::size_t threads = 1);

/// Every length-n window of x is allowed (vacuous when |x| < n).
bool satisfies_windows(const ShiftOfFiniteType& s, std::span<const VertexId> x);

struct SftCertificate {
    bool issued = false;
    std::size_t de_bruijn_vertices = 0;
    /// The triangle scan on the de Bruijn graph.
    TriangleScan scan;
};

/// Triangle-freeness of the de Bruijn graph; a triangle would force a constant allowed tuple.
SftCertificate not_finitely_dependent_certificate(const ShiftOfFiniteType& s);

} // namespace insproc
