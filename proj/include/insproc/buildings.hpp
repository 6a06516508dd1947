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

#include "insproc/engine.hpp"
#include "insproc/graph.hpp"
#include "insproc/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace insproc {

/**
 * @brief Arrival order of a building: the symbol at position order()[t] arrives at time t.
 *
 * Positions and times are 0-based internally. Always a permutation.
 */
class BuildOrder {
public:
    explicit BuildOrder(std::vector<std::uint32_t> order);
    static BuildOrder identity(std::size_t n);
    /// From the 1-based notation, e.g. {4,7,5,2,6,1,3}.
    static BuildOrder from_one_based(std::span<const std::uint32_t> order);

    std::size_t size() const noexcept { return order_.size(); }
    std::uint32_t position_at(std::size_t time) const { return order_[time]; }
    const std::vector<std::uint32_t>& order() const noexcept { return order_; }

    friend bool operator==(const BuildOrder&, const BuildOrder&) = default;

private:
    std::vector<std::uint32_t> order_;
};

struct ConstraintEdge {
    std::uint32_t tail_position;
    std::uint32_t head_position;
    VertexId tail;
    VertexId head;
    Rational weight;
};

/// Edge multiset in order of creation (arrival time, then left edge before right edge).
struct ConstraintGraph {
    std::vector<ConstraintEdge> edges;
};

/// w(x1,x2)···w(x_{n-1},x_n); 1 for words of length at most 1.
Rational word_weight(const WeightedGraph& g, std::span<const VertexId> x);

/// Nearest already-present neighbour on each side of every arrival.
ConstraintGraph constraint_graph(const WeightedGraph& g, std::span<const VertexId> x, const BuildOrder& order);

Rational building_weight(const WeightedGraph& g, std::span<const VertexId> x, const BuildOrder& order);

constexpr std::size_t kDefaultBruteForceBound = 8;

/**
 * @brief Σ over all n! arrival orders of the building weight.
 *
 * Constraint graphs depend only on positions, so each order is enumerated
 * once per length and identical position-edge multisets are merged with a
 * multiplicity; the word is then substituted into every merged term.
 */
Rational b_bruteforce(const WeightedGraph& g, std::span<const VertexId> x,
                      std::size_t max_length = kDefaultBruteForceBound);

/// The same sum with no merging: one building_weight call per permutation.
Rational b_bruteforce_direct(const WeightedGraph& g, std::span<const VertexId> x,
                             std::size_t max_length = kDefaultBruteForceBound);

/// Merged position-edge multisets of all arrival orders of length n.
struct PermutationTable {
    struct Term {
        std::vector<std::pair<std::uint8_t, std::uint8_t>> edges;
        std::int64_t multiplicity;
    };
    std::size_t length = 0;
    std::vector<Term> terms;
};

/// Cached, thread-safe. Throws Error(limit_exceeded) above max_length.
const PermutationTable& permutation_table(std::size_t n, std::size_t max_length = kDefaultBruteForceBound);

/// Brute-force evaluation over an integer or rational weight table. Result is scaled by D^(2n).
template <class Scalar>
Scalar evaluate_permutation_table(const PermutationTable& table, const WeightTable<Scalar>& w,
                                  std::span<const VertexId> x);

/**
 * @brief Memoised deletion recurrences for B and B̃ on one graph.
 *
 * B(x)  = Σ_i w(x_{i-1},x_i) B(x̂_i) w(x_i,x_{i+1})
 * B̃(x) = Σ_i w(x_{i-1},x_{i+1}) B̃(x̂_i),  B̃(∅) = 1
 *
 * A neighbour outside the word contributes a factor 1. Caches are keyed by the
 * exact symbol sequence and are safe to populate from several threads.
 */
class BuildingCounter {
public:
    explicit BuildingCounter(WeightedGraph g);

    const WeightedGraph& graph() const noexcept { return graph_; }

    Rational b_rec(std::span<const VertexId> x);
    Rational b_tilde(std::span<const VertexId> x);

    std::size_t cache_size() const;

private:
    struct WordHash {
        std::size_t operator()(const Word& w) const noexcept;
    };
    template <class Scalar>
    struct Memo {
        std::unordered_map<Word, Scalar, WordHash> full;
        std::unordered_map<Word, Scalar, WordHash> reduced;
    };
    template <class Scalar>
    Scalar rec_full(const WeightTable<Scalar>& t, Memo<Scalar>& memo, const Word& x);
    template <class Scalar>
    Scalar rec_reduced(const WeightTable<Scalar>& t, Memo<Scalar>& memo, const Word& x);

    WeightedGraph graph_;
    std::optional<WeightTable<CheckedInt>> int_table_;
    WeightTable<Rational> rat_table_;
    Memo<CheckedInt> int_memo_;
    Memo<Rational> rat_memo_;
    mutable std::mutex mutex_;
};

/// One-shot wrappers with a private cache.
Rational b_rec(const WeightedGraph& g, std::span<const VertexId> x);
Rational b_tilde(const WeightedGraph& g, std::span<const VertexId> x);

/**
 * @brief Non-memoised evaluator for sweeps (interval DP, integer fast path).
 *
 * Not thread-safe; use one per worker.
 */
class FastCounter {
public:
    explicit FastCounter(const WeightedGraph& g);
    Rational b(std::span<const VertexId> x);
    Rational b_tilde(std::span<const VertexId> x);

private:
    Rational eval(std::span<const VertexId> x, CountKind kind);

    std::optional<WeightTable<CheckedInt>> int_table_;
    WeightTable<Rational> rat_table_;
    IntervalCounter<CheckedInt> int_counter_;
    IntervalCounter<Rational> rat_counter_;
};

} // namespace insproc
