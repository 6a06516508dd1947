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

#include "insproc/buildings.hpp"
#include "insproc/graph.hpp"
#include "insproc/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace insproc {

constexpr std::uint64_t kDefaultEnumerationBound = 10'000'000;

/// P_n(x) = B(x) / Σ_y B(y), stored over the positive-B words in lexicographic order.
struct Marginal {
    std::size_t length = 0;
    std::vector<Word> words;
    std::vector<Rational> probabilities;
    /// Z_n = Σ_x B(x)
    Rational normalizer;

    /// 0 outside the support.
    Rational probability(const Word& x) const;
};

/// Throws Error(limit_exceeded) when |V|^n exceeds the bound.
Marginal marginal(const WeightedGraph& g, std::size_t n, std::uint64_t enumeration_bound = kDefaultEnumerationBound);

struct StationarityReport {
    bool stationary = false;
    /// Largest |P_n(x) − Σ_v P_{n+1}(xv)| or |P_n(x) − Σ_v P_{n+1}(vx)|.
    Rational max_defect;
};

StationarityReport stationarity_check(const WeightedGraph& g, std::size_t n);

/**
 * @brief Reproducible generator: std::mt19937_64 seeded through SplitMix64.
 *
 * Both algorithms are fully specified by the C++ standard and the SplitMix64
 * reference, so a seed gives the same stream on every platform. Only raw
 * 64-bit outputs are consumed; no std distributions.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed);
    std::uint64_t next() { return engine_(); }

    static std::uint64_t splitmix64(std::uint64_t x);
    /// Seed for independent stream number `stream` derived from `seed`.
    static std::uint64_t split(std::uint64_t seed, std::uint64_t stream);

private:
    std::mt19937_64 engine_;
};

struct SampleBatch {
    std::uint64_t seed = 0;
    std::size_t length = 0;
    std::vector<Word> words;
};

/// Draws per independent sub-stream; batches do not depend on the thread count.
constexpr std::size_t kSampleChunk = 4096;

/**
 * @brief iid draws from P_n by inverse transform.
 *
 * The cumulative table stays rational; draw u ∈ [0, 2^64) picks the first
 * word with u < ⌈F(x)·2^64⌉, so each probability is off by at most 2^-64.
 */
SampleBatch sample_exact(const Marginal& law, std::uint64_t seed, std::size_t count, std::size_t threads = 1);
SampleBatch sample_exact(const WeightedGraph& g, std::size_t n, std::uint64_t seed, std::size_t count,
                         std::size_t threads = 1);

struct InsertionTrace {
    Word word;
    BuildOrder order;
};

/// Total incurred weight over all (location, vertex) choices for growing x by one symbol.
Rational insertion_step_normalizer(const WeightedGraph& g, const Word& x);

/**
 * @brief Grows a word by weighted insertion: (location, vertex) is chosen with
 * probability proportional to the product of the edge weights it creates.
 *
 * Throws Error(dead_end) when every choice has weight 0.
 */
InsertionTrace sample_insertion(const WeightedGraph& g, std::size_t n, std::uint64_t seed);

/// Exact law of sample_insertion's output after n steps, by forward dynamic programming.
std::map<Word, Rational> insertion_law(const WeightedGraph& g, std::size_t n);

/// Total variation distance between insertion_law(g, n) and marginal(g, n).
Rational insertion_total_variation(const WeightedGraph& g, std::size_t n);

struct PairLaw {
    std::size_t vertex_count = 0;
    /// joint[a * |V| + b] = P_n(X_i = a, X_j = b)
    std::vector<Rational> joint;
    /// P_1(a) P_1(b)
    std::vector<Rational> product;
    Rational total_variation;
};

/// Joint law of positions i < j (0-based) under P_n against P_1 ⊗ P_1.
PairLaw position_pair_law(const WeightedGraph& g, std::size_t n, std::size_t i, std::size_t j);

struct ChiSquareReport {
    std::size_t gap = 0;
    std::size_t samples = 0;
    double statistic = 0;
    std::size_t degrees_of_freedom = 0;
    double p_value = 1;
    double significance = 0.001;
    bool reject = false;
};

/**
 * @brief Pearson test of (X_1, X_{gap+2}) against P_1 ⊗ P_1.
 *
 * A pair observed in a cell of expected mass 0 gives an infinite statistic
 * and p = 0. Requires words of length ≥ gap + 2.
 */
ChiSquareReport empirical_gap_independence(const WeightedGraph& g, const SampleBatch& batch, std::size_t gap);

} // namespace insproc
