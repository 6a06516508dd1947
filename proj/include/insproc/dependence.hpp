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
#include "insproc/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace insproc {

/// Σ over all middle words W of length k of B(x W y).
Rational k_dep_lhs(const WeightedGraph& g, const Word& x, const Word& y, std::size_t k);

enum class DependenceFailure {
    mismatch,            ///< lhs not proportional to B(x)B(y)
    zero_constant,       ///< anchor pair has lhs = 0, so no positive C_{n,m}
    nonzero_on_zero_word ///< B(x) = 0 but lhs ≠ 0
};

struct DependenceCounterexample {
    DependenceFailure kind;
    std::size_t n;
    std::size_t m;
    Word x;
    Word y;
    Rational lhs;
    /// C_{n,m} B(x) B(y) with C_{n,m} from the anchor pair.
    Rational expected;
    Word anchor_x;
    Word anchor_y;
    Rational anchor_lhs;
};

struct DependenceReport {
    std::size_t k = 0;
    std::size_t max_n = 0;
    std::size_t max_m = 0;
    /// Window N used for the property (C) precondition.
    std::size_t consistency_window = 0;
    /// C_{n,m} for every checked (n, m) that passed.
    std::map<std::pair<std::size_t, std::size_t>, Rational> constants;
    std::optional<DependenceCounterexample> counterexample;
    /// Zero-weight x checked to give lhs = 0.
    std::size_t zero_weight_checks = 0;

    bool verified() const noexcept { return !counterexample; }
};

/**
 * @brief Tests Σ_W B(xWy) = C_{n,m} B(x) B(y) for all positive-weight x, y with
 * 1 ≤ |x| ≤ max_n, 1 ≤ |y| ≤ max_m.
 *
 * Property (C) must hold on the window N = max(max_n, max_m) + 1, otherwise
 * Error(precondition). Pairs are visited in (n, m, x, y) lexicographic order and
 * the first failure is reported; C_{n,m} is anchored at the least pair.
 */
DependenceReport check_k_dependence(const WeightedGraph& g, std::size_t k, std::size_t max_n, std::size_t max_m,
                                    std::size_t threads = 1);

struct MinKResult {
    std::optional<std::size_t> k;
    /// One report per k tried, k = 0, 1, ...; every k is checked independently.
    std::vector<DependenceReport> attempts;
};

MinKResult min_k_search(const WeightedGraph& g, std::size_t max_k, std::size_t max_n, std::size_t max_m,
                        std::size_t threads = 1);

struct TriangleCertificate {
    /// True when the graph lacks directed triangles, so no finitely dependent insertion process exists.
    bool not_finitely_dependent = false;
    std::optional<Triple> triangle;
    std::uint64_t triples_scanned = 0;
};

TriangleCertificate triangle_necessity(const WeightedGraph& g);

} // namespace insproc
