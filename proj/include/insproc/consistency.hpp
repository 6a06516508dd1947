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
#include <optional>
#include <utility>
#include <vector>

namespace insproc {

enum class Side { left, right };

struct ConsistencyCounterexample {
    std::size_t n;
    Word word;
    Side side;
    /// Ratio observed at word on the given side.
    Rational observed;
    /// C_n taken from the lexicographically least positive word of length n.
    Rational expected;
    Word anchor;
};

/**
 * @brief Outcome of a bounded-window property (C) check.
 *
 * verified_up_to is the largest N' ≤ N such that every length n < N' passed;
 * constants holds C_1..C_{N'-1} and is empty when a counterexample exists.
 */
struct ConsistencyReport {
    std::size_t requested = 0;
    std::size_t verified_up_to = 0;
    std::vector<Rational> constants;
    std::optional<ConsistencyCounterexample> counterexample;
    /// Set when some length has no positive-weight word; verification stops there.
    std::optional<std::size_t> degenerate_at;

    bool verified() const noexcept { return !counterexample && !degenerate_at; }
};

/**
 * @brief Checks Σ_v B̃(xv) w(x_n,v) = Σ_v w(v,x_1) B̃(vx) = C_n B̃(x) for every
 * positive-weight word of length 1 ≤ n < N.
 *
 * Ratios are compared by cross-multiplication. The reported counterexample is
 * the first failure in (n, word, side) order regardless of thread count.
 */
ConsistencyReport check_property_c(const WeightedGraph& g, std::size_t max_n, std::size_t threads = 1);

/// Σ_v w(i,v)^⌈n/2⌉ w(j,v)^⌊n/2⌋ with 0^0 = 1. Requires i ≠ j, n ≥ 1.
Rational t_n(const WeightedGraph& g, VertexId i, VertexId j, std::size_t n);

struct TInvarianceReport {
    bool invariant = true;
    /// T_1..T_N when invariant.
    std::vector<Rational> values;
    struct Witness {
        std::size_t n;
        std::pair<VertexId, VertexId> pair;
        std::pair<VertexId, VertexId> reference;
        Rational value;
        Rational reference_value;
    };
    std::optional<Witness> witness;
};

/// Requires a loopless graph with every off-diagonal weight positive, and max_n ≥ 1.
TInvarianceReport check_t_invariance(const WeightedGraph& g, std::size_t max_n);

/// C_1 = 2wd and t = (C_2 − C_1)/w² for a uniform-weight graph with property (C).
struct UniformLemmaCheck {
    Rational w;
    std::optional<std::size_t> degree;
    std::optional<std::size_t> triangles_per_edge;
    Rational c1;
    Rational c2;
    bool c1_holds = false;
    bool t_holds = false;
    bool holds() const noexcept { return c1_holds && t_holds; }
};

/// Absent unless g has uniform weight and the report verified C_1 and C_2.
std::optional<UniformLemmaCheck> uniform_lemmas(const WeightedGraph& g, const ConsistencyReport& report);

struct UniformDefect {
    Rational closed_form;
    /// Σ over v adjacent to 1 of B̃(121v)/B̃(121) − B̃(321v)/B̃(321) on w·K_q.
    Rational direct_sum;
    bool agree() const { return closed_form == direct_sum; }
};

/// w(w−1)(q/2 − (w+1)/(w+2)), cross-checked against the direct sum. Requires q ≥ 3.
UniformDefect unif_defect(std::size_t q, const Rational& w);

struct KiteObstruction {
    /// Σ_v [B̃(babv) − B̃(dabv)] w(b,v)
    Rational lhs;
    /// B̃(bab) − B̃(dab)
    Rational bracket;
    /// C_3 · bracket, with C_3 = 0 when not supplied.
    Rational rhs;
    /// Summand at v = c, equal to 2w³.
    Rational term_at_c;
    std::vector<Rational> terms;
};

/// Requires kite to be an induced kite of g and g to have uniform weight.
KiteObstruction kite_obstruction(const WeightedGraph& g, const Kite& kite,
                                 const std::optional<Rational>& c3 = std::nullopt);

} // namespace insproc
