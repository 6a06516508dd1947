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

// Shared helpers for the unit tests: 1-based word literals, rational literals,
// fixture loading and small random generators.

#include "insproc/error.hpp"
#include "insproc/graph.hpp"
#include "insproc/json_io.hpp"
#include "insproc/process.hpp"

#include <initializer_list>
#include <string>

namespace test {

using namespace insproc;

/// Word from 1-based symbols, as written in examples.
inline Word W(std::initializer_list<unsigned> one_based) {
    Word x;
    for (unsigned v : one_based)
        x.push_back(static_cast<VertexId>(v - 1));
    return x;
}

inline Rational Q(const char* text) { return parse_rational(text); }

inline WeightedGraph fixture(const std::string& name) {
    return graph_from_json(read_text_file(std::string(INSPROC_FIXTURES) + "/" + name + ".json"));
}

inline ShiftOfFiniteType sft_fixture(const std::string& name) {
    return sft_from_json(read_text_file(std::string(INSPROC_FIXTURES) + "/" + name + ".json"));
}

/// Uniform integer in [0, bound).
inline std::uint64_t below(Rng& rng, std::uint64_t bound) { return rng.next() % bound; }

/// Random symmetric loopless 0/1 graph; each edge present with probability num/den.
inline WeightedGraph random_simple_graph(Rng& rng, std::size_t n, unsigned num = 1, unsigned den = 2) {
    WeightedGraph g(n);
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j)
            if (below(rng, den) < num) {
                g.set_weight(i, j, 1);
                g.set_weight(j, i, 1);
            }
    return g;
}

/// Random directed graph with weights p/q, p ∈ [0, max_num], q ∈ [1, max_den].
inline WeightedGraph random_weighted_graph(Rng& rng, std::size_t n, unsigned max_num = 3, unsigned max_den = 3) {
    WeightedGraph g(n);
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = 0; j < n; ++j)
            g.set_weight(i, j, Rational(static_cast<long>(below(rng, max_num + 1)),
                                        static_cast<long>(1 + below(rng, max_den))));
    return g;
}

inline Word random_word(Rng& rng, std::size_t q, std::size_t n) {
    Word x(n);
    for (auto& v : x)
        v = static_cast<VertexId>(below(rng, q));
    return x;
}

template <class F>
ErrorCode error_code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode{0};
}

} // namespace test
