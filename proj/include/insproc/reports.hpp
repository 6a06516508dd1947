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

// JSON renderings of every report. Words are 1-based arrays, rationals "p/q"
// strings; key order is fixed, so equal inputs give byte-identical output.

#include "insproc/consistency.hpp"
#include "insproc/dependence.hpp"
#include "insproc/json_io.hpp"
#include "insproc/polynomial.hpp"
#include "insproc/process.hpp"
#include "insproc/sft.hpp"

#include <cstdint>
#include <string>

namespace insproc {

Json to_json(const ConsistencyReport& r);
Json to_json(const DependenceReport& r);
Json to_json(const MinKResult& r);
Json to_json(const TriangleCertificate& c);
Json to_json(const TInvarianceReport& r);
Json to_json(const UniformDefect& d);
Json to_json(const UniformLemmaCheck& u);
Json to_json(const KiteObstruction& k, const Kite& kite);
Json to_json(const StationarityReport& r);
Json to_json(const ChiSquareReport& r);
Json to_json(const LRReport& r);
Json to_json(const SftCertificate& c);

/// Structural predicates, property (C) to max_n and the lemma checks that apply.
Json analyze_graph(const WeightedGraph& g, std::size_t max_n, std::size_t threads = 1);

struct SftAnalysis {
    /// L/R counts constant and property (C) verified on the de Bruijn graph.
    bool consistent = false;
    Json json;
};

/// L/R report, de Bruijn property (C) to max_n with the C_n = 2K cross-check, certificate.
SftAnalysis analyze_sft(const ShiftOfFiniteType& s, std::size_t max_n, std::size_t threads = 1);

struct IdentityOptions {
    BoundaryConvention convention = BoundaryConvention::unit_factor;
    /// Longest word in the recurrence-vs-brute-force sweep.
    std::size_t sweep_max_n = 7;
    /// Random rational weight tables on 4 vertices.
    std::size_t random_graphs = 100;
    std::uint64_t seed = 0;
};

struct IdentityReport {
    bool passed = false;
    Json json;
};

/// Symbolic closed forms, B = w·B̃, and the recurrence against brute force on
/// K_2..K_4, the kite and random graphs.
IdentityReport verify_identities(const IdentityOptions& options = {});

/// Random 4-vertex table used by the sweep: weights p/q with p ∈ [0,4], q ∈ [1,3].
WeightedGraph random_sweep_graph(std::uint64_t seed, std::size_t index);

/// Triangle 1-2-3 with pendant 4 on vertex 1, unit weights.
WeightedGraph kite_graph();

/// Flattened "path  value" lines for --pretty.
std::string render_table(const Json& j);

} // namespace insproc
