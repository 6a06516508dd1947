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
#include "insproc/sft.hpp"

#include <json.hpp>

#include <span>
#include <string>
#include <string_view>

namespace insproc {

using Json = nlohmann::ordered_json;

/**
 * Graph documents:
 *
 *   {"vertices": 3, "undirected": true, "weights": [[1, 2, "1"], [1, 3, "1/2"], ...]}
 *
 * Vertices are 1-based, weights are exact ("p/q" strings or integers), unlisted
 * pairs weigh 0. With "undirected" each entry also sets the reverse pair.
 * Errors carry Error(parse) with the byte offset or the offending JSON path.
 */
WeightedGraph graph_from_json(std::string_view text);
/// Directed listing of every positive weight, 1-based, rationals as strings.
Json graph_to_json(const WeightedGraph& g);

/// {"q": 3, "n": 2, "allowed": [[1, 2], [1, 3], ...]}, symbols 1-based.
ShiftOfFiniteType sft_from_json(std::string_view text);
Json sft_to_json(const ShiftOfFiniteType& s);

/// 1-based integer array.
Json word_to_json(std::span<const VertexId> x);
Word word_from_json(const Json& j, std::size_t vertex_count);
Json rational_to_json(const Rational& r);

/// One 1-based integer array per line.
std::string batch_to_ndjson(const SampleBatch& batch);

/// Whole file as a string; Error(invalid_argument) when unreadable.
std::string read_text_file(const std::string& path);

} // namespace insproc
