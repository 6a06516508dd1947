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

#include "insproc/json_io.hpp"
#include "insproc/error.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace insproc {

namespace {

Json parse_document(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        fail(ErrorCode::parse, "malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

const Json& member(const Json& obj, const char* key, const std::string& where) {
    require(obj.is_object(), ErrorCode::parse, where + ": expected an object");
    const auto it = obj.find(key);
    require(it != obj.end(), ErrorCode::parse, where + ": missing \"" + key + "\"");
    return *it;
}

std::size_t positive_int(const Json& j, const std::string& where) {
    require(j.is_number_integer() && j.get<long long>() >= 1, ErrorCode::parse,
            where + ": expected a positive integer");
    return j.get<std::size_t>();
}

/// 1-based symbol in [1, limit], returned 0-based.
VertexId symbol(const Json& j, std::size_t limit, const std::string& where) {
    require(j.is_number_integer(), ErrorCode::parse, where + ": expected an integer");
    const long long v = j.get<long long>();
    require(v >= 1 && static_cast<unsigned long long>(v) <= limit, ErrorCode::parse,
            where + ": " + std::to_string(v) + " outside [1, " + std::to_string(limit) + "]");
    return static_cast<VertexId>(v - 1);
}

Rational weight_value(const Json& j, const std::string& where) {
    try {
        if (j.is_string())
            return parse_rational(j.get<std::string>());
        if (j.is_number_integer())
            return Rational(j.get<long long>());
    } catch (const Error& e) {
        fail(ErrorCode::parse, where + ": " + e.what());
    }
    fail(ErrorCode::parse, where + ": weights must be integers or \"p/q\" strings");
}

} // namespace

WeightedGraph graph_from_json(std::string_view text) {
    const Json doc = parse_document(text);
    const std::size_t n = positive_int(member(doc, "vertices", "graph"), "graph.vertices");
    require(n <= 4096, ErrorCode::limit_exceeded, "graph.vertices: at most 4096 vertices are supported");
    bool undirected = false;
    if (const auto it = doc.find("undirected"); it != doc.end()) {
        require(it->is_boolean(), ErrorCode::parse, "graph.undirected: expected a boolean");
        undirected = it->get<bool>();
    }
    WeightedGraph g(n);
    const Json& weights = member(doc, "weights", "graph");
    require(weights.is_array(), ErrorCode::parse, "graph.weights: expected an array");
    for (std::size_t k = 0; k < weights.size(); ++k) {
        const std::string where = "graph.weights[" + std::to_string(k) + "]";
        const Json& e = weights[k];
        require(e.is_array() && e.size() == 3, ErrorCode::parse, where + ": expected [i, j, weight]");
        const VertexId i = symbol(e[0], n, where + "[0]");
        const VertexId j = symbol(e[1], n, where + "[1]");
        const Rational w = weight_value(e[2], where + "[2]");
        require(w >= 0, ErrorCode::parse, where + ": negative weight");
        g.set_weight(i, j, w);
        if (undirected)
            g.set_weight(j, i, w);
    }
    return g;
}

Json graph_to_json(const WeightedGraph& g) {
    Json weights = Json::array();
    for (VertexId i = 0; i < g.vertex_count(); ++i)
        for (VertexId j : g.out_neighbors(i))
            weights.push_back(Json::array({i + 1, j + 1, to_string(g.weight(i, j))}));
    return Json{{"vertices", g.vertex_count()}, {"weights", std::move(weights)}};
}

ShiftOfFiniteType sft_from_json(std::string_view text) {
    const Json doc = parse_document(text);
    const std::size_t q = positive_int(member(doc, "q", "sft"), "sft.q");
    const std::size_t n = positive_int(member(doc, "n", "sft"), "sft.n");
    require(q <= 256 && n <= 16, ErrorCode::limit_exceeded, "sft: q <= 256 and n <= 16 are supported");
    const Json& allowed = member(doc, "allowed", "sft");
    require(allowed.is_array(), ErrorCode::parse, "sft.allowed: expected an array");
    std::vector<Tuple> tuples;
    for (std::size_t k = 0; k < allowed.size(); ++k) {
        const std::string where = "sft.allowed[" + std::to_string(k) + "]";
        require(allowed[k].is_array(), ErrorCode::parse, where + ": expected an array");
        Tuple t;
        for (std::size_t i = 0; i < allowed[k].size(); ++i)
            t.push_back(symbol(allowed[k][i], q, where + "[" + std::to_string(i) + "]"));
        tuples.push_back(std::move(t));
    }
    return ShiftOfFiniteType(q, n, std::move(tuples));
}

Json sft_to_json(const ShiftOfFiniteType& s) {
    Json allowed = Json::array();
    for (const Tuple& t : s.allowed())
        allowed.push_back(word_to_json(t));
    return Json{{"q", s.alphabet_size()}, {"n", s.window_length()}, {"allowed", std::move(allowed)}};
}

Json word_to_json(std::span<const VertexId> x) {
    Json out = Json::array();
    for (VertexId v : x)
        out.push_back(v + 1);
    return out;
}

Word word_from_json(const Json& j, std::size_t vertex_count) {
    require(j.is_array(), ErrorCode::parse, "word: expected an integer array");
    Word x;
    for (std::size_t i = 0; i < j.size(); ++i)
        x.push_back(symbol(j[i], vertex_count, "word[" + std::to_string(i) + "]"));
    return x;
}

Json rational_to_json(const Rational& r) { return to_string(r); }

std::string batch_to_ndjson(const SampleBatch& batch) {
    std::string out;
    for (const Word& x : batch.words) {
        out.push_back('[');
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (i)
                out.push_back(',');
            out += std::to_string(x[i] + 1);
        }
        out += "]\n";
    }
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(static_cast<bool>(in), ErrorCode::invalid_argument, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace insproc
