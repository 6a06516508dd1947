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

#include "insproc/graph.hpp"
#include "insproc/error.hpp"

#include <algorithm>
#include <string>

namespace insproc {

WeightedGraph::WeightedGraph(std::size_t vertex_count)
    : n_(vertex_count), weights_(vertex_count * vertex_count), positive_(vertex_count * vertex_count, 0),
      out_(vertex_count) {
    require(vertex_count > 0, ErrorCode::invalid_argument, "a graph needs at least one vertex");
}

void WeightedGraph::set_weight(VertexId i, VertexId j, Rational w) {
    require(contains(i) && contains(j), ErrorCode::invalid_argument,
            "vertex out of range in set_weight(" + std::to_string(i) + ", " + std::to_string(j) + ")");
    require(w >= 0, ErrorCode::invalid_argument, "negative weight " + to_string(w));
    const bool was = positive(i, j);
    weights_[index(i, j)] = std::move(w);
    positive_[index(i, j)] = weights_[index(i, j)] > 0;
    if (was != positive(i, j))
        rebuild_row(i);
}

void WeightedGraph::rebuild_row(VertexId i) {
    auto& row = out_[i];
    row.clear();
    for (VertexId j = 0; j < n_; ++j)
        if (positive(i, j))
            row.push_back(j);
}

bool WeightedGraph::is_symmetric() const {
    for (VertexId i = 0; i < n_; ++i)
        for (VertexId j = i + 1; j < n_; ++j)
            if (weight(i, j) != weight(j, i))
                return false;
    return true;
}

bool WeightedGraph::is_loopless() const {
    for (VertexId i = 0; i < n_; ++i)
        if (positive(i, i))
            return false;
    return true;
}

WeightedGraph make_complete(std::size_t q, const Rational& w) {
    require(q >= 1, ErrorCode::invalid_argument, "make_complete: q must be positive");
    return make_multipartite(q, 1, w);
}

WeightedGraph make_multipartite(std::size_t q, std::size_t r, const Rational& w) {
    require(q >= 1 && r >= 1, ErrorCode::invalid_argument, "make_multipartite: q and r must be positive");
    require(w > 0, ErrorCode::invalid_argument, "make_multipartite: weight must be positive");
    WeightedGraph g(q * r);
    for (VertexId i = 0; i < q * r; ++i)
        for (VertexId j = 0; j < q * r; ++j)
            if (i % q != j % q)
                g.set_weight(i, j, w);
    return g;
}

UniformWeightReport uniform_weight(const WeightedGraph& g) {
    UniformWeightReport report;
    const auto n = static_cast<VertexId>(g.vertex_count());
    for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = 0; j < n; ++j) {
            const Rational& wij = g.weight(i, j);
            bool bad = false;
            if (i == j && wij != 0)
                bad = true;
            if (wij != g.weight(j, i))
                bad = true;
            if (wij != 0) {
                if (!report.w)
                    report.w = wij;
                else if (*report.w != wij)
                    bad = true;
            }
            if (bad)
                report.violations.push_back({i, j, wij});
        }
    }
    report.is_uniform = report.w.has_value() && report.violations.empty();
    if (!report.is_uniform)
        report.w.reset();
    return report;
}

TriangleScan scan_directed_triangles(const WeightedGraph& g) {
    TriangleScan scan;
    const auto n = static_cast<VertexId>(g.vertex_count());
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = 0; b < n; ++b)
            for (VertexId c = 0; c < n; ++c) {
                ++scan.triples_scanned;
                if (g.positive(a, b) && g.positive(b, c) && g.positive(a, c)) {
                    scan.witness = Triple{a, b, c};
                    return scan;
                }
            }
    return scan;
}

bool is_strongly_connected(const WeightedGraph& g) {
    const auto n = g.vertex_count();
    auto reaches_all = [&](bool forward) {
        std::vector<char> seen(n, 0);
        std::vector<VertexId> stack{0};
        seen[0] = 1;
        std::size_t count = 1;
        while (!stack.empty()) {
            const VertexId u = stack.back();
            stack.pop_back();
            for (VertexId v = 0; v < n; ++v) {
                const bool edge = forward ? g.positive(u, v) : g.positive(v, u);
                if (edge && !seen[v]) {
                    seen[v] = 1;
                    ++count;
                    stack.push_back(v);
                }
            }
        }
        return count == n;
    };
    return reaches_all(true) && reaches_all(false);
}

namespace {

void require_simple_undirected(const WeightedGraph& g, const char* op) {
    require(g.is_symmetric() && g.is_loopless(), ErrorCode::precondition,
            std::string(op) + " requires a symmetric loopless graph");
}

} // namespace

bool is_kite(const WeightedGraph& g, const Kite& k) {
    require_simple_undirected(g, "is_kite");
    const std::array<VertexId, 4> v{k.a, k.b, k.c, k.d};
    for (std::size_t i = 0; i < 4; ++i) {
        if (!g.contains(v[i]))
            return false;
        for (std::size_t j = i + 1; j < 4; ++j)
            if (v[i] == v[j])
                return false;
    }
    return g.positive(k.a, k.b) && g.positive(k.b, k.c) && g.positive(k.a, k.c) && g.positive(k.d, k.a) &&
           !g.positive(k.d, k.b) && !g.positive(k.d, k.c);
}

std::optional<Kite> find_kite(const WeightedGraph& g) {
    require_simple_undirected(g, "find_kite");
    const auto n = static_cast<VertexId>(g.vertex_count());
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = 0; b < n; ++b)
            for (VertexId c = 0; c < n; ++c)
                for (VertexId d = 0; d < n; ++d) {
                    const Kite k{a, b, c, d};
                    if (a != b && a != c && a != d && b != c && b != d && c != d && is_kite(g, k))
                        return k;
                }
    return std::nullopt;
}

std::optional<std::size_t> regularity(const WeightedGraph& g) {
    const std::size_t d = g.out_neighbors(0).size();
    for (VertexId v = 1; v < g.vertex_count(); ++v)
        if (g.out_neighbors(v).size() != d)
            return std::nullopt;
    return d;
}

std::optional<std::size_t> triangles_per_edge(const WeightedGraph& g) {
    require_simple_undirected(g, "triangles_per_edge");
    const auto n = static_cast<VertexId>(g.vertex_count());
    std::optional<std::size_t> t;
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b : g.out_neighbors(a)) {
            std::size_t common = 0;
            for (VertexId c = 0; c < n; ++c)
                common += g.positive(a, c) && g.positive(b, c);
            if (!t)
                t = common;
            else if (*t != common)
                return std::nullopt;
        }
    return t;
}

MultipartiteClassification classify_multipartite(const WeightedGraph& g) {
    require_simple_undirected(g, "classify_multipartite");
    const auto n = static_cast<VertexId>(g.vertex_count());
    MultipartiteClassification cls;

    // Non-adjacency is reflexive and symmetric here; it is an equivalence iff
    // any two non-adjacent vertices have the same non-neighbourhood.
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = 0; b < n; ++b) {
            if (g.positive(a, b))
                continue;
            for (VertexId c = 0; c < n; ++c)
                if (g.positive(a, c) != g.positive(b, c))
                    return cls;
        }

    cls.part_of.assign(n, 0);
    std::vector<char> assigned(n, 0);
    for (VertexId a = 0; a < n; ++a) {
        if (assigned[a])
            continue;
        std::vector<VertexId> part;
        for (VertexId b = a; b < n; ++b)
            if (!assigned[b] && !g.positive(a, b)) {
                assigned[b] = 1;
                cls.part_of[b] = cls.parts.size();
                part.push_back(b);
            }
        cls.parts.push_back(std::move(part));
    }
    cls.is_complete_multipartite = true;
    cls.q = cls.parts.size();
    cls.r = cls.parts.front().size();
    for (const auto& p : cls.parts)
        if (p.size() != *cls.r) {
            cls.r.reset();
            break;
        }
    return cls;
}

Word block_projection(const WeightedGraph& g, const MultipartiteClassification& cls, std::span<const VertexId> x) {
    require(cls.is_complete_multipartite && cls.part_of.size() == g.vertex_count(), ErrorCode::precondition,
            "block_projection needs a complete multipartite classification of this graph");
    Word out;
    out.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        require(g.contains(x[i]), ErrorCode::invalid_argument,
                "symbol at position " + std::to_string(i + 1) + " is not a vertex");
        out.push_back(static_cast<VertexId>(cls.part_of[x[i]]));
    }
    return out;
}

WeightedGraph quotient_graph(const WeightedGraph& g, const MultipartiteClassification& cls) {
    require(cls.is_complete_multipartite && cls.part_of.size() == g.vertex_count(), ErrorCode::precondition,
            "quotient_graph needs a complete multipartite classification of this graph");
    WeightedGraph h(cls.q);
    for (std::size_t p = 0; p < cls.q; ++p)
        for (std::size_t s = 0; s < cls.q; ++s)
            h.set_weight(static_cast<VertexId>(p), static_cast<VertexId>(s),
                         g.weight(cls.parts[p].front(), cls.parts[s].front()));
    const auto n = static_cast<VertexId>(g.vertex_count());
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = 0; j < n; ++j)
            require(g.weight(i, j) == h.weight(static_cast<VertexId>(cls.part_of[i]),
                                               static_cast<VertexId>(cls.part_of[j])),
                    ErrorCode::precondition, "weights are not constant between parts");
    return h;
}

} // namespace insproc
