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

#include "insproc/sft.hpp"
#include "insproc/error.hpp"

#include <algorithm>
#include <string>

namespace insproc {

namespace {

bool overlaps(const Tuple& s, const Tuple& t) {
    return std::equal(s.begin() + 1, s.end(), t.begin(), t.end() - 1);
}

} // namespace

ShiftOfFiniteType::ShiftOfFiniteType(std::size_t q, std::size_t n, std::vector<Tuple> allowed)
    : q_(q), n_(n), allowed_(std::move(allowed)) {
    require(q >= 1, ErrorCode::invalid_argument, "alphabet size must be >= 1");
    require(n >= 2, ErrorCode::invalid_argument, "window length must be >= 2");
    require(!allowed_.empty(), ErrorCode::invalid_argument, "allowed set is empty");
    for (const Tuple& t : allowed_) {
        require(t.size() == n, ErrorCode::invalid_argument,
                "allowed tuple of length " + std::to_string(t.size()) + ", expected " + std::to_string(n));
        for (VertexId v : t)
            require(v < q, ErrorCode::invalid_argument, "symbol " + std::to_string(v + 1) + " outside [1, q]");
        require(std::any_of(t.begin(), t.end(), [&](VertexId v) { return v != t.front(); }),
                ErrorCode::invalid_argument,
                "constant tuple of symbol " + std::to_string(t.front() + 1) + " is not allowed (loopless)");
    }
    std::sort(allowed_.begin(), allowed_.end());
    allowed_.erase(std::unique(allowed_.begin(), allowed_.end()), allowed_.end());
}

bool ShiftOfFiniteType::contains(const Tuple& t) const {
    return std::binary_search(allowed_.begin(), allowed_.end(), t);
}

std::optional<VertexId> ShiftOfFiniteType::index_of(const Tuple& t) const {
    const auto it = std::lower_bound(allowed_.begin(), allowed_.end(), t);
    if (it == allowed_.end() || *it != t)
        return std::nullopt;
    return static_cast<VertexId>(it - allowed_.begin());
}

ShiftOfFiniteType proper_coloring_shift(std::size_t q) {
    std::vector<Tuple> allowed;
    for (VertexId a = 0; a < q; ++a)
        for (VertexId b = 0; b < q; ++b)
            if (a != b)
                allowed.push_back({a, b});
    return ShiftOfFiniteType(q, 2, std::move(allowed));
}

WeightedGraph de_bruijn(const ShiftOfFiniteType& s) {
    const auto& w = s.allowed();
    WeightedGraph g(w.size());
    for (VertexId i = 0; i < w.size(); ++i)
        for (VertexId j = 0; j < w.size(); ++j)
            if (overlaps(w[i], w[j]))
                g.set_weight(i, j, 1);
    return g;
}

LRReport check_lr(const ShiftOfFiniteType& s) {
    const WeightedGraph g = de_bruijn(s);
    const auto& w = s.allowed();
    std::vector<std::size_t> in(w.size(), 0);
    for (VertexId i = 0; i < w.size(); ++i)
        for (VertexId j : g.out_neighbors(i))
            ++in[j];

    LRReport report;
    const std::size_t k = in[0];
    for (VertexId i = 0; i < w.size(); ++i) {
        const std::size_t out = g.out_neighbors(i).size();
        if (in[i] != k || out != k) {
            report.violation = LRViolation{w[i], in[i], out, w[0], k};
            return report;
        }
    }
    report.is_constant = true;
    report.K = k;
    return report;
}

Word project(std::span<const Tuple> path) {
    require(!path.empty(), ErrorCode::invalid_argument, "project needs at least one tuple");
    const std::size_t n = path.front().size();
    require(n >= 1, ErrorCode::invalid_argument, "project needs non-empty tuples");
    Word out(path.front().begin(), path.front().end());
    for (std::size_t l = 1; l < path.size(); ++l) {
        const Tuple& t = path[l];
        require(t.size() == n, ErrorCode::invalid_argument,
                "tuple " + std::to_string(l + 1) + " has length " + std::to_string(t.size()) + ", expected " +
                    std::to_string(n));
        for (std::size_t i = 0; i + 1 < n; ++i)
            require(path[l - 1][i + 1] == t[i], ErrorCode::invalid_argument,
                    "overlap mismatch between tuples " + std::to_string(l) + " and " + std::to_string(l + 1) +
                        " at symbol position " + std::to_string(l + i + 1));
        out.push_back(t.back());
    }
    return out;
}

bool satisfies_windows(const ShiftOfFiniteType& s, std::span<const VertexId> x) {
    const std::size_t n = s.window_length();
    for (std::size_t i = 0; i + n <= x.size(); ++i)
        if (!s.contains(Tuple(x.begin() + static_cast<std::ptrdiff_t>(i),
                              x.begin() + static_cast<std::ptrdiff_t>(i + n))))
            return false;
    return true;
}

SampleBatch sample_sft(const ShiftOfFiniteType& s, std::size_t window, std::uint64_t seed, std::size_t count,
                       std::size_t threads) {
    require(window >= 1, ErrorCode::invalid_argument, "sample_sft needs window >= 1");
    const LRReport lr = check_lr(s);
    require(lr.is_constant, ErrorCode::precondition, "sample_sft: the L/R counts are not constant");
    require(*lr.K >= 1, ErrorCode::precondition, "sample_sft: K = 0, no allowed tuple extends");
    const std::size_t n = s.window_length();
    const std::size_t path_length = window >= n ? window - n + 1 : 1;
    const SampleBatch tuples = sample_exact(de_bruijn(s), path_length, seed, count, threads);

    SampleBatch out;
    out.seed = seed;
    out.length = window;
    out.words.reserve(tuples.words.size());
    std::vector<Tuple> path;
    for (const Word& ids : tuples.words) {
        path.clear();
        for (VertexId id : ids)
            path.push_back(s.allowed()[id]);
        Word x = project(path);
        x.resize(window);
        out.words.push_back(std::move(x));
    }
    return out;
}

SftCertificate not_finitely_dependent_certificate(const ShiftOfFiniteType& s) {
    const WeightedGraph g = de_bruijn(s);
    SftCertificate cert;
    cert.de_bruijn_vertices = g.vertex_count();
    cert.scan = scan_directed_triangles(g);
    cert.issued = !cert.scan.witness.has_value();
    return cert;
}

} // namespace insproc
