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

#include "insproc/dependence.hpp"
#include "insproc/consistency.hpp"
#include "insproc/engine.hpp"
#include "insproc/error.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <string>

namespace insproc {

namespace {

constexpr std::size_t kZeroWeightSamples = 4;
constexpr std::size_t kZeroWeightScanLimit = 200000;

/// middles[u * n + v]: every positive-weight W of length k with u W v a walk.
template <class S>
std::vector<std::vector<Word>> middle_words(const WeightTable<S>& t, std::size_t k) {
    std::vector<std::vector<Word>> middles(t.n * t.n);
    for (VertexId u = 0; u < t.n; ++u) {
        if (k == 0) {
            for (VertexId v : t.out[u])
                middles[u * t.n + v].push_back(Word{});
            continue;
        }
        Word w(k);
        auto rec = [&](auto&& self, VertexId prev, std::size_t pos) -> void {
            if (pos == k) {
                for (VertexId v : t.out[prev])
                    middles[u * t.n + v].push_back(w);
                return;
            }
            for (VertexId next : t.out[prev]) {
                w[pos] = next;
                self(self, next, pos + 1);
            }
        };
        rec(rec, u, 0);
    }
    return middles;
}

template <class S>
S lhs_sum(IntervalCounter<S>& counter, const WeightTable<S>& t, const std::vector<std::vector<Word>>& middles,
          const Word& x, const Word& y, Word& z) {
    S total{0};
    const auto& mids = middles[static_cast<std::size_t>(x.back()) * t.n + y.front()];
    if (mids.empty())
        return total;
    const std::size_t k = mids.front().size();
    z.resize(x.size() + k + y.size());
    std::copy(x.begin(), x.end(), z.begin());
    std::copy(y.begin(), y.end(), z.begin() + static_cast<std::ptrdiff_t>(x.size() + k));
    for (const Word& w : mids) {
        std::copy(w.begin(), w.end(), z.begin() + static_cast<std::ptrdiff_t>(x.size()));
        total += counter(t, z, CountKind::building);
    }
    return total;
}

/// Σ over all V^k middles, zero-weight ones included; for words with B(x) = 0.
template <class S>
S lhs_sum_unrestricted(IntervalCounter<S>& counter, const WeightTable<S>& t, const Word& x, const Word& y,
                       std::size_t k) {
    S total{0};
    Word z(x.size() + k + y.size());
    std::copy(x.begin(), x.end(), z.begin());
    std::copy(y.begin(), y.end(), z.begin() + static_cast<std::ptrdiff_t>(x.size() + k));
    std::vector<VertexId> digits(k, 0);
    while (true) {
        std::copy(digits.begin(), digits.end(), z.begin() + static_cast<std::ptrdiff_t>(x.size()));
        total += counter(t, z, CountKind::building);
        std::size_t i = 0;
        while (i < k && ++digits[k - 1 - i] == t.n)
            digits[k - 1 - i++] = 0;
        if (i == k)
            break;
    }
    return total;
}

template <class S>
std::vector<Word> zero_weight_words(const WeightTable<S>& t, std::size_t n) {
    std::vector<Word> found;
    std::vector<VertexId> digits(n, 0);
    for (std::size_t scanned = 0; scanned < kZeroWeightScanLimit && found.size() < kZeroWeightSamples; ++scanned) {
        bool positive = true;
        for (std::size_t i = 0; i + 1 < n && positive; ++i)
            positive = !is_zero(t(digits[i], digits[i + 1]));
        if (!positive)
            found.push_back(digits);
        std::size_t i = 0;
        while (i < n && ++digits[n - 1 - i] == t.n)
            digits[n - 1 - i++] = 0;
        if (i == n)
            break;
    }
    return found;
}

template <class S>
void dependence_impl(DependenceReport& report, const WeightTable<S>& t, std::size_t threads) {
    const std::size_t k = report.k;
    const auto middles = middle_words(t, k);
    std::vector<std::vector<Word>> words(std::max(report.max_n, report.max_m) + 1);
    std::vector<std::vector<S>> counts(words.size());
    {
        IntervalCounter<S> counter;
        for (std::size_t len = 1; len < words.size(); ++len) {
            for_each_positive_word(t.out, t.n, len, [&](const Word& x) { words[len].push_back(x); });
            for (const Word& x : words[len])
                counts[len].push_back(counter(t, x, CountKind::building));
        }
    }

    for (std::size_t n = 1; n <= report.max_n; ++n) {
        for (std::size_t m = 1; m <= report.max_m; ++m) {
            const auto& xs = words[n];
            const auto& ys = words[m];
            if (xs.empty() || ys.empty())
                continue;
            const unsigned lhs_exp = count_scale_exponent(n + k + m);
            auto as_rational_b = [&](std::size_t len, std::size_t i) {
                return unscale(counts[len][i], t.scale, count_scale_exponent(len));
            };

            IntervalCounter<S> anchor_counter;
            Word z;
            const S anchor = lhs_sum(anchor_counter, t, middles, xs.front(), ys.front(), z);
            const Rational anchor_lhs = unscale(anchor, t.scale, lhs_exp);
            const Rational anchor_b = as_rational_b(n, 0) * as_rational_b(m, 0);
            if (is_zero(anchor)) {
                report.counterexample = DependenceCounterexample{
                    DependenceFailure::zero_constant, n, m, xs.front(), ys.front(), Rational(0), Rational(0),
                    xs.front(), ys.front(), Rational(0)};
                return;
            }
            const Rational c_nm = anchor_lhs / anchor_b;
            const S anchor_bb = counts[n][0] * counts[m][0];

            struct State {
                IntervalCounter<S> counter;
                Word z;
            };
            auto failure = detail::first_failure<DependenceCounterexample>(
                xs.size() * ys.size(), threads, [] { return State{}; },
                [&](State& st, std::size_t idx) -> std::optional<DependenceCounterexample> {
                    const std::size_t ix = idx / ys.size();
                    const std::size_t iy = idx % ys.size();
                    const S lhs = lhs_sum(st.counter, t, middles, xs[ix], ys[iy], st.z);
                    if (lhs * anchor_bb == anchor * (counts[n][ix] * counts[m][iy]))
                        return std::nullopt;
                    return DependenceCounterexample{DependenceFailure::mismatch,
                                                    n,
                                                    m,
                                                    xs[ix],
                                                    ys[iy],
                                                    unscale(lhs, t.scale, lhs_exp),
                                                    c_nm * as_rational_b(n, ix) * as_rational_b(m, iy),
                                                    xs.front(),
                                                    ys.front(),
                                                    anchor_lhs};
                });
            if (failure) {
                report.counterexample = std::move(failure);
                return;
            }

            for (const Word& x : zero_weight_words(t, n)) {
                const S lhs = lhs_sum_unrestricted(anchor_counter, t, x, ys.front(), k);
                ++report.zero_weight_checks;
                if (!is_zero(lhs)) {
                    report.counterexample = DependenceCounterexample{DependenceFailure::nonzero_on_zero_word,
                                                                     n,
                                                                     m,
                                                                     x,
                                                                     ys.front(),
                                                                     unscale(lhs, t.scale, lhs_exp),
                                                                     Rational(0),
                                                                     xs.front(),
                                                                     ys.front(),
                                                                     anchor_lhs};
                    return;
                }
            }
            report.constants.emplace(std::make_pair(n, m), c_nm);
        }
    }
}

} // namespace

Rational k_dep_lhs(const WeightedGraph& g, const Word& x, const Word& y, std::size_t k) {
    for (VertexId v : x)
        require(g.contains(v), ErrorCode::invalid_argument, "k_dep_lhs: symbol of x is not a vertex");
    for (VertexId v : y)
        require(g.contains(v), ErrorCode::invalid_argument, "k_dep_lhs: symbol of y is not a vertex");
    require(!x.empty() && !y.empty(), ErrorCode::invalid_argument, "k_dep_lhs needs non-empty x and y");
    if (auto t = integer_table(g)) {
        try {
            IntervalCounter<CheckedInt> counter;
            Word z;
            return unscale(lhs_sum(counter, *t, middle_words(*t, k), x, y, z), t->scale,
                           count_scale_exponent(x.size() + k + y.size()));
        } catch (const Overflow&) {
        }
    }
    const auto t = rational_table(g);
    IntervalCounter<Rational> counter;
    Word z;
    return lhs_sum(counter, t, middle_words(t, k), x, y, z);
}

DependenceReport check_k_dependence(const WeightedGraph& g, std::size_t k, std::size_t max_n, std::size_t max_m,
                                    std::size_t threads) {
    require(max_n >= 1 && max_m >= 1, ErrorCode::invalid_argument, "check_k_dependence needs window sizes >= 1");
    DependenceReport report;
    report.k = k;
    report.max_n = max_n;
    report.max_m = max_m;
    report.consistency_window = std::max(max_n, max_m) + 1;
    const ConsistencyReport consistency = check_property_c(g, report.consistency_window, threads);
    require(consistency.verified(), ErrorCode::precondition,
            "property (C) fails on the window N = " + std::to_string(report.consistency_window) +
                "; k-dependence is undefined");

    if (auto t = integer_table(g)) {
        try {
            dependence_impl(report, *t, threads);
            return report;
        } catch (const Overflow&) {
            report.constants.clear();
            report.counterexample.reset();
            report.zero_weight_checks = 0;
        }
    }
    dependence_impl(report, rational_table(g), threads);
    return report;
}

MinKResult min_k_search(const WeightedGraph& g, std::size_t max_k, std::size_t max_n, std::size_t max_m,
                        std::size_t threads) {
    MinKResult result;
    for (std::size_t k = 0; k <= max_k; ++k) {
        result.attempts.push_back(check_k_dependence(g, k, max_n, max_m, threads));
        if (result.attempts.back().verified()) {
            result.k = k;
            break;
        }
    }
    return result;
}

TriangleCertificate triangle_necessity(const WeightedGraph& g) {
    const TriangleScan scan = scan_directed_triangles(g);
    TriangleCertificate cert;
    cert.not_finitely_dependent = !scan.witness.has_value();
    cert.triangle = scan.witness;
    cert.triples_scanned = scan.triples_scanned;
    return cert;
}

} // namespace insproc
