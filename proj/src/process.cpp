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

#include "insproc/process.hpp"
#include "insproc/engine.hpp"
#include "insproc/error.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

namespace insproc {

namespace {

using Threshold = unsigned __int128;

/// ⌈F_k · 2^64⌉ for the cumulative distribution of the given nonnegative masses.
std::vector<Threshold> cumulative_thresholds(const std::vector<Rational>& masses) {
    Rational total = 0;
    for (const auto& m : masses)
        total += m;
    require(total > 0, ErrorCode::dead_end, "cannot sample from an all-zero distribution");
    const BigInt two64 = BigInt(1) << 64;
    const BigInt low_mask = two64 - 1;
    std::vector<Threshold> out;
    out.reserve(masses.size());
    Rational cum = 0;
    for (const auto& m : masses) {
        cum += m;
        const Rational scaled = cum * Rational(two64) / total;
        const BigInt num = numerator_of(scaled);
        const BigInt den = denominator_of(scaled);
        const BigInt ceil = (num + den - 1) / den;
        const auto hi = static_cast<std::uint64_t>((ceil >> 64).convert_to<std::uint64_t>());
        const auto lo = static_cast<std::uint64_t>((ceil & low_mask).convert_to<std::uint64_t>());
        out.push_back((static_cast<Threshold>(hi) << 64) | lo);
    }
    return out;
}

std::size_t pick(const std::vector<Threshold>& thresholds, std::uint64_t u) {
    const auto it = std::upper_bound(thresholds.begin(), thresholds.end(), static_cast<Threshold>(u));
    return static_cast<std::size_t>(it - thresholds.begin());
}

void check_enumeration(const WeightedGraph& g, std::size_t n, std::uint64_t bound) {
    long double size = 1;
    for (std::size_t i = 0; i < n; ++i)
        size *= static_cast<long double>(g.vertex_count());
    require(size <= static_cast<long double>(bound), ErrorCode::limit_exceeded,
            "|V|^n = " + std::to_string(g.vertex_count()) + "^" + std::to_string(n) +
                " exceeds the enumeration limit of " + std::to_string(bound) + " words");
}

} // namespace

Rational Marginal::probability(const Word& x) const {
    const auto it = std::lower_bound(words.begin(), words.end(), x);
    if (it == words.end() || *it != x)
        return 0;
    return probabilities[static_cast<std::size_t>(it - words.begin())];
}

Marginal marginal(const WeightedGraph& g, std::size_t n, std::uint64_t enumeration_bound) {
    check_enumeration(g, n, enumeration_bound);
    Marginal law;
    law.length = n;
    law.words = positive_words(g, n);
    FastCounter counter(g);
    std::vector<Rational> counts;
    counts.reserve(law.words.size());
    law.normalizer = 0;
    for (const Word& x : law.words) {
        counts.push_back(counter.b(x));
        law.normalizer += counts.back();
    }
    require(law.normalizer > 0, ErrorCode::dead_end, "no positive-weight word of length " + std::to_string(n));
    law.probabilities.reserve(counts.size());
    for (auto& c : counts)
        law.probabilities.push_back(c / law.normalizer);
    return law;
}

StationarityReport stationarity_check(const WeightedGraph& g, std::size_t n) {
    const Marginal shorter = marginal(g, n);
    const Marginal longer = marginal(g, n + 1);
    std::map<Word, Rational> prefix_sums;
    std::map<Word, Rational> suffix_sums;
    for (std::size_t i = 0; i < longer.words.size(); ++i) {
        const Word& y = longer.words[i];
        prefix_sums[Word(y.begin(), y.end() - 1)] += longer.probabilities[i];
        suffix_sums[Word(y.begin() + 1, y.end())] += longer.probabilities[i];
    }
    StationarityReport report;
    report.max_defect = 0;
    auto track = [&](const Rational& a, const Rational& b) {
        const Rational d = a > b ? Rational(a - b) : Rational(b - a);
        if (d > report.max_defect)
            report.max_defect = d;
    };
    for (std::size_t i = 0; i < shorter.words.size(); ++i) {
        const Word& x = shorter.words[i];
        const auto p = prefix_sums.find(x);
        const auto s = suffix_sums.find(x);
        track(shorter.probabilities[i], p == prefix_sums.end() ? Rational(0) : p->second);
        track(shorter.probabilities[i], s == suffix_sums.end() ? Rational(0) : s->second);
    }
    for (const auto* sums : {&prefix_sums, &suffix_sums})
        for (const auto& [x, p] : *sums)
            track(shorter.probability(x), p);
    report.stationary = report.max_defect == 0;
    return report;
}

std::uint64_t Rng::splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t Rng::split(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ull));
}

Rng::Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

SampleBatch sample_exact(const Marginal& law, std::uint64_t seed, std::size_t count, std::size_t threads) {
    SampleBatch batch;
    batch.seed = seed;
    batch.length = law.length;
    if (count == 0)
        return batch;
    const std::vector<Threshold> thresholds = cumulative_thresholds(law.probabilities);
    std::vector<std::size_t> picks(count);
    const std::size_t chunks = (count + kSampleChunk - 1) / kSampleChunk;
    auto run = [&](std::size_t first_chunk, std::size_t stride) {
        for (std::size_t c = first_chunk; c < chunks; c += stride) {
            Rng rng(Rng::split(seed, c));
            const std::size_t end = std::min(count, (c + 1) * kSampleChunk);
            for (std::size_t i = c * kSampleChunk; i < end; ++i)
                picks[i] = pick(thresholds, rng.next());
        }
    };
    threads = std::max<std::size_t>(1, std::min(threads, chunks));
    if (threads == 1) {
        run(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t)
            pool.emplace_back(run, t, threads);
        for (auto& th : pool)
            th.join();
    }
    batch.words.reserve(count);
    for (std::size_t i : picks)
        batch.words.push_back(law.words[i]);
    return batch;
}

SampleBatch sample_exact(const WeightedGraph& g, std::size_t n, std::uint64_t seed, std::size_t count,
                         std::size_t threads) {
    return sample_exact(marginal(g, n), seed, count, threads);
}

namespace {

/// Weights of inserting v at location loc (0 = before x_1, |x| = after x_n), row-major by location.
std::vector<Rational> insertion_weights(const WeightedGraph& g, const Word& x) {
    const std::size_t q = g.vertex_count();
    const std::size_t len = x.size();
    std::vector<Rational> w;
    w.reserve((len + 1) * q);
    for (std::size_t loc = 0; loc <= len; ++loc)
        for (VertexId v = 0; v < q; ++v) {
            Rational factor = 1;
            if (loc > 0)
                factor *= g.weight(x[loc - 1], v);
            if (loc < len)
                factor *= g.weight(v, x[loc]);
            w.push_back(std::move(factor));
        }
    return w;
}

} // namespace

Rational insertion_step_normalizer(const WeightedGraph& g, const Word& x) {
    Rational total = 0;
    for (const auto& w : insertion_weights(g, x))
        total += w;
    return total;
}

InsertionTrace sample_insertion(const WeightedGraph& g, std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    Word x;
    std::vector<std::uint32_t> arrival; // arrival[p] = time the symbol now at p arrived
    const std::size_t q = g.vertex_count();
    for (std::size_t step = 0; step < n; ++step) {
        const std::vector<Rational> weights = insertion_weights(g, x);
        bool any = false;
        for (const auto& w : weights)
            any = any || w > 0;
        require(any, ErrorCode::dead_end,
                "insertion dead end at length " + std::to_string(step) + ": every choice has weight 0");
        const std::size_t choice = pick(cumulative_thresholds(weights), rng.next());
        const std::size_t loc = choice / q;
        const auto v = static_cast<VertexId>(choice % q);
        x.insert(x.begin() + static_cast<std::ptrdiff_t>(loc), v);
        arrival.insert(arrival.begin() + static_cast<std::ptrdiff_t>(loc), static_cast<std::uint32_t>(step));
    }
    std::vector<std::uint32_t> order(n);
    for (std::uint32_t p = 0; p < n; ++p)
        order[arrival[p]] = p;
    return {std::move(x), BuildOrder(std::move(order))};
}

std::map<Word, Rational> insertion_law(const WeightedGraph& g, std::size_t n) {
    const std::size_t q = g.vertex_count();
    std::map<Word, Rational> law{{Word{}, Rational(1)}};
    for (std::size_t step = 0; step < n; ++step) {
        std::map<Word, Rational> next;
        for (const auto& [x, p] : law) {
            const std::vector<Rational> weights = insertion_weights(g, x);
            Rational total = 0;
            for (const auto& w : weights)
                total += w;
            require(total > 0, ErrorCode::dead_end, "insertion dead end at length " + std::to_string(step));
            for (std::size_t c = 0; c < weights.size(); ++c) {
                if (weights[c] == 0)
                    continue;
                Word y = x;
                y.insert(y.begin() + static_cast<std::ptrdiff_t>(c / q), static_cast<VertexId>(c % q));
                next[std::move(y)] += p * weights[c] / total;
            }
        }
        law = std::move(next);
    }
    return law;
}

Rational insertion_total_variation(const WeightedGraph& g, std::size_t n) {
    const std::map<Word, Rational> law = insertion_law(g, n);
    const Marginal exact = marginal(g, n);
    Rational sum = 0;
    auto add_abs = [&](const Rational& d) { sum += d < 0 ? Rational(-d) : d; };
    for (const auto& [x, p] : law)
        add_abs(p - exact.probability(x));
    for (std::size_t i = 0; i < exact.words.size(); ++i)
        if (!law.contains(exact.words[i]))
            add_abs(exact.probabilities[i]);
    return sum / 2;
}

PairLaw position_pair_law(const WeightedGraph& g, std::size_t n, std::size_t i, std::size_t j) {
    require(i < j && j < n, ErrorCode::invalid_argument, "position_pair_law needs 0 <= i < j < n");
    const std::size_t q = g.vertex_count();
    const Marginal law = marginal(g, n);
    const Marginal single = marginal(g, 1);
    PairLaw out;
    out.vertex_count = q;
    out.joint.assign(q * q, Rational(0));
    out.product.assign(q * q, Rational(0));
    for (std::size_t k = 0; k < law.words.size(); ++k)
        out.joint[law.words[k][i] * q + law.words[k][j]] += law.probabilities[k];
    for (VertexId a = 0; a < q; ++a)
        for (VertexId b = 0; b < q; ++b)
            out.product[a * q + b] = single.probability(Word{a}) * single.probability(Word{b});
    out.total_variation = 0;
    for (std::size_t c = 0; c < q * q; ++c) {
        const Rational d = out.joint[c] - out.product[c];
        out.total_variation += d < 0 ? Rational(-d) : d;
    }
    out.total_variation /= 2;
    return out;
}

ChiSquareReport empirical_gap_independence(const WeightedGraph& g, const SampleBatch& batch, std::size_t gap) {
    require(batch.length >= gap + 2, ErrorCode::invalid_argument,
            "gap " + std::to_string(gap) + " needs words of length >= " + std::to_string(gap + 2));
    const std::size_t q = g.vertex_count();
    const Marginal single = marginal(g, 1);
    std::vector<std::uint64_t> observed(q * q, 0);
    for (const Word& x : batch.words) {
        require(x.size() == batch.length, ErrorCode::invalid_argument, "batch word has the wrong length");
        ++observed[x[0] * q + x[gap + 1]];
    }

    ChiSquareReport report;
    report.gap = gap;
    report.samples = batch.words.size();
    const double total = static_cast<double>(batch.words.size());
    std::size_t cells = 0;
    bool impossible = false;
    double stat = 0;
    for (VertexId a = 0; a < q; ++a)
        for (VertexId b = 0; b < q; ++b) {
            const double expected =
                to_double(single.probability(Word{a}) * single.probability(Word{b})) * total;
            const double obs = static_cast<double>(observed[a * q + b]);
            if (expected == 0) {
                impossible = impossible || obs > 0;
                continue;
            }
            ++cells;
            stat += (obs - expected) * (obs - expected) / expected;
        }
    report.degrees_of_freedom = cells > 0 ? cells - 1 : 0;
    if (impossible) {
        report.statistic = std::numeric_limits<double>::infinity();
        report.p_value = 0;
    } else {
        report.statistic = stat;
        report.p_value = report.degrees_of_freedom == 0
                             ? 1.0
                             : boost::math::gamma_q(static_cast<double>(report.degrees_of_freedom) / 2, stat / 2);
    }
    report.reject = report.p_value < report.significance;
    return report;
}

} // namespace insproc
