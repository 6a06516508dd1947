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

#include "insproc/engine.hpp"
#include "insproc/error.hpp"

#include <array>

namespace insproc {

namespace {

constexpr unsigned kMaxBinomial = 62;

const std::array<std::array<std::int64_t, kMaxBinomial + 1>, kMaxBinomial + 1>& pascal() {
    static const auto table = [] {
        std::array<std::array<std::int64_t, kMaxBinomial + 1>, kMaxBinomial + 1> t{};
        for (unsigned n = 0; n <= kMaxBinomial; ++n) {
            t[n][0] = 1;
            for (unsigned k = 1; k <= n; ++k)
                t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
        }
        return t;
    }();
    return table;
}

// Keeps products of a handful of weights well inside 64 bits.
constexpr std::int64_t kMaxScaledWeight = std::int64_t{1} << 31;

} // namespace

std::int64_t binomial(unsigned n, unsigned k) {
    require(n <= kMaxBinomial, ErrorCode::limit_exceeded, "word too long for the interval counter");
    return k > n ? 0 : pascal()[n][k];
}

WeightTable<Rational> rational_table(const WeightedGraph& g) {
    WeightTable<Rational> t;
    t.n = g.vertex_count();
    t.boundary = 1;
    t.scale = 1;
    t.w.reserve(t.n * t.n);
    for (VertexId i = 0; i < t.n; ++i)
        for (VertexId j = 0; j < t.n; ++j)
            t.w.push_back(g.weight(i, j));
    t.out.resize(t.n);
    for (VertexId i = 0; i < t.n; ++i)
        t.out[i].assign(g.out_neighbors(i).begin(), g.out_neighbors(i).end());
    return t;
}

std::optional<WeightTable<CheckedInt>> integer_table(const WeightedGraph& g) {
    const std::size_t n = g.vertex_count();
    BigInt scale = 1;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = 0; j < n; ++j) {
            const BigInt den = denominator_of(g.weight(i, j));
            scale = scale / boost::multiprecision::gcd(scale, den) * den;
            if (scale > kMaxScaledWeight)
                return std::nullopt;
        }
    WeightTable<CheckedInt> t;
    t.n = n;
    t.scale = scale.convert_to<std::int64_t>();
    t.boundary = t.scale;
    t.w.reserve(n * n);
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = 0; j < n; ++j) {
            const Rational scaled = g.weight(i, j) * Rational(scale);
            const BigInt num = numerator_of(scaled);
            if (num > kMaxScaledWeight)
                return std::nullopt;
            t.w.emplace_back(num.convert_to<std::int64_t>());
        }
    t.out.resize(n);
    for (VertexId i = 0; i < n; ++i)
        t.out[i].assign(g.out_neighbors(i).begin(), g.out_neighbors(i).end());
    return t;
}

Rational unscale(const CheckedInt& value, std::int64_t scale, unsigned exponent) {
    BigInt den = 1;
    for (unsigned i = 0; i < exponent; ++i)
        den *= scale;
    return Rational(BigInt(value.value()), den);
}

template <class Scalar>
Scalar IntervalCounter<Scalar>::operator()(const WeightTable<Scalar>& table, std::span<const VertexId> x,
                                           CountKind kind) {
    // Positions 0 and L+1 are virtual ends; dp[a][b] counts weighted arrival
    // orders of the symbols strictly between a and b given both are present.
    const std::size_t len = x.size();
    const std::size_t width = len + 2;
    dp_.assign(width * width, Scalar{0});
    auto at = [&](std::size_t a, std::size_t b) -> Scalar& { return dp_[a * width + b]; };
    const bool reduced = kind == CountKind::reduced;

    for (std::size_t a = 0; a + 1 < width; ++a)
        at(a, a + 1) = Scalar{1};

    for (std::size_t span_len = 2; span_len < width; ++span_len) {
        for (std::size_t a = 0; a + span_len < width; ++a) {
            const std::size_t b = a + span_len;
            Scalar total{0};
            for (std::size_t p = a + 1; p < b; ++p) {
                const Scalar& left = (a == 0 || (reduced && p == a + 1)) ? table.boundary : table(x[a - 1], x[p - 1]);
                if (is_zero(left))
                    continue;
                const Scalar& right =
                    (b == len + 1 || (reduced && b == p + 1)) ? table.boundary : table(x[p - 1], x[b - 1]);
                if (is_zero(right))
                    continue;
                const Scalar& inner_left = at(a, p);
                const Scalar& inner_right = at(p, b);
                if (is_zero(inner_left) || is_zero(inner_right))
                    continue;
                const Scalar ways{binomial(static_cast<unsigned>(span_len - 2), static_cast<unsigned>(p - a - 1))};
                total += ways * left * right * inner_left * inner_right;
            }
            at(a, b) = total;
        }
    }
    return at(0, len + 1);
}

template class IntervalCounter<CheckedInt>;
template class IntervalCounter<Rational>;

std::vector<Word> positive_words(const WeightedGraph& g, std::size_t n) {
    std::vector<std::vector<VertexId>> out(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        out[v].assign(g.out_neighbors(v).begin(), g.out_neighbors(v).end());
    std::vector<Word> words;
    for_each_positive_word(out, g.vertex_count(), n, [&](const Word& x) { words.push_back(x); });
    return words;
}

} // namespace insproc
