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

// Arithmetic backends shared by every exact sweep.
//
// A graph whose weights have a common denominator D is evaluated over the
// integers with weights D·w(i,j) and every missing-neighbour factor set to D.
// Every building then carries exactly two factors per symbol, so a count over
// a word of length n is D^(2n) times the rational count. Comparisons between
// counts of equal length are therefore exact without dividing. Overflow of the
// 64-bit path throws Overflow and callers rerun the sweep over Rational.

#pragma once

#include "insproc/graph.hpp"
#include "insproc/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace insproc {

struct Overflow {};

/// int64 with every operation overflow-checked.
class CheckedInt {
public:
    constexpr CheckedInt(std::int64_t v = 0) noexcept : v_(v) {}
    std::int64_t value() const noexcept { return v_; }

    friend CheckedInt operator+(CheckedInt a, CheckedInt b) {
        std::int64_t r;
        if (__builtin_add_overflow(a.v_, b.v_, &r))
            throw Overflow{};
        return r;
    }
    friend CheckedInt operator-(CheckedInt a, CheckedInt b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a.v_, b.v_, &r))
            throw Overflow{};
        return r;
    }
    friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a.v_, b.v_, &r))
            throw Overflow{};
        return r;
    }
    CheckedInt& operator+=(CheckedInt b) { return *this = *this + b; }
    CheckedInt& operator*=(CheckedInt b) { return *this = *this * b; }
    friend bool operator==(CheckedInt a, CheckedInt b) noexcept { return a.v_ == b.v_; }
    friend auto operator<=>(CheckedInt a, CheckedInt b) noexcept { return a.v_ <=> b.v_; }

private:
    std::int64_t v_;
};

inline bool is_zero(const CheckedInt& v) { return v.value() == 0; }
inline bool is_zero(const Rational& v) { return v == 0; }

/// Dense weight table plus the factor used for a missing neighbour.
template <class Scalar>
struct WeightTable {
    std::size_t n = 0;
    Scalar boundary{1};
    /// Scale D (1 for Rational tables).
    std::int64_t scale = 1;
    std::vector<Scalar> w;
    std::vector<std::vector<VertexId>> out;

    const Scalar& operator()(VertexId i, VertexId j) const { return w[static_cast<std::size_t>(i) * n + j]; }
};

WeightTable<Rational> rational_table(const WeightedGraph& g);

/// Integer image of g; absent when numerators or D do not fit comfortably in 64 bits.
std::optional<WeightTable<CheckedInt>> integer_table(const WeightedGraph& g);

/// value / D^exponent as an exact rational.
Rational unscale(const CheckedInt& value, std::int64_t scale, unsigned exponent);
inline Rational unscale(const Rational& value, std::int64_t, unsigned) { return value; }

inline Rational to_rational(const CheckedInt& v) { return Rational(v.value()); }
inline const Rational& to_rational(const Rational& v) { return v; }

enum class CountKind {
    building, ///< B(x)
    reduced,  ///< B̃(x)
};

/**
 * @brief Interval dynamic program for B and B̃.
 *
 * Conditioning on the first symbol to arrive between two already-present
 * symbols splits a building into two independent halves whose arrival orders
 * interleave freely, giving an O(n³) evaluation with no cache. The reduced
 * count replaces every edge between adjacent positions by the boundary factor.
 * Scratch storage is reused across calls; one instance per thread.
 */
template <class Scalar>
class IntervalCounter {
public:
    Scalar operator()(const WeightTable<Scalar>& table, std::span<const VertexId> x, CountKind kind);

private:
    std::vector<Scalar> dp_;
};

extern template class IntervalCounter<CheckedInt>;
extern template class IntervalCounter<Rational>;

/// Exponent e such that a count of the given kind over a word of length n is D^e times the true value.
inline unsigned count_scale_exponent(std::size_t n) { return static_cast<unsigned>(2 * n); }

/// Binomial coefficient for n ≤ 62.
std::int64_t binomial(unsigned n, unsigned k);

/// Calls f(word) for every word of length n with positive word weight, in lexicographic order.
template <class F>
void for_each_positive_word(const std::vector<std::vector<VertexId>>& out, std::size_t vertex_count, std::size_t n,
                            F&& f) {
    Word x(n);
    if (n == 0) {
        f(static_cast<const Word&>(x));
        return;
    }
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == n) {
            f(static_cast<const Word&>(x));
            return;
        }
        for (VertexId v : out[x[pos - 1]]) {
            x[pos] = v;
            self(self, pos + 1);
        }
    };
    for (VertexId v = 0; v < vertex_count; ++v) {
        x[0] = v;
        rec(rec, 1);
    }
}

/// All positive-weight words of length n, lexicographic.
std::vector<Word> positive_words(const WeightedGraph& g, std::size_t n);

} // namespace insproc
