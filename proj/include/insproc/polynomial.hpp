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

#include "insproc/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace insproc {

/// Indeterminate w(x_i, x_j), positions 0-based; printed 1-based.
using PairVar = std::pair<std::uint16_t, std::uint16_t>;

/// Sorted multiset of indeterminates.
using Monomial = std::vector<PairVar>;

/// Degree first, then lexicographic on the sorted pair sequence.
struct GradedLex {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }
};

/// Multivariate polynomial over Q; zero coefficients are never stored.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& constant);
    static Polynomial variable(std::uint16_t i, std::uint16_t j);

    const std::map<Monomial, Rational, GradedLex>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Substitutes a value for every indeterminate.
    Rational evaluate(const std::function<Rational(std::uint16_t, std::uint16_t)>& value) const;

    /// Canonical form, e.g. "8 + 6*w(1,3) + 2*w(1,3)*w(1,4)". Zero prints as "0".
    std::string to_string() const;

private:
    void add_term(const Monomial& m, const Rational& c);

    std::map<Monomial, Rational, GradedLex> terms_;
};

/// How a missing neighbour is treated in the B̃ recurrence.
enum class BoundaryConvention {
    unit_factor, ///< absent neighbour contributes 1
    omitted,     ///< end deletions dropped; kept only as a mutation check
};

/**
 * @brief B̃ of a generic word x_1···x_n with one indeterminate per ordered position pair.
 *
 * Deletions keep the relative order, so only w(x_i, x_j) with i < j ever occurs.
 * Valid for 2 ≤ n ≤ 6.
 */
Polynomial b_tilde_symbolic(std::size_t n, BoundaryConvention convention = BoundaryConvention::unit_factor);

/// Reference closed forms, hand-expanded, for n = 2, 3, 4.
Polynomial b_tilde_closed_form(std::size_t n);

} // namespace insproc
