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

#include "insproc/polynomial.hpp"
#include "insproc/error.hpp"

#include <algorithm>
#include <vector>

namespace insproc {

Polynomial::Polynomial(const Rational& constant) {
    if (constant != 0)
        terms_.emplace(Monomial{}, constant);
}

Polynomial Polynomial::variable(std::uint16_t i, std::uint16_t j) {
    Polynomial p;
    p.terms_.emplace(Monomial{{i, j}}, Rational(1));
    return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m;
            m.reserve(ma.size() + mb.size());
            std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
            out.add_term(m, ca * cb);
        }
    return out;
}

Rational Polynomial::evaluate(const std::function<Rational(std::uint16_t, std::uint16_t)>& value) const {
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (auto [i, j] : m)
            term *= value(i, j);
        total += term;
    }
    return total;
}

std::string Polynomial::to_string() const {
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        const Rational magnitude = negative ? Rational(-c) : c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;

        std::string coef = numerator_of(magnitude).str();
        if (denominator_of(magnitude) != 1)
            coef += "/" + denominator_of(magnitude).str();
        std::string vars;
        for (std::size_t k = 0; k < m.size();) {
            std::size_t e = k;
            while (e < m.size() && m[e] == m[k])
                ++e;
            if (!vars.empty())
                vars += "*";
            vars += "w(" + std::to_string(m[k].first + 1) + "," + std::to_string(m[k].second + 1) + ")";
            if (e - k > 1)
                vars += "^" + std::to_string(e - k);
            k = e;
        }
        if (vars.empty())
            out += coef;
        else if (magnitude == 1)
            out += vars;
        else
            out += coef + "*" + vars;
    }
    return out;
}

Polynomial b_tilde_symbolic(std::size_t n, BoundaryConvention convention) {
    require(n >= 2 && n <= 6, ErrorCode::invalid_argument, "symbolic B~ supports 2 <= n <= 6");
    // memo[mask] = B̃ of the subsequence of positions in mask.
    const std::size_t full = (std::size_t{1} << n) - 1;
    std::vector<Polynomial> memo(full + 1);
    memo[0] = Polynomial(Rational(1));
    for (std::size_t mask = 1; mask <= full; ++mask) {
        std::vector<std::uint16_t> pos;
        for (std::uint16_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i))
                pos.push_back(i);
        Polynomial total;
        for (std::size_t k = 0; k < pos.size(); ++k) {
            const std::size_t rest = mask & ~(std::size_t{1} << pos[k]);
            const bool at_end = k == 0 || k + 1 == pos.size();
            if (at_end) {
                if (convention == BoundaryConvention::unit_factor)
                    total += memo[rest];
            } else {
                total += Polynomial::variable(pos[k - 1], pos[k + 1]) * memo[rest];
            }
        }
        memo[mask] = std::move(total);
    }
    return memo[full];
}

Polynomial b_tilde_closed_form(std::size_t n) {
    using P = Polynomial;
    switch (n) {
    case 2:
        return P(Rational(2));
    case 3:
        return P(Rational(4)) + P(Rational(2)) * P::variable(0, 2);
    case 4:
        return P(Rational(8)) +
               P(Rational(2)) * (P::variable(0, 2) + P::variable(1, 3)) * (P(Rational(3)) + P::variable(0, 3));
    default:
        fail(ErrorCode::invalid_argument, "reference closed forms exist for n = 2, 3, 4 only");
    }
}

} // namespace insproc
