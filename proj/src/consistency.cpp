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

#include "insproc/consistency.hpp"
#include "insproc/buildings.hpp"
#include "insproc/engine.hpp"
#include "insproc/error.hpp"
#include "parallel.hpp"

#include <string>

namespace insproc {

namespace {

template <class S>
struct ExtensionSums {
    S left;  // Σ_v B̃(xv) w(x_n, v)
    S right; // Σ_v w(v, x_1) B̃(vx)
    S base;  // B̃(x)
};

template <class S>
ExtensionSums<S> extension_sums(IntervalCounter<S>& counter, const WeightTable<S>& t,
                                const std::vector<std::vector<VertexId>>& in, const Word& x, Word& scratch) {
    ExtensionSums<S> out{S{0}, S{0}, counter(t, x, CountKind::reduced)};
    const std::size_t n = x.size();
    scratch.assign(x.begin(), x.end());
    scratch.push_back(0);
    for (VertexId v : t.out[x.back()]) {
        scratch[n] = v;
        out.left += counter(t, scratch, CountKind::reduced) * t(x.back(), v);
    }
    scratch[0] = 0;
    std::copy(x.begin(), x.end(), scratch.begin() + 1);
    for (VertexId v : in[x.front()]) {
        scratch[0] = v;
        out.right += t(v, x.front()) * counter(t, scratch, CountKind::reduced);
    }
    return out;
}

template <class S>
ConsistencyReport property_c_impl(const WeightTable<S>& t, std::size_t max_n, std::size_t threads) {
    ConsistencyReport report;
    report.requested = max_n;
    std::vector<std::vector<VertexId>> in(t.n);
    for (VertexId u = 0; u < t.n; ++u)
        for (VertexId v : t.out[u])
            in[v].push_back(u);

    for (std::size_t n = 1; n < max_n; ++n) {
        std::vector<Word> words;
        for_each_positive_word(t.out, t.n, n, [&](const Word& x) { words.push_back(x); });
        if (words.empty()) {
            report.degenerate_at = n;
            report.verified_up_to = n;
            return report;
        }
        IntervalCounter<S> anchor_counter;
        Word scratch;
        const ExtensionSums<S> anchor = extension_sums(anchor_counter, t, in, words.front(), scratch);
        const unsigned num_exp = count_scale_exponent(n + 1) + 1;
        const unsigned den_exp = count_scale_exponent(n);
        const Rational c_n = unscale(anchor.left, t.scale, num_exp) / unscale(anchor.base, t.scale, den_exp);

        struct State {
            IntervalCounter<S> counter;
            Word scratch;
        };
        auto failure = detail::first_failure<ConsistencyCounterexample>(
            words.size(), threads, [] { return State{}; },
            [&](State& st, std::size_t i) -> std::optional<ConsistencyCounterexample> {
                const ExtensionSums<S> s = extension_sums(st.counter, t, in, words[i], st.scratch);
                for (Side side : {Side::left, Side::right}) {
                    const S& num = side == Side::left ? s.left : s.right;
                    if (!(num * anchor.base == anchor.left * s.base)) {
                        return ConsistencyCounterexample{
                            n,
                            words[i],
                            side,
                            unscale(num, t.scale, num_exp) / unscale(s.base, t.scale, den_exp),
                            c_n,
                            words.front(),
                        };
                    }
                }
                return std::nullopt;
            });
        if (failure) {
            report.counterexample = std::move(failure);
            report.constants.clear();
            report.verified_up_to = n;
            return report;
        }
        report.constants.push_back(c_n);
        report.verified_up_to = n + 1;
    }
    report.verified_up_to = max_n;
    return report;
}

} // namespace

ConsistencyReport check_property_c(const WeightedGraph& g, std::size_t max_n, std::size_t threads) {
    require(max_n >= 2, ErrorCode::invalid_argument, "check_property_c needs N >= 2");
    if (auto t = integer_table(g)) {
        try {
            return property_c_impl(*t, max_n, threads);
        } catch (const Overflow&) {
        }
    }
    return property_c_impl(rational_table(g), max_n, threads);
}

Rational t_n(const WeightedGraph& g, VertexId i, VertexId j, std::size_t n) {
    require(g.contains(i) && g.contains(j), ErrorCode::invalid_argument, "T_n: vertex out of range");
    require(i != j, ErrorCode::invalid_argument, "T_n needs distinct vertices");
    require(n >= 1, ErrorCode::invalid_argument, "T_n needs n >= 1");
    const auto hi = static_cast<unsigned>((n + 1) / 2);
    const auto lo = static_cast<unsigned>(n / 2);
    Rational total = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        total += pow(g.weight(i, v), hi) * pow(g.weight(j, v), lo); // pow(0, 0) == 1
    return total;
}

TInvarianceReport check_t_invariance(const WeightedGraph& g, std::size_t max_n) {
    require(max_n >= 1, ErrorCode::invalid_argument, "check_t_invariance needs N >= 1");
    const auto n = static_cast<VertexId>(g.vertex_count());
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = 0; j < n; ++j)
            require(i == j ? !g.positive(i, j) : g.positive(i, j), ErrorCode::precondition,
                    "T-invariance needs a loopless graph with all off-diagonal weights positive");

    TInvarianceReport report;
    if (n < 2)
        return report;
    for (std::size_t k = 1; k <= max_n; ++k) {
        const Rational ref = t_n(g, 0, 1, k);
        for (VertexId i = 0; i < n; ++i)
            for (VertexId j = 0; j < n; ++j) {
                if (i == j)
                    continue;
                Rational value = t_n(g, i, j, k);
                if (value != ref) {
                    report.invariant = false;
                    report.values.clear();
                    report.witness = TInvarianceReport::Witness{k, {i, j}, {0, 1}, std::move(value), ref};
                    return report;
                }
            }
        report.values.push_back(ref);
    }
    return report;
}

std::optional<UniformLemmaCheck> uniform_lemmas(const WeightedGraph& g, const ConsistencyReport& report) {
    const UniformWeightReport uniform = uniform_weight(g);
    if (!uniform.is_uniform || !uniform.w || report.constants.size() < 2)
        return std::nullopt;
    UniformLemmaCheck out;
    out.w = *uniform.w;
    out.degree = regularity(g);
    out.triangles_per_edge = triangles_per_edge(g);
    out.c1 = report.constants[0];
    out.c2 = report.constants[1];
    out.c1_holds = out.degree && out.c1 == 2 * out.w * Rational(*out.degree);
    out.t_holds = out.triangles_per_edge && Rational(*out.triangles_per_edge) == (out.c2 - out.c1) / (out.w * out.w);
    return out;
}

UniformDefect unif_defect(std::size_t q, const Rational& w) {
    require(q >= 3, ErrorCode::invalid_argument, "unif_defect needs q >= 3");
    require(w > 0, ErrorCode::invalid_argument, "unif_defect needs w > 0");
    UniformDefect out;
    out.closed_form = w * (w - 1) * (Rational(q, 2) - (w + 1) / (w + 2));

    BuildingCounter counter(make_complete(q, w));
    const Word one_two_one{0, 1, 0};
    const Word three_two_one{2, 1, 0};
    const Rational base_a = counter.b_tilde(one_two_one);
    const Rational base_b = counter.b_tilde(three_two_one);
    Rational sum = 0;
    for (VertexId v = 0; v < q; ++v) {
        if (!counter.graph().positive(0, v))
            continue;
        Word a = one_two_one;
        Word b = three_two_one;
        a.push_back(v);
        b.push_back(v);
        sum += counter.b_tilde(a) / base_a - counter.b_tilde(b) / base_b;
    }
    out.direct_sum = sum;
    return out;
}

KiteObstruction kite_obstruction(const WeightedGraph& g, const Kite& kite, const std::optional<Rational>& c3) {
    require(is_kite(g, kite), ErrorCode::invalid_argument, "kite_obstruction: not an induced kite of the graph");
    const UniformWeightReport uniform = uniform_weight(g);
    require(uniform.is_uniform, ErrorCode::precondition, "kite_obstruction needs a uniform-weight graph");

    BuildingCounter counter(g);
    const auto [a, b, c, d] = kite;
    KiteObstruction out;
    out.bracket = counter.b_tilde(Word{b, a, b}) - counter.b_tilde(Word{d, a, b});
    out.rhs = c3.value_or(Rational(0)) * out.bracket;
    out.lhs = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        Rational term = (counter.b_tilde(Word{b, a, b, v}) - counter.b_tilde(Word{d, a, b, v})) * g.weight(b, v);
        if (v == c)
            out.term_at_c = term;
        out.lhs += term;
        out.terms.push_back(std::move(term));
    }
    return out;
}

} // namespace insproc
