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

#include "insproc/buildings.hpp"
#include "insproc/consistency.hpp"
#include "insproc/reports.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace test;

namespace {

std::vector<Rational> ints(std::initializer_list<long> v) {
    std::vector<Rational> out;
    for (long x : v)
        out.emplace_back(x);
    return out;
}

} // namespace

TEST_CASE("K3 constants") {
    const auto r = check_property_c(make_complete(3, 1), 5);
    CHECK(r.verified());
    CHECK(r.verified_up_to == 5);
    CHECK(r.constants == ints({4, 5, 6, 7}));
    CHECK(check_property_c(make_complete(3, 1), 4).constants == ints({4, 5, 6}));
}

TEST_CASE("K4 and K2 constants") {
    CHECK(check_property_c(make_complete(4, 1), 5).constants == ints({6, 8, 10, 12}));
    CHECK(check_property_c(make_complete(2, 1), 5).constants == ints({2, 2, 2, 2}));
}

TEST_CASE("complete graphs K2..K6 pass to N = 6") {
    for (std::size_t q = 2; q <= 6; ++q) {
        const auto r = check_property_c(make_complete(q, 1), 6);
        CHECK(r.verified());
        CHECK(r.constants.size() == 5);
    }
}

TEST_CASE("2·K3 fails at n = 3") {
    const auto r = check_property_c(make_complete(3, 2), 4);
    CHECK_FALSE(r.verified());
    REQUIRE(r.counterexample.has_value());
    CHECK(r.counterexample->n == 3);
    CHECK(r.counterexample->anchor == W({1, 2, 1}));
    CHECK(r.counterexample->word == W({1, 2, 3}));
    CHECK(r.counterexample->expected == 18);
    CHECK(r.counterexample->observed == 15);
    CHECK(r.constants.empty()); // constants only accompany a verified window
    CHECK(r.verified_up_to == 3);
}

TEST_CASE("the kite fails at n = 1 and degenerate graphs are flagged") {
    const auto kite = check_property_c(fixture("kite"), 4);
    REQUIRE(kite.counterexample.has_value());
    CHECK(kite.counterexample->n == 1);

    WeightedGraph empty(3);
    const auto r = check_property_c(empty, 4);
    CHECK_FALSE(r.verified());
    CHECK_FALSE(r.counterexample.has_value());
    CHECK(r.degenerate_at == std::optional<std::size_t>(2));

    CHECK(error_code_of([] { check_property_c(make_complete(3, 1), 1); }) == ErrorCode::invalid_argument);
}

TEST_CASE("property: multipartite constants are r times the quotient's") {
    for (std::size_t q = 2; q <= 4; ++q)
        for (std::size_t r = 1; r <= 2; ++r) {
            const std::size_t N = q * r <= 6 ? 5 : 4;
            const auto small = check_property_c(make_complete(q, 1), N);
            const auto big = check_property_c(make_multipartite(q, r, 1), N);
            REQUIRE(big.verified());
            REQUIRE(big.constants.size() == small.constants.size());
            for (std::size_t i = 0; i < small.constants.size(); ++i)
                CHECK(big.constants[i] == Rational(static_cast<long>(r)) * small.constants[i]);
        }
}

TEST_CASE("property: reports do not depend on the thread count") {
    Rng rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        const auto g = random_weighted_graph(rng, 3, 2, 2);
        const Json one = to_json(check_property_c(g, 4, 1));
        const Json four = to_json(check_property_c(g, 4, 4));
        CHECK(one.dump() == four.dump());
    }
    const Json one = to_json(check_property_c(make_complete(3, 2), 5, 1));
    CHECK(one.dump() == to_json(check_property_c(make_complete(3, 2), 5, 3)).dump());
}

TEST_CASE("property: the B~ form agrees with direct sums of B") {
    Rng rng(8);
    for (int trial = 0; trial < 15; ++trial) {
        const auto g = random_weighted_graph(rng, 3, 2, 1);
        const auto r = check_property_c(g, 4);
        if (!r.verified())
            continue;
        BuildingCounter counter(g);
        for (std::size_t n = 1; n < 4; ++n)
            for (const Word& x : positive_words(g, n)) {
                Rational left = 0;
                Rational right = 0;
                for (VertexId v = 0; v < 3; ++v) {
                    Word xv = x;
                    xv.push_back(v);
                    Word vx{v};
                    vx.insert(vx.end(), x.begin(), x.end());
                    left += counter.b_rec(xv);
                    right += counter.b_rec(vx);
                }
                CHECK(left == r.constants[n - 1] * counter.b_rec(x));
                CHECK(right == r.constants[n - 1] * counter.b_rec(x));
            }
    }
}

TEST_CASE("T_n values") {
    CHECK(t_n(make_complete(4, 1), 0, 1, 1) == 3);
    CHECK(t_n(make_complete(3, 1), 0, 1, 2) == 1);
    CHECK(error_code_of([] { t_n(make_complete(3, 1), 1, 1, 2); }) == ErrorCode::invalid_argument);

    Rng rng(4);
    for (int trial = 0; trial < 50; ++trial) {
        const auto g = random_weighted_graph(rng, 4);
        const auto i = static_cast<VertexId>(below(rng, 4));
        const auto j = static_cast<VertexId>((i + 1 + below(rng, 3)) % 4);
        Rational direct = 0;
        for (VertexId v = 0; v < 4; ++v)
            direct += g.weight(i, v) * g.weight(j, v);
        CHECK(t_n(g, i, j, 2) == direct);
        CHECK(t_n(g, i, j, 2) == t_n(g, j, i, 2));
    }
}

TEST_CASE("T-invariance") {
    for (std::size_t q = 3; q <= 5; ++q) {
        const auto r = check_t_invariance(make_complete(q, 1), 8);
        CHECK(r.invariant);
        CHECK(r.values.size() == 8);
    }
    auto perturbed = make_complete(4, 1);
    perturbed.set_weight(0, 1, 2);
    perturbed.set_weight(1, 0, 2);
    const auto r = check_t_invariance(perturbed, 8);
    CHECK_FALSE(r.invariant);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->value != r.witness->reference_value);

    CHECK(check_t_invariance(make_complete(2, 1), 6).invariant);
    CHECK(error_code_of([] { check_t_invariance(fixture("kite"), 3); }) == ErrorCode::precondition);
}

TEST_CASE("uniform defect") {
    CHECK(unif_defect(3, 1).closed_form == 0);
    CHECK(unif_defect(3, 1).agree());
    CHECK(unif_defect(4, 1).closed_form == 0);
    const auto d = unif_defect(3, 2);
    CHECK(d.closed_form == Q("3/2"));
    CHECK(d.direct_sum == Q("3/2"));
    CHECK(error_code_of([] { unif_defect(2, 1); }) == ErrorCode::invalid_argument);
}

TEST_CASE("property: the defect closed form matches the direct sum for q <= 6") {
    for (std::size_t q = 3; q <= 6; ++q)
        for (const char* w : {"1/3", "1/2", "1", "2", "5/2", "7"})
            CHECK(unif_defect(q, Q(w)).agree());
}

TEST_CASE("kite obstruction") {
    const auto g = fixture("kite");
    const Kite kite{0, 1, 2, 3};
    const auto k = kite_obstruction(g, kite);
    CHECK(k.bracket == 0);
    CHECK(k.lhs >= 2);
    CHECK(k.term_at_c == 2);
    CHECK(k.rhs == 0);
    for (VertexId v = 0; v < 4; ++v)
        if (!g.positive(1, v))
            CHECK(k.terms[v] == 0);

    auto heavy = fixture("kite");
    for (VertexId i = 0; i < 4; ++i)
        for (VertexId j : std::vector<VertexId>(heavy.out_neighbors(i).begin(), heavy.out_neighbors(i).end()))
            heavy.set_weight(i, j, 3);
    CHECK(kite_obstruction(heavy, kite).term_at_c == 54); // 2w³

    CHECK(error_code_of([&] { kite_obstruction(g, Kite{1, 0, 2, 3}); }) == ErrorCode::invalid_argument);
}

TEST_CASE("uniform lemmas hold on every uniform fixture that passes to N = 4") {
    int checked = 0;
    for (const char* name : {"k2", "k3", "k4", "k5", "k6", "k22", "k222", "cycle5", "kite", "path3"}) {
        const auto g = fixture(name);
        const auto r = check_property_c(g, 4);
        if (!r.verified())
            continue;
        const auto lemmas = uniform_lemmas(g, r);
        REQUIRE(lemmas.has_value());
        CHECK(lemmas->holds());
        ++checked;
    }
    CHECK(checked >= 7);
    // 2·K3 is uniform and passes N = 3, where both formulas still hold with w = 2.
    const auto w2 = uniform_lemmas(make_complete(3, 2), check_property_c(make_complete(3, 2), 3));
    REQUIRE(w2.has_value());
    CHECK(w2->holds());

    auto skewed = make_complete(4, 1);
    skewed.set_weight(0, 1, 2);
    CHECK_FALSE(uniform_lemmas(skewed, check_property_c(make_complete(4, 1), 4)).has_value());
}
