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
#include "insproc/sft.hpp"
#include "support.hpp"

#include <doctest.h>

#include <numeric>

using namespace test;

TEST_CASE("build orders must be permutations") {
    const std::vector<std::uint32_t> sigma{4, 7, 5, 2, 6, 1, 3};
    const auto order = BuildOrder::from_one_based(sigma);
    CHECK(order.position_at(0) == 3);
    CHECK(order.position_at(6) == 2);
    CHECK(BuildOrder::identity(3).order() == std::vector<std::uint32_t>{0, 1, 2});
    CHECK(error_code_of([] { BuildOrder({0, 0, 1}); }) == ErrorCode::invalid_argument);
    CHECK(error_code_of([] { BuildOrder({0, 3}); }) == ErrorCode::invalid_argument);
    const std::vector<std::uint32_t> zero{0, 1};
    CHECK(error_code_of([&] { BuildOrder::from_one_based(zero); }) == ErrorCode::invalid_argument);
}

TEST_CASE("word weight") {
    const auto k3 = make_complete(3, Q("2"));
    CHECK(word_weight(k3, W({})) == 1);
    CHECK(word_weight(k3, W({2})) == 1);
    CHECK(word_weight(k3, W({1, 2, 1})) == 4);
    CHECK(word_weight(k3, W({1, 1})) == 0);
}

TEST_CASE("constraint graph of the order 4752613") {
    const auto g = make_complete(7, 1);
    const Word x = W({1, 2, 3, 4, 5, 6, 7});
    const std::vector<std::uint32_t> sigma{4, 7, 5, 2, 6, 1, 3};
    const auto cg = constraint_graph(g, x, BuildOrder::from_one_based(sigma));
    // Nearest-present-neighbour rule, worked by hand: one edge for arrivals with a
    // single present side, two otherwise; 1 + 2 + 1 + 2 + 1 + 2 = 9 edges.
    const std::vector<std::pair<std::uint32_t, std::uint32_t>> expected{
        {4, 7}, {4, 5}, {5, 7}, {2, 4}, {5, 6}, {6, 7}, {1, 2}, {2, 3}, {3, 4}};
    REQUIRE(cg.edges.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(cg.edges[i].tail_position + 1 == expected[i].first);
        CHECK(cg.edges[i].head_position + 1 == expected[i].second);
    }
}

TEST_CASE("building weights follow the arrival order") {
    WeightedGraph g(3);
    g.set_weight(0, 1, 2);
    g.set_weight(1, 2, 3);
    g.set_weight(0, 2, 5);
    const Word x = W({1, 2, 3});
    // 1 then 3 then 2: edges (1,3), (1,2), (2,3)
    CHECK(building_weight(g, x, BuildOrder({0, 2, 1})) == 30);
    // 2 then 1 then 3: edges (1,2), (2,3)
    CHECK(building_weight(g, x, BuildOrder({1, 0, 2})) == 6);
}

TEST_CASE("small building counts on K3 and K4") {
    const auto k3 = make_complete(3, 1);
    CHECK(b_rec(k3, W({})) == 1);
    CHECK(b_rec(k3, W({2})) == 1);
    CHECK(b_rec(k3, W({1, 2})) == 2);
    CHECK(b_rec(k3, W({1, 2, 1})) == 4);
    CHECK(b_rec(k3, W({1, 2, 3})) == 6);
    CHECK(b_rec(k3, W({1, 1})) == 0);

    const auto k4 = make_complete(4, 1);
    CHECK(b_rec(k4, W({1, 2, 1, 3})) == 16);
    CHECK(b_tilde(k4, W({1, 2, 1, 3})) == 16);
    CHECK(b_bruteforce(k4, W({1, 2, 1, 3})) == 16);
}

TEST_CASE("permutation tables merge orders into Catalan many terms") {
    std::int64_t factorial = 1;
    std::int64_t catalan = 1; // C_0
    for (std::size_t n = 1; n <= 8; ++n) {
        factorial *= static_cast<std::int64_t>(n);
        const auto& t = permutation_table(n);
        CHECK(t.terms.size() == static_cast<std::size_t>(catalan));
        std::int64_t mult = 0;
        for (const auto& term : t.terms)
            mult += term.multiplicity;
        CHECK(mult == factorial);
        catalan = catalan * 2 * (2 * static_cast<std::int64_t>(n) - 1) / (static_cast<std::int64_t>(n) + 1);
    }
    CHECK(error_code_of([] { permutation_table(9); }) == ErrorCode::limit_exceeded);
    CHECK(error_code_of([] { b_bruteforce(make_complete(2, 1), Word(9, 0)); }) == ErrorCode::limit_exceeded);
}

TEST_CASE("property: recurrence, interval DP and both brute forces agree on random weighted graphs") {
    Rng rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t q = 2 + below(rng, 3);
        const auto g = random_weighted_graph(rng, q);
        BuildingCounter counter(g);
        FastCounter fast(g);
        for (int k = 0; k < 12; ++k) {
            const Word x = random_word(rng, q, below(rng, 7));
            const Rational brute = b_bruteforce(g, x);
            CHECK(counter.b_rec(x) == brute);
            CHECK(fast.b(x) == brute);
            if (x.size() <= 5)
                CHECK(b_bruteforce_direct(g, x) == brute);
            CHECK(counter.b_tilde(x) == fast.b_tilde(x));
        }
    }
}

TEST_CASE("property: B = w(x) * B~(x)") {
    Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t q = 2 + below(rng, 3);
        const auto g = random_weighted_graph(rng, q, 4, 2);
        BuildingCounter counter(g);
        for (int k = 0; k < 20; ++k) {
            const Word x = random_word(rng, q, below(rng, 8));
            CHECK(counter.b_rec(x) == word_weight(g, x) * counter.b_tilde(x));
        }
    }
}

TEST_CASE("overflowing integer paths fall back to exact rationals") {
    const auto big = make_complete(3, Rational(1000000));
    const Word x = W({1, 2, 3, 1, 2, 3, 1});
    const Rational brute = b_bruteforce(big, x);
    CHECK(BuildingCounter(big).b_rec(x) == brute);
    CHECK(FastCounter(big).b(x) == brute);

    WeightedGraph tiny(2); // denominator beyond the integer path
    tiny.set_weight(0, 1, Rational(1, BigInt(1) << 40));
    tiny.set_weight(1, 0, Q("7/3"));
    const Word y = W({1, 2, 1, 2, 1});
    CHECK(BuildingCounter(tiny).b_rec(y) == b_bruteforce(tiny, y));
    CHECK(FastCounter(tiny).b(y) == b_bruteforce(tiny, y));
}

TEST_CASE("property: triangle-free graphs give B~ = 2^(k-1) on positive words up to length 10") {
    const std::vector<WeightedGraph> graphs{fixture("k22"), fixture("cycle5"), fixture("path3"),
                                            de_bruijn(proper_coloring_shift(3))};
    for (const auto& g : graphs) {
        REQUIRE_FALSE(has_directed_triangle(g).has_value());
        FastCounter fast(g);
        BuildingCounter memo(g);
        for (std::size_t k = 1; k <= 10; ++k) {
            const Rational expected = pow(Rational(2), static_cast<unsigned>(k - 1));
            for (const Word& x : positive_words(g, k)) {
                CHECK(fast.b_tilde(x) == expected);
                if (k <= 7)
                    CHECK(memo.b_tilde(x) == expected);
            }
        }
    }
}

TEST_CASE("property: projection invariance on K_{2,2,2} for every word up to length 6") {
    const auto g = make_multipartite(3, 2, 1);
    const auto cls = classify_multipartite(g);
    BuildingCounter big(g);
    BuildingCounter small(make_complete(3, 1));
    for (std::size_t n = 0; n <= 6; ++n) {
        Word x(n, 0);
        while (true) {
            CHECK(big.b_rec(x) == small.b_rec(block_projection(g, cls, x)));
            std::size_t i = 0;
            while (i < n && ++x[n - 1 - i] == 6)
                x[n - 1 - i++] = 0;
            if (i == n)
                break;
        }
    }
}

TEST_CASE("counter caches grow and inputs are validated") {
    BuildingCounter counter(make_complete(3, 1));
    CHECK(counter.b_rec(W({1, 2, 3, 1})) == b_bruteforce(make_complete(3, 1), W({1, 2, 3, 1})));
    CHECK(counter.cache_size() > 0);
    CHECK(error_code_of([&] { counter.b_rec(Word{5}); }) == ErrorCode::invalid_argument);
}
