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
#include "insproc/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace insproc {

BuildOrder::BuildOrder(std::vector<std::uint32_t> order) : order_(std::move(order)) {
    std::vector<char> seen(order_.size(), 0);
    for (auto p : order_) {
        require(p < order_.size() && !seen[p], ErrorCode::invalid_argument, "build order is not a permutation");
        seen[p] = 1;
    }
}

BuildOrder BuildOrder::identity(std::size_t n) {
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    return BuildOrder(std::move(order));
}

BuildOrder BuildOrder::from_one_based(std::span<const std::uint32_t> order) {
    std::vector<std::uint32_t> zero_based;
    zero_based.reserve(order.size());
    for (auto p : order) {
        require(p >= 1, ErrorCode::invalid_argument, "1-based build order contains 0");
        zero_based.push_back(p - 1);
    }
    return BuildOrder(std::move(zero_based));
}

Rational word_weight(const WeightedGraph& g, std::span<const VertexId> x) {
    Rational w = 1;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        w *= g.weight(x[i], x[i + 1]);
        if (w == 0)
            break;
    }
    return w;
}

ConstraintGraph constraint_graph(const WeightedGraph& g, std::span<const VertexId> x, const BuildOrder& order) {
    require(order.size() == x.size(), ErrorCode::invalid_argument,
            "build order length " + std::to_string(order.size()) + " does not match word length " +
                std::to_string(x.size()));
    ConstraintGraph cg;
    std::set<std::uint32_t> present;
    for (std::size_t t = 0; t < order.size(); ++t) {
        const std::uint32_t p = order.position_at(t);
        auto right = present.upper_bound(p);
        if (right != present.begin()) {
            const std::uint32_t l = *std::prev(right);
            cg.edges.push_back({l, p, x[l], x[p], g.weight(x[l], x[p])});
        }
        if (right != present.end()) {
            const std::uint32_t r = *right;
            cg.edges.push_back({p, r, x[p], x[r], g.weight(x[p], x[r])});
        }
        present.insert(p);
    }
    return cg;
}

Rational building_weight(const WeightedGraph& g, std::span<const VertexId> x, const BuildOrder& order) {
    Rational w = 1;
    for (const auto& e : constraint_graph(g, x, order).edges)
        w *= e.weight;
    return w;
}

namespace {

void check_symbols(const WeightedGraph& g, std::span<const VertexId> x) {
    for (std::size_t i = 0; i < x.size(); ++i)
        require(g.contains(x[i]), ErrorCode::invalid_argument,
                "symbol at position " + std::to_string(i + 1) + " is not a vertex");
}

void check_bound(std::size_t n, std::size_t max_length) {
    require(n <= max_length, ErrorCode::limit_exceeded,
            "brute force over " + std::to_string(n) + "! orders exceeds the bound of length " +
                std::to_string(max_length));
}

PermutationTable build_table(std::size_t n) {
    std::map<std::vector<std::pair<std::uint8_t, std::uint8_t>>, std::int64_t> merged;
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    do {
        std::vector<std::pair<std::uint8_t, std::uint8_t>> edges;
        std::set<std::uint32_t> present;
        for (auto p : order) {
            auto right = present.upper_bound(p);
            if (right != present.begin())
                edges.emplace_back(static_cast<std::uint8_t>(*std::prev(right)), static_cast<std::uint8_t>(p));
            if (right != present.end())
                edges.emplace_back(static_cast<std::uint8_t>(p), static_cast<std::uint8_t>(*right));
            present.insert(p);
        }
        std::sort(edges.begin(), edges.end());
        ++merged[edges];
    } while (std::next_permutation(order.begin(), order.end()));

    PermutationTable table;
    table.length = n;
    for (auto& [edges, count] : merged)
        table.terms.push_back({edges, count});
    return table;
}

} // namespace

const PermutationTable& permutation_table(std::size_t n, std::size_t max_length) {
    check_bound(n, max_length);
    static std::mutex mutex;
    static std::map<std::size_t, std::unique_ptr<PermutationTable>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot)
        slot = std::make_unique<PermutationTable>(build_table(n));
    return *slot;
}

template <class Scalar>
Scalar evaluate_permutation_table(const PermutationTable& table, const WeightTable<Scalar>& w,
                                  std::span<const VertexId> x) {
    const std::size_t slots = 2 * table.length;
    Scalar total{0};
    for (const auto& term : table.terms) {
        Scalar product{term.multiplicity};
        for (auto [a, b] : term.edges) {
            product *= w(x[a], x[b]);
            if (is_zero(product))
                break;
        }
        if (is_zero(product))
            continue;
        for (std::size_t k = term.edges.size(); k < slots; ++k)
            product *= w.boundary;
        total += product;
    }
    return total;
}

template CheckedInt evaluate_permutation_table(const PermutationTable&, const WeightTable<CheckedInt>&,
                                               std::span<const VertexId>);
template Rational evaluate_permutation_table(const PermutationTable&, const WeightTable<Rational>&,
                                             std::span<const VertexId>);

Rational b_bruteforce(const WeightedGraph& g, std::span<const VertexId> x, std::size_t max_length) {
    check_symbols(g, x);
    const PermutationTable& table = permutation_table(x.size(), max_length);
    if (auto t = integer_table(g)) {
        try {
            return unscale(evaluate_permutation_table(table, *t, x), t->scale, count_scale_exponent(x.size()));
        } catch (const Overflow&) {
        }
    }
    return evaluate_permutation_table(table, rational_table(g), x);
}

Rational b_bruteforce_direct(const WeightedGraph& g, std::span<const VertexId> x, std::size_t max_length) {
    check_symbols(g, x);
    check_bound(x.size(), max_length);
    std::vector<std::uint32_t> order(x.size());
    std::iota(order.begin(), order.end(), 0u);
    Rational total = 0;
    do {
        total += building_weight(g, x, BuildOrder(order));
    } while (std::next_permutation(order.begin(), order.end()));
    return total;
}

std::size_t BuildingCounter::WordHash::operator()(const Word& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (VertexId v : w) {
        h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

BuildingCounter::BuildingCounter(WeightedGraph g)
    : graph_(std::move(g)), int_table_(integer_table(graph_)), rat_table_(rational_table(graph_)) {}

namespace {

Word without(const Word& x, std::size_t i) {
    Word y;
    y.reserve(x.size() - 1);
    y.insert(y.end(), x.begin(), x.begin() + static_cast<std::ptrdiff_t>(i));
    y.insert(y.end(), x.begin() + static_cast<std::ptrdiff_t>(i) + 1, x.end());
    return y;
}

} // namespace

template <class Scalar>
Scalar BuildingCounter::rec_full(const WeightTable<Scalar>& t, Memo<Scalar>& memo, const Word& x) {
    if (x.empty())
        return Scalar{1};
    if (auto it = memo.full.find(x); it != memo.full.end())
        return it->second;
    Scalar total{0};
    for (std::size_t i = 0; i < x.size(); ++i) {
        const Scalar& left = i == 0 ? t.boundary : t(x[i - 1], x[i]);
        const Scalar& right = i + 1 == x.size() ? t.boundary : t(x[i], x[i + 1]);
        if (is_zero(left) || is_zero(right))
            continue;
        total += left * rec_full(t, memo, without(x, i)) * right;
    }
    memo.full.emplace(x, total);
    return total;
}

template <class Scalar>
Scalar BuildingCounter::rec_reduced(const WeightTable<Scalar>& t, Memo<Scalar>& memo, const Word& x) {
    if (x.empty())
        return Scalar{1};
    if (auto it = memo.reduced.find(x); it != memo.reduced.end())
        return it->second;
    Scalar total{0};
    for (std::size_t i = 0; i < x.size(); ++i) {
        const Scalar& bridge = (i == 0 || i + 1 == x.size()) ? t.boundary : t(x[i - 1], x[i + 1]);
        if (is_zero(bridge))
            continue;
        total += bridge * rec_reduced(t, memo, without(x, i));
    }
    memo.reduced.emplace(x, total);
    return total;
}

Rational BuildingCounter::b_rec(std::span<const VertexId> x) {
    check_symbols(graph_, x);
    const Word w(x.begin(), x.end());
    std::lock_guard lock(mutex_);
    if (int_table_) {
        try {
            return unscale(rec_full(*int_table_, int_memo_, w), int_table_->scale, count_scale_exponent(w.size()));
        } catch (const Overflow&) {
        }
    }
    return rec_full(rat_table_, rat_memo_, w);
}

Rational BuildingCounter::b_tilde(std::span<const VertexId> x) {
    check_symbols(graph_, x);
    const Word w(x.begin(), x.end());
    std::lock_guard lock(mutex_);
    if (int_table_) {
        try {
            // One factor per deleted symbol.
            return unscale(rec_reduced(*int_table_, int_memo_, w), int_table_->scale,
                           static_cast<unsigned>(w.size()));
        } catch (const Overflow&) {
        }
    }
    return rec_reduced(rat_table_, rat_memo_, w);
}

std::size_t BuildingCounter::cache_size() const {
    std::lock_guard lock(mutex_);
    return int_memo_.full.size() + int_memo_.reduced.size() + rat_memo_.full.size() + rat_memo_.reduced.size();
}

Rational b_rec(const WeightedGraph& g, std::span<const VertexId> x) { return BuildingCounter(g).b_rec(x); }

Rational b_tilde(const WeightedGraph& g, std::span<const VertexId> x) { return BuildingCounter(g).b_tilde(x); }

FastCounter::FastCounter(const WeightedGraph& g) : int_table_(integer_table(g)), rat_table_(rational_table(g)) {}

Rational FastCounter::eval(std::span<const VertexId> x, CountKind kind) {
    for (std::size_t i = 0; i < x.size(); ++i)
        require(x[i] < rat_table_.n, ErrorCode::invalid_argument,
                "symbol at position " + std::to_string(i + 1) + " is not a vertex");
    if (int_table_) {
        try {
            return unscale(int_counter_(*int_table_, x, kind), int_table_->scale, count_scale_exponent(x.size()));
        } catch (const Overflow&) {
        }
    }
    return rat_counter_(rat_table_, x, kind);
}

Rational FastCounter::b(std::span<const VertexId> x) { return eval(x, CountKind::building); }
Rational FastCounter::b_tilde(std::span<const VertexId> x) { return eval(x, CountKind::reduced); }

} // namespace insproc
