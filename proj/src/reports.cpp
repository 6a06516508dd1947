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

#include "insproc/reports.hpp"
#include "insproc/buildings.hpp"
#include "insproc/error.hpp"

#include <cmath>
#include <sstream>

namespace insproc {

namespace {

Json optional_size(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

Json triple_to_json(const std::optional<Triple>& t) {
    if (!t)
        return nullptr;
    return Json::array({(*t)[0] + 1, (*t)[1] + 1, (*t)[2] + 1});
}

Json kite_to_json(const Kite& k) {
    return Json{{"a", k.a + 1}, {"b", k.b + 1}, {"c", k.c + 1}, {"d", k.d + 1}};
}

const char* side_name(Side s) { return s == Side::left ? "left" : "right"; }

const char* failure_name(DependenceFailure f) {
    switch (f) {
    case DependenceFailure::mismatch:
        return "mismatch";
    case DependenceFailure::zero_constant:
        return "zero_constant";
    case DependenceFailure::nonzero_on_zero_word:
        return "nonzero_on_zero_word";
    }
    return "unknown";
}

Json number_or_string(double v) {
    if (std::isfinite(v))
        return v;
    return v > 0 ? "inf" : "-inf";
}

} // namespace

Json to_json(const ConsistencyReport& r) {
    Json constants = Json::array();
    for (std::size_t i = 0; i < r.constants.size(); ++i)
        constants.push_back(Json{{"n", i + 1}, {"C", rational_to_json(r.constants[i])}});
    Json out{{"property", "C"},
             {"verified", r.verified()},
             {"requested_N", r.requested},
             {"verified_up_to", r.verified_up_to},
             {"constants", std::move(constants)},
             {"degenerate_at", optional_size(r.degenerate_at)},
             {"counterexample", nullptr}};
    if (r.counterexample) {
        const auto& c = *r.counterexample;
        out["counterexample"] = Json{{"n", c.n},
                                     {"word", word_to_json(c.word)},
                                     {"side", side_name(c.side)},
                                     {"observed", rational_to_json(c.observed)},
                                     {"expected", rational_to_json(c.expected)},
                                     {"anchor", word_to_json(c.anchor)}};
    }
    return out;
}

Json to_json(const DependenceReport& r) {
    Json constants = Json::array();
    for (const auto& [nm, c] : r.constants)
        constants.push_back(Json{{"n", nm.first}, {"m", nm.second}, {"C", rational_to_json(c)}});
    Json out{{"property", "k-dependence"},
             {"k", r.k},
             {"verified", r.verified()},
             {"max_n", r.max_n},
             {"max_m", r.max_m},
             {"consistency_window", r.consistency_window},
             {"constants", std::move(constants)},
             {"zero_weight_checks", r.zero_weight_checks},
             {"counterexample", nullptr}};
    if (r.counterexample) {
        const auto& c = *r.counterexample;
        out["counterexample"] = Json{{"kind", failure_name(c.kind)},
                                     {"n", c.n},
                                     {"m", c.m},
                                     {"x", word_to_json(c.x)},
                                     {"y", word_to_json(c.y)},
                                     {"lhs", rational_to_json(c.lhs)},
                                     {"expected", rational_to_json(c.expected)},
                                     {"anchor_x", word_to_json(c.anchor_x)},
                                     {"anchor_y", word_to_json(c.anchor_y)},
                                     {"anchor_lhs", rational_to_json(c.anchor_lhs)}};
    }
    return out;
}

Json to_json(const MinKResult& r) {
    Json attempts = Json::array();
    for (const auto& a : r.attempts)
        attempts.push_back(to_json(a));
    return Json{{"min_k", optional_size(r.k)}, {"attempts", std::move(attempts)}};
}

Json to_json(const TriangleCertificate& c) {
    return Json{{"statement", "triangle necessity"},
                {"verdict", c.not_finitely_dependent ? "not finitely dependent" : "inconclusive"},
                {"argument", "a finitely dependent insertion process requires a directed triangle "
                             "w(a,b) w(b,c) w(a,c) > 0"},
                {"triangle", triple_to_json(c.triangle)},
                {"triples_scanned", c.triples_scanned}};
}

Json to_json(const TInvarianceReport& r) {
    Json values = Json::array();
    for (std::size_t i = 0; i < r.values.size(); ++i)
        values.push_back(Json{{"n", i + 1}, {"T", rational_to_json(r.values[i])}});
    Json out{{"invariant", r.invariant}, {"values", std::move(values)}, {"witness", nullptr}};
    if (r.witness) {
        const auto& w = *r.witness;
        out["witness"] = Json{{"n", w.n},
                              {"pair", Json::array({w.pair.first + 1, w.pair.second + 1})},
                              {"value", rational_to_json(w.value)},
                              {"reference", Json::array({w.reference.first + 1, w.reference.second + 1})},
                              {"reference_value", rational_to_json(w.reference_value)}};
    }
    return out;
}

Json to_json(const UniformDefect& d) {
    return Json{{"closed_form", rational_to_json(d.closed_form)},
                {"direct_sum", rational_to_json(d.direct_sum)},
                {"agree", d.agree()}};
}

Json to_json(const UniformLemmaCheck& u) {
    return Json{{"w", rational_to_json(u.w)},
                {"degree", optional_size(u.degree)},
                {"triangles_per_edge", optional_size(u.triangles_per_edge)},
                {"C1", rational_to_json(u.c1)},
                {"C2", rational_to_json(u.c2)},
                {"C1_equals_2wd", u.c1_holds},
                {"t_equals_(C2-C1)/w^2", u.t_holds}};
}

Json to_json(const KiteObstruction& k, const Kite& kite) {
    Json terms = Json::array();
    for (std::size_t v = 0; v < k.terms.size(); ++v)
        terms.push_back(Json{{"v", v + 1}, {"term", rational_to_json(k.terms[v])}});
    return Json{{"kite", kite_to_json(kite)},
                {"lhs", rational_to_json(k.lhs)},
                {"bracket", rational_to_json(k.bracket)},
                {"rhs", rational_to_json(k.rhs)},
                {"term_at_c", rational_to_json(k.term_at_c)},
                {"contradiction", k.lhs != k.rhs},
                {"terms", std::move(terms)}};
}

Json to_json(const StationarityReport& r) {
    return Json{{"stationary", r.stationary}, {"max_defect", rational_to_json(r.max_defect)}};
}

Json to_json(const ChiSquareReport& r) {
    return Json{{"test", "pearson chi-square, (X_1, X_{gap+2}) against P_1 x P_1"},
                {"gap", r.gap},
                {"samples", r.samples},
                {"statistic", number_or_string(r.statistic)},
                {"degrees_of_freedom", r.degrees_of_freedom},
                {"p_value", r.p_value},
                {"significance", r.significance},
                {"reject", r.reject}};
}

Json to_json(const LRReport& r) {
    Json out{{"is_constant", r.is_constant}, {"K", optional_size(r.K)}, {"violation", nullptr}};
    if (r.violation) {
        const auto& v = *r.violation;
        out["violation"] = Json{{"tuple", word_to_json(v.tuple)},
                                {"L", v.left_count},
                                {"R", v.right_count},
                                {"reference", word_to_json(v.reference)},
                                {"reference_count", v.reference_count}};
    }
    return out;
}

Json to_json(const SftCertificate& c) {
    return Json{{"issued", c.issued},
                {"statement", "shift of finite type insertion process"},
                {"verdict", c.issued ? "not finitely dependent" : "not issued"},
                {"argument", "a directed triangle s->t->u, s->u in the de Bruijn graph forces t = u, so t would "
                             "be a constant tuple; a loopless shift has none, and without a directed triangle "
                             "the insertion process is not finitely dependent"},
                {"de_bruijn_vertices", c.de_bruijn_vertices},
                {"scan", Json{{"triples_scanned", c.scan.triples_scanned},
                              {"triangle", triple_to_json(c.scan.witness)}}}};
}

Json analyze_graph(const WeightedGraph& g, std::size_t max_n, std::size_t threads) {
    const bool simple = g.is_symmetric() && g.is_loopless();
    const UniformWeightReport uniform = uniform_weight(g);
    Json out{{"vertices", g.vertex_count()},
             {"symmetric", g.is_symmetric()},
             {"loopless", g.is_loopless()},
             {"strongly_connected", is_strongly_connected(g)},
             {"uniform_weight", uniform.is_uniform},
             {"w", uniform.w ? rational_to_json(*uniform.w) : Json(nullptr)},
             {"regularity", optional_size(regularity(g))},
             {"directed_triangle", triple_to_json(has_directed_triangle(g))}};

    std::optional<Kite> kite;
    if (simple) {
        kite = find_kite(g);
        out["kite"] = kite ? kite_to_json(*kite) : Json(nullptr);
        out["triangles_per_edge"] = optional_size(triangles_per_edge(g));
        const MultipartiteClassification cls = classify_multipartite(g);
        Json parts = Json::array();
        for (const auto& p : cls.parts)
            parts.push_back(word_to_json(p));
        out["complete_multipartite"] = Json{{"is_complete_multipartite", cls.is_complete_multipartite},
                                            {"q", cls.q},
                                            {"r", optional_size(cls.r)},
                                            {"parts", std::move(parts)}};
    }

    const ConsistencyReport c = check_property_c(g, max_n, threads);
    out["property_c"] = to_json(c);
    if (auto lemmas = uniform_lemmas(g, c))
        out["uniform_lemmas"] = to_json(*lemmas);
    if (kite && uniform.is_uniform) {
        std::optional<Rational> c3;
        if (c.constants.size() >= 3)
            c3 = c.constants[2];
        out["kite_obstruction"] = to_json(kite_obstruction(g, *kite, c3), *kite);
    }

    bool complete = true;
    for (VertexId i = 0; i < g.vertex_count(); ++i)
        for (VertexId j = 0; j < g.vertex_count(); ++j)
            complete = complete && (i == j ? !g.positive(i, j) : g.positive(i, j));
    if (complete)
        out["t_invariance"] = to_json(check_t_invariance(g, std::max<std::size_t>(max_n - 1, 1)));
    out["triangle_certificate"] = to_json(triangle_necessity(g));
    return out;
}

SftAnalysis analyze_sft(const ShiftOfFiniteType& s, std::size_t max_n, std::size_t threads) {
    const WeightedGraph g = de_bruijn(s);
    const LRReport lr = check_lr(s);
    const ConsistencyReport c = check_property_c(g, max_n, threads);
    bool two_k = lr.K.has_value() && c.verified();
    if (two_k)
        for (const Rational& cn : c.constants)
            two_k = two_k && cn == Rational(2 * *lr.K);
    SftAnalysis out;
    const bool lr_pass = lr.is_constant && *lr.K >= 1;
    out.consistent = lr_pass && c.verified();
    out.json = Json{{"shift", sft_to_json(s)},
                    {"de_bruijn", graph_to_json(g)},
                    {"lr", to_json(lr)},
                    {"property_c", to_json(c)},
                    {"lr_agrees_with_property_c", lr_pass == c.verified()},
                    {"constants_equal_2K", two_k},
                    {"certificate", to_json(not_finitely_dependent_certificate(s))}};
    return out;
}

WeightedGraph random_sweep_graph(std::uint64_t seed, std::size_t index) {
    Rng rng(Rng::split(seed, index));
    WeightedGraph g(4);
    for (VertexId i = 0; i < 4; ++i)
        for (VertexId j = 0; j < 4; ++j)
            g.set_weight(i, j, Rational(static_cast<long>(rng.next() % 5), static_cast<long>(1 + rng.next() % 3)));
    return g;
}

WeightedGraph kite_graph() {
    WeightedGraph g(4);
    for (auto [i, j] : {std::pair<VertexId, VertexId>{0, 1}, {0, 2}, {1, 2}, {0, 3}}) {
        g.set_weight(i, j, 1);
        g.set_weight(j, i, 1);
    }
    return g;
}

namespace {

struct SweepResult {
    std::uint64_t words = 0;
    std::optional<Json> mismatch;
};

SweepResult sweep_graph(const WeightedGraph& g, std::size_t max_n) {
    SweepResult out;
    BuildingCounter counter(g);
    const std::size_t q = g.vertex_count();
    for (std::size_t n = 1; n <= max_n; ++n) {
        Word x(n, 0);
        while (true) {
            ++out.words;
            const Rational rec = counter.b_rec(x);
            const Rational brute = b_bruteforce(g, x);
            const Rational factored = word_weight(g, x) * counter.b_tilde(x);
            if (rec != brute || rec != factored) {
                out.mismatch = Json{{"word", word_to_json(x)},
                                    {"b_rec", rational_to_json(rec)},
                                    {"b_bruteforce", rational_to_json(brute)},
                                    {"w_times_b_tilde", rational_to_json(factored)}};
                return out;
            }
            std::size_t i = 0;
            while (i < n && ++x[n - 1 - i] == q)
                x[n - 1 - i++] = 0;
            if (i == n)
                break;
        }
    }
    return out;
}

} // namespace

IdentityReport verify_identities(const IdentityOptions& options) {
    require(options.sweep_max_n <= kDefaultBruteForceBound, ErrorCode::limit_exceeded,
            "sweep bound above the brute-force limit of " + std::to_string(kDefaultBruteForceBound));
    IdentityReport report;
    report.passed = true;

    Json symbolic = Json::array();
    for (std::size_t n = 2; n <= 4; ++n) {
        const Polynomial computed = b_tilde_symbolic(n, options.convention);
        const Polynomial expected = b_tilde_closed_form(n);
        const bool ok = computed == expected;
        report.passed = report.passed && ok;
        symbolic.push_back(Json{{"n", n},
                                {"computed", computed.to_string()},
                                {"closed_form", expected.to_string()},
                                {"passed", ok}});
    }

    Json graphs = Json::array();
    auto run = [&](const std::string& name, const WeightedGraph& g) {
        const SweepResult r = sweep_graph(g, options.sweep_max_n);
        report.passed = report.passed && !r.mismatch;
        graphs.push_back(Json{{"graph", name},
                              {"words", r.words},
                              {"passed", !r.mismatch},
                              {"mismatch", r.mismatch ? *r.mismatch : Json(nullptr)}});
    };
    for (std::size_t q = 2; q <= 4; ++q)
        run("K" + std::to_string(q), make_complete(q, 1));
    run("kite", kite_graph());
    for (std::size_t i = 0; i < options.random_graphs; ++i)
        run("random#" + std::to_string(i), random_sweep_graph(options.seed, i));

    report.json = Json{{"passed", report.passed},
                       {"boundary_convention",
                        options.convention == BoundaryConvention::unit_factor ? "unit_factor" : "omitted"},
                       {"symbolic", std::move(symbolic)},
                       {"sweep", Json{{"max_n", options.sweep_max_n},
                                      {"random_graphs", options.random_graphs},
                                      {"seed", options.seed},
                                      {"checks", "B_rec = B_bruteforce = w * B_tilde on every word"},
                                      {"graphs", std::move(graphs)}}}};
    return report;
}

namespace {

void flatten(const Json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows) {
    if (j.is_object() && !j.empty()) {
        for (const auto& [k, v] : j.items())
            flatten(v, path.empty() ? k : path + "." + k, rows);
    } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten(j[i], path + "[" + std::to_string(i) + "]", rows);
    } else {
        rows.emplace_back(path, j.is_string() ? j.get<std::string>() : j.dump());
    }
}

} // namespace

std::string render_table(const Json& j) {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(j, "", rows);
    std::size_t width = 0;
    for (const auto& r : rows)
        width = std::max(width, r.first.size());
    std::ostringstream out;
    for (const auto& [k, v] : rows)
        out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
    return out.str();
}

} // namespace insproc
