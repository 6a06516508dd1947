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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "insproc/buildings.hpp"
#include "insproc/consistency.hpp"
#include "insproc/dependence.hpp"
#include "insproc/json_io.hpp"
#include "insproc/polynomial.hpp"
#include "insproc/process.hpp"
#include "insproc/reports.hpp"
#include "insproc/sft.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>

using namespace insproc;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            pass = false;
            detail << "[failed: " << what << "] ";
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

WeightedGraph fixture(const std::string& name) {
    return graph_from_json(read_text_file(std::string(INSPROC_FIXTURES) + "/" + name + ".json"));
}

ShiftOfFiniteType sft_fixture(const std::string& name) {
    return sft_from_json(read_text_file(std::string(INSPROC_FIXTURES) + "/" + name + ".json"));
}

Word one_based(std::initializer_list<VertexId> xs) {
    Word x;
    for (VertexId v : xs)
        x.push_back(v - 1);
    return x;
}

void criterion_1(Outcome& o) {
    const auto t0 = Clock::now();
    IdentityOptions opt;
    opt.sweep_max_n = 7;
    opt.random_graphs = 100;
    opt.seed = 0;
    const IdentityReport r = verify_identities(opt);
    const double secs = seconds_since(t0);
    std::size_t words = 0;
    bool sweep_ok = true;
    for (const auto& g : r.json["sweep"]["graphs"]) {
        words += g["words"].get<std::size_t>();
        sweep_ok = sweep_ok && g["passed"].get<bool>();
    }
    o.expect(sweep_ok, "B_rec = B_bruteforce on every word");
    o.expect(r.json["sweep"]["graphs"].size() == 104, "K2..K4, kite and 100 random tables swept");
    o.expect(secs < 60, "sweep under 60 s");
    o.detail << words << " words over " << r.json["sweep"]["graphs"].size() << " graphs, lengths <= 7, "
             << std::fixed << std::setprecision(1) << secs << " s";
}

void criterion_2(Outcome& o) {
    for (std::size_t n = 2; n <= 4; ++n) {
        const Polynomial p = b_tilde_symbolic(n);
        o.expect(p == b_tilde_closed_form(n), "closed form n = " + std::to_string(n));
        o.detail << "n=" << n << ": " << p.to_string() << "; ";
    }
    o.expect(b_tilde_symbolic(3).to_string() == "4 + 2*w(1,3)", "n = 3 prints 4 + 2*w(1,3)");
}

void criterion_3(Outcome& o) {
    const auto t0 = Clock::now();
    const std::pair<const char*, std::size_t> cases[] = {{"k3", 2}, {"k4", 1}, {"k222", 2}, {"k2222", 1}};
    for (const auto& [name, k] : cases) {
        const auto g = fixture(name);
        const auto c = check_property_c(g, 6);
        o.expect(c.verified() && c.verified_up_to == 6, std::string(name) + " property (C) to N = 6");
        const auto d = check_k_dependence(g, k, 4, 4);
        o.expect(d.verified() && d.constants.size() == 16, std::string(name) + " k = " + std::to_string(k));
        o.detail << name << " k=" << k << " C_{4,4}=" << to_string(d.constants.at({4, 4})) << "; ";
    }
    const double secs = seconds_since(t0);
    o.expect(secs < 600, "under 10 minutes");
    o.detail << std::fixed << std::setprecision(1) << secs << " s";
}

void criterion_4(Outcome& o) {
    const auto k3 = check_k_dependence(make_complete(3, 1), 1, 4, 4);
    o.expect(k3.counterexample.has_value(), "K3 k = 1 fails");
    if (k3.counterexample) {
        const auto& c = *k3.counterexample;
        o.expect(c.anchor_lhs == 8 && c.lhs == 6 && c.expected == 8, "K3 witness 8 vs 6");
        o.detail << "K3 k=1: lhs " << to_string(c.lhs) << " vs " << to_string(c.expected) << "; ";
    }

    const auto k5 = min_k_search(make_complete(5, 1), 4, 4, 4);
    o.expect(!k5.k && k5.attempts.size() == 5, "K5 fails for every k <= 4");
    for (const auto& a : k5.attempts)
        o.expect(a.counterexample.has_value(), "K5 witness for k = " + std::to_string(a.k));
    o.detail << "K5: " << k5.attempts.size() << " witnesses for k=0..4; ";

    const auto w2 = check_property_c(make_complete(3, 2), 6);
    o.expect(w2.counterexample && w2.counterexample->n == 3, "2*K3 fails at n = 3");
    if (w2.counterexample)
        o.detail << "2*K3 fails at n=" << w2.counterexample->n << "; ";

    const auto d = unif_defect(3, 2);
    o.expect(d.closed_form == Rational(3, 2) && d.agree(), "unif_defect(3,2) = 3/2 = direct sum");
    o.detail << "unif_defect(3,2)=" << to_string(d.closed_form) << " direct=" << to_string(d.direct_sum);
}

void criterion_5(Outcome& o) {
    std::size_t checked = 0;
    for (const char* name : {"k2", "k3", "k4", "k5", "k6", "k22", "k222", "k2222", "k3_w2", "cycle5", "path3",
                             "kite"}) {
        const auto g = fixture(name);
        const auto r = check_property_c(g, 4);
        if (!r.verified())
            continue;
        const auto u = uniform_lemmas(g, r);
        if (!u)
            continue;
        o.expect(u->holds(), std::string(name) + " C1 = 2wd and t = (C2 - C1)/w^2");
        ++checked;
    }
    o.expect(checked >= 8, "at least 8 uniform fixtures pass to N = 4");
    o.detail << checked << " uniform fixtures; ";

    const auto kite = fixture("kite");
    const auto found = find_kite(kite);
    o.expect(found.has_value(), "kite fixture has a kite");
    if (found) {
        const auto k = kite_obstruction(kite, *found);
        o.expect(k.lhs >= 2 && k.bracket == 0, "kite lhs >= 2 against a zero bracket");
        o.detail << "kite lhs=" << to_string(k.lhs) << " bracket=" << to_string(k.bracket);
    }
}

void criterion_6(Outcome& o) {
    for (std::size_t q = 3; q <= 5; ++q) {
        const auto r = check_t_invariance(make_complete(q, 1), 8);
        o.expect(r.invariant && r.values.size() == 8, "K" + std::to_string(q) + " invariant to n = 8");
    }
    auto perturbed = make_complete(4, 1);
    perturbed.set_weight(0, 1, 2);
    perturbed.set_weight(1, 0, 2);
    const auto r = check_t_invariance(perturbed, 8);
    o.expect(!r.invariant && r.witness.has_value(), "perturbed K4 fails with a witness");
    o.detail << "K3..K5 invariant to n=8";
    if (r.witness)
        o.detail << "; perturbed K4 at n=" << r.witness->n << ": T(" << r.witness->pair.first + 1 << ","
                 << r.witness->pair.second + 1 << ")=" << to_string(r.witness->value) << " vs "
                 << to_string(r.witness->reference_value);
}

void criterion_7(Outcome& o) {
    const auto k4 = position_pair_law(make_complete(4, 1), 3, 0, 2);
    const auto k3_14 = position_pair_law(make_complete(3, 1), 4, 0, 3);
    const auto k3_13 = position_pair_law(make_complete(3, 1), 3, 0, 2);
    o.expect(k4.joint == k4.product, "K4 (1,3) under P3 is a product");
    o.expect(k3_14.joint == k3_14.product, "K3 (1,4) under P4 is a product");
    o.expect(k3_13.total_variation > 0, "K3 (1,3) under P3 differs");
    o.detail << "TV: K4(1,3|P3)=" << to_string(k4.total_variation) << " K3(1,4|P4)="
             << to_string(k3_14.total_variation) << " K3(1,3|P3)=" << to_string(k3_13.total_variation);
}

void criterion_8(Outcome& o) {
    const auto law = marginal(make_complete(4, 1), 5);
    const std::size_t draws = 100000;
    const auto batch = sample_exact(law, 0, draws);
    std::map<Word, std::size_t> counts;
    for (const Word& x : batch.words)
        ++counts[x];
    double worst = 0;
    for (std::size_t i = 0; i < law.words.size(); ++i) {
        const double p = to_double(law.probabilities[i]);
        const double se = std::sqrt(p * (1 - p) / static_cast<double>(draws));
        const double f = static_cast<double>(counts[law.words[i]]) / static_cast<double>(draws);
        worst = std::max(worst, std::abs(f - p) / se);
    }
    o.expect(counts.size() <= law.words.size(), "no draws outside the support");
    o.expect(worst <= 4, "every word within 4 standard errors");
    o.detail << law.words.size() << " words, worst deviation " << std::fixed << std::setprecision(2) << worst
             << " SE; ";

    for (std::size_t n = 1; n <= 5; ++n) {
        o.expect(insertion_total_variation(make_complete(3, 1), n) == 0, "K3 insertion TV 0, n = " + std::to_string(n));
        o.expect(insertion_total_variation(make_multipartite(3, 2, 1), n) == 0,
                 "K222 insertion TV 0, n = " + std::to_string(n));
    }
    o.detail << "insertion TV 0 on K3 and K222 for n<=5";
}

void criterion_9(Outcome& o) {
    const auto colorings = sft_fixture("colorings3");
    const auto lr = check_lr(colorings);
    o.expect(lr.is_constant && lr.K == std::size_t{2}, "K = 2");
    const auto c = check_property_c(de_bruijn(colorings), 5);
    o.expect(c.verified() && c.constants.size() == 4, "de Bruijn property (C) to N = 5");
    for (const Rational& cn : c.constants)
        o.expect(cn == 4, "C_n = 2K");

    std::size_t sampled = 0;
    for (const char* name : {"colorings3", "alternating2"}) {
        const auto s = sft_fixture(name);
        for (std::size_t window = 1; window <= 9; ++window)
            for (const Word& x : sample_sft(s, window, window, 2000).words) {
                o.expect(satisfies_windows(s, x), std::string(name) + " sample inside the shift");
                ++sampled;
            }
    }

    std::size_t certified = 0;
    for (const char* name : {"colorings3", "alternating2", "lr_violation"}) {
        o.expect(not_finitely_dependent_certificate(sft_fixture(name)).issued,
                 std::string(name) + " certificate issued");
        ++certified;
    }
    o.detail << "K=" << (lr.K ? std::to_string(*lr.K) : "none") << ", C_n=" << to_string(c.constants.front())
             << " for n=1..4, " << sampled << " samples inside the shift, " << certified << " certificates";
}

} // namespace

int main() {
    const std::function<void(Outcome&)> criteria[] = {criterion_1, criterion_2, criterion_3,
                                                      criterion_4, criterion_5, criterion_6,
                                                      criterion_7, criterion_8, criterion_9};
    bool all = true;
    for (std::size_t i = 0; i < std::size(criteria); ++i) {
        Outcome o;
        try {
            criteria[i](o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "[error: " << e.what() << "]";
        }
        all = all && o.pass;
        std::printf("criterion %zu: %s  %s\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.str().c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
