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

// insproc command line. Talks to the library only through insproc.h.
//
// Exit status: 0 verified / success, 1 counterexample (report written),
// 2 usage, parse or limit error.

#include "insproc.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitError = 2;

struct Options {
    std::string graph_path;
    std::string sft_path;
    std::size_t max_n = 0;
    std::size_t max_m = 4;
    std::size_t k = 1;
    std::size_t max_k = 4;
    std::size_t window = 5;
    std::size_t count = 1000;
    std::uint64_t seed = 0;
    std::size_t threads = 1;
    std::string out_path;
    bool pretty = false;
    std::optional<std::size_t> gap;
    std::string method = "exact";
    bool certify = false;
    bool window_given = false;
    std::size_t random_graphs = 100;
    bool omit_boundary = false;
};

/// Thrown for library failures; carries the message and the exit status.
struct Failure {
    int exit_code;
    std::string message;
    insproc_status status;
};

void check(insproc_status s) {
    if (s != INSPROC_OK)
        throw Failure{kExitError, insproc_last_error(), s};
}

struct OwnedString {
    char* p = nullptr;
    ~OwnedString() { insproc_string_free(p); }
    std::string str() const { return p ? std::string(p) : std::string(); }
};

struct GraphHandle {
    insproc_graph* g = nullptr;
    ~GraphHandle() { insproc_graph_free(g); }
};

struct SftHandle {
    insproc_sft* s = nullptr;
    ~SftHandle() { insproc_sft_free(s); }
};

std::string read_file(const std::string& path, const char* what) {
    if (path.empty())
        throw Failure{kExitError, std::string("--") + what + " is required", INSPROC_ERR_INVALID_ARGUMENT};
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Failure{kExitError, "cannot open " + path, INSPROC_ERR_INVALID_ARGUMENT};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void load_graph(const Options& o, GraphHandle& h) {
    const std::string text = read_file(o.graph_path, "graph");
    const insproc_status s = insproc_graph_from_json(text.c_str(), &h.g);
    if (s != INSPROC_OK)
        throw Failure{kExitError, o.graph_path + ": " + insproc_last_error(), s};
}

void load_sft(const Options& o, SftHandle& h) {
    const std::string text = read_file(o.sft_path, "sft");
    const insproc_status s = insproc_sft_from_json(text.c_str(), &h.s);
    if (s != INSPROC_OK)
        throw Failure{kExitError, o.sft_path + ": " + insproc_last_error(), s};
}

void write_output(const Options& o, const std::string& body, bool is_report) {
    std::string text = body;
    if (is_report && o.pretty) {
        OwnedString table;
        check(insproc_render_table(body.c_str(), &table.p));
        text = table.str();
    } else if (is_report) {
        text += '\n';
    }
    if (o.out_path.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(o.out_path, std::ios::binary);
    if (!out || !(out << text))
        throw Failure{kExitError, "cannot write " + o.out_path, INSPROC_ERR_INVALID_ARGUMENT};
}

/// k-dependence needs property (C); when it fails, report the consistency counterexample instead.
int precondition_report(const Options& o, const insproc_graph* g, std::size_t window) {
    OwnedString json;
    int verdict = 0;
    check(insproc_check_property_c(g, window, o.threads, &verdict, &json.p));
    std::string body = "{\"property\":\"k-dependence\",\"verified\":false,"
                       "\"precondition\":\"property C fails on the window N = " +
                       std::to_string(window) + "\",\"property_c\":" + json.str() + "}";
    write_output(o, body, true);
    return kExitCounterexample;
}

int run_analyze(const Options& o) {
    GraphHandle h;
    load_graph(o, h);
    OwnedString json;
    check(insproc_analyze(h.g, o.max_n ? o.max_n : 4, o.threads, &json.p));
    write_output(o, json.str(), true);
    return kExitOk;
}

int run_check_c(const Options& o) {
    GraphHandle h;
    load_graph(o, h);
    OwnedString json;
    int verdict = 0;
    check(insproc_check_property_c(h.g, o.max_n ? o.max_n : 5, o.threads, &verdict, &json.p));
    write_output(o, json.str(), true);
    return verdict ? kExitOk : kExitCounterexample;
}

int run_check_kdep(const Options& o) {
    GraphHandle h;
    load_graph(o, h);
    const std::size_t max_n = o.max_n ? o.max_n : 4;
    OwnedString json;
    int verdict = 0;
    const insproc_status s = insproc_check_k_dependence(h.g, o.k, max_n, o.max_m, o.threads, &verdict, &json.p);
    if (s == INSPROC_ERR_PRECONDITION)
        return precondition_report(o, h.g, std::max(max_n, o.max_m) + 1);
    check(s);
    write_output(o, json.str(), true);
    return verdict ? kExitOk : kExitCounterexample;
}

int run_min_k(const Options& o) {
    GraphHandle h;
    load_graph(o, h);
    const std::size_t max_n = o.max_n ? o.max_n : 4;
    OwnedString json;
    int verdict = 0;
    const insproc_status s = insproc_min_k(h.g, o.max_k, max_n, o.max_m, o.threads, &verdict, &json.p);
    if (s == INSPROC_ERR_PRECONDITION)
        return precondition_report(o, h.g, std::max(max_n, o.max_m) + 1);
    check(s);
    write_output(o, json.str(), true);
    return verdict ? kExitOk : kExitCounterexample;
}

int run_sample(const Options& o) {
    GraphHandle h;
    load_graph(o, h);
    OwnedString out;
    if (o.gap) {
        int reject = 0;
        check(insproc_gap_independence(h.g, o.window, *o.gap, o.seed, o.count, o.threads, &reject, &out.p));
        write_output(o, out.str(), true);
        return kExitOk;
    }
    const insproc_sampler method = o.method == "insertion" ? INSPROC_SAMPLER_INSERTION : INSPROC_SAMPLER_EXACT;
    check(insproc_sample(h.g, o.window, o.seed, o.count, method, o.threads, &out.p));
    write_output(o, out.str(), false);
    return kExitOk;
}

int run_sft(const Options& o) {
    SftHandle h;
    load_sft(o, h);
    OwnedString out;
    int verdict = 0;
    if (o.certify) {
        check(insproc_sft_certify(h.s, &verdict, &out.p));
        write_output(o, out.str(), true);
        return verdict ? kExitOk : kExitCounterexample;
    }
    if (o.window_given) {
        const insproc_status s = insproc_sft_sample(h.s, o.window, o.seed, o.count, o.threads, &out.p);
        if (s == INSPROC_ERR_PRECONDITION)
            throw Failure{kExitCounterexample, insproc_last_error(), s};
        check(s);
        write_output(o, out.str(), false);
        return kExitOk;
    }
    check(insproc_sft_analyze(h.s, o.max_n ? o.max_n : 5, o.threads, &verdict, &out.p));
    write_output(o, out.str(), true);
    return verdict ? kExitOk : kExitCounterexample;
}

int run_verify(const Options& o) {
    OwnedString out;
    int verdict = 0;
    check(insproc_verify_identities(o.max_n ? o.max_n : 7, o.random_graphs, o.seed, o.omit_boundary ? 1 : 0,
                                    &verdict, &out.p));
    write_output(o, out.str(), true);
    return verdict ? kExitOk : kExitCounterexample;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact building counts, consistency and k-dependence checks, and samplers for insertion "
                 "processes on weighted graphs"};
    app.set_version_flag("--version", std::string(insproc_version()));
    app.require_subcommand(1);

    Options o;
    auto positive = CLI::PositiveNumber;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--threads", o.threads, "worker threads (output does not depend on it)")->check(positive);
        cmd->add_option("--out", o.out_path, "write the report here instead of stdout");
        cmd->add_flag("--pretty", o.pretty, "render reports as a two-column table");
    };
    auto add_graph = [&](CLI::App* cmd) {
        cmd->add_option("--graph", o.graph_path, "graph JSON file")->required();
    };

    auto* analyze = app.add_subcommand("analyze", "structural predicates and property (C) summary");
    add_graph(analyze);
    analyze->add_option("--max-n", o.max_n, "property (C) window N (default 4)")->check(CLI::Range(2, 64));
    add_common(analyze);

    auto* check_c = app.add_subcommand("check-c", "decide property (C) for lengths below N");
    add_graph(check_c);
    check_c->add_option("--max-n", o.max_n, "window N (default 5)")->check(CLI::Range(2, 64));
    add_common(check_c);

    auto* kdep = app.add_subcommand("check-kdep", "check k-dependence on windows |x| <= max-n, |y| <= max-m");
    add_graph(kdep);
    kdep->add_option("--k", o.k, "gap length k (default 1)");
    kdep->add_option("--max-n", o.max_n, "longest x (default 4)")->check(positive);
    kdep->add_option("--max-m", o.max_m, "longest y (default 4)")->check(positive);
    add_common(kdep);

    auto* mink = app.add_subcommand("min-k", "least k <= max-k passing check-kdep");
    add_graph(mink);
    mink->add_option("--max-k", o.max_k, "largest k tried (default 4)");
    mink->add_option("--max-n", o.max_n, "longest x (default 4)")->check(positive);
    mink->add_option("--max-m", o.max_m, "longest y (default 4)")->check(positive);
    add_common(mink);

    auto* sample = app.add_subcommand("sample", "draw words of length --window as NDJSON");
    add_graph(sample);
    sample->add_option("--window", o.window, "word length (default 5)")->check(positive);
    sample->add_option("--count", o.count, "number of words (default 1000)");
    sample->add_option("--seed", o.seed, "64-bit seed (default 0)");
    sample->add_option("--method", o.method, "exact or insertion (default exact)")
        ->check(CLI::IsMember({"exact", "insertion"}));
    sample->add_option("--gap", o.gap, "instead of words, report a chi-square test of (X_1, X_{gap+2})");
    add_common(sample);

    auto* sft = app.add_subcommand("sft", "shift of finite type: L/R counts, de Bruijn checks, samples");
    sft->add_option("--sft,--file", o.sft_path, "SFT JSON file")->required();
    sft->add_flag("--certify", o.certify, "emit the not-finitely-dependent certificate only");
    sft->add_option("--max-n", o.max_n, "de Bruijn property (C) window (default 5)")->check(CLI::Range(2, 64));
    auto* window = sft->add_option("--window", o.window, "sample words of this many symbols")->check(positive);
    sft->add_option("--count", o.count, "number of words (default 1000)");
    sft->add_option("--seed", o.seed, "64-bit seed (default 0)");
    add_common(sft);

    auto* verify = app.add_subcommand("verify-identities", "symbolic closed forms and the brute-force sweep");
    verify->add_option("--max-n", o.max_n, "longest swept word (default 7)")->check(CLI::Range(1, 8));
    verify->add_option("--random-graphs", o.random_graphs, "random weight tables in the sweep (default 100)");
    verify->add_option("--seed", o.seed, "seed for the random tables (default 0)");
    verify->add_flag("--omit-boundary", o.omit_boundary, "inject the wrong boundary convention");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }
    o.window_given = window->count() > 0;

    try {
        if (*analyze)
            return run_analyze(o);
        if (*check_c)
            return run_check_c(o);
        if (*kdep)
            return run_check_kdep(o);
        if (*mink)
            return run_min_k(o);
        if (*sample)
            return run_sample(o);
        if (*sft)
            return run_sft(o);
        if (*verify)
            return run_verify(o);
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << '\n';
        return f.exit_code;
    }
    return kExitError;
}
