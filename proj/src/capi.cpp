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

#include "insproc.h"

#include "insproc/buildings.hpp"
#include "insproc/error.hpp"
#include "insproc/reports.hpp"

#include <cstring>
#include <new>
#include <string>

struct insproc_graph {
    insproc::WeightedGraph graph;
};

struct insproc_sft {
    insproc::ShiftOfFiniteType shift;
};

namespace {

thread_local std::string last_error;

insproc_status status_of(insproc::ErrorCode code) {
    switch (code) {
    case insproc::ErrorCode::invalid_argument:
        return INSPROC_ERR_INVALID_ARGUMENT;
    case insproc::ErrorCode::parse:
        return INSPROC_ERR_PARSE;
    case insproc::ErrorCode::limit_exceeded:
        return INSPROC_ERR_LIMIT;
    case insproc::ErrorCode::precondition:
        return INSPROC_ERR_PRECONDITION;
    case insproc::ErrorCode::dead_end:
        return INSPROC_ERR_DEAD_END;
    }
    return INSPROC_ERR_INTERNAL;
}

template <class F>
insproc_status guarded(F&& f) {
    try {
        last_error.clear();
        f();
        return INSPROC_OK;
    } catch (const insproc::Error& e) {
        last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return INSPROC_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return INSPROC_ERR_INTERNAL;
    }
}

char* copy_out(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(char** dst, const insproc::Json& j) { *dst = copy_out(j.dump()); }

void need(const void* p, const char* what) {
    insproc::require(p != nullptr, insproc::ErrorCode::invalid_argument, std::string(what) + " is null");
}

void set_verdict(int* verdict, bool v) {
    if (verdict)
        *verdict = v ? 1 : 0;
}

std::size_t threads_or_one(std::size_t t) { return t == 0 ? 1 : t; }

} // namespace

extern "C" {

const char* insproc_version(void) { return "0.1.0"; }

const char* insproc_last_error(void) { return last_error.c_str(); }

void insproc_string_free(char* s) { delete[] s; }

insproc_status insproc_graph_from_json(const char* json, insproc_graph** out) {
    return guarded([&] {
        need(json, "json");
        need(out, "out");
        *out = new insproc_graph{insproc::graph_from_json(json)};
    });
}

insproc_status insproc_graph_complete(size_t q, const char* weight, insproc_graph** out) {
    return guarded([&] {
        need(out, "out");
        const insproc::Rational w = weight ? insproc::parse_rational(weight) : insproc::Rational(1);
        *out = new insproc_graph{insproc::make_complete(q, w)};
    });
}

insproc_status insproc_graph_multipartite(size_t q, size_t r, const char* weight, insproc_graph** out) {
    return guarded([&] {
        need(out, "out");
        const insproc::Rational w = weight ? insproc::parse_rational(weight) : insproc::Rational(1);
        *out = new insproc_graph{insproc::make_multipartite(q, r, w)};
    });
}

void insproc_graph_free(insproc_graph* g) { delete g; }

insproc_status insproc_graph_vertex_count(const insproc_graph* g, size_t* out) {
    return guarded([&] {
        need(g, "graph");
        need(out, "out");
        *out = g->graph.vertex_count();
    });
}

insproc_status insproc_graph_to_json(const insproc_graph* g, char** json) {
    return guarded([&] {
        need(g, "graph");
        need(json, "json");
        emit(json, insproc::graph_to_json(g->graph));
    });
}

insproc_status insproc_building_count(const insproc_graph* g, const uint32_t* word, size_t length, int reduced,
                                      char** value) {
    return guarded([&] {
        need(g, "graph");
        need(value, "value");
        if (length > 0)
            need(word, "word");
        insproc::Word x;
        for (size_t i = 0; i < length; ++i) {
            insproc::require(word[i] >= 1 && word[i] <= g->graph.vertex_count(),
                             insproc::ErrorCode::invalid_argument,
                             "word symbol " + std::to_string(word[i]) + " is not a vertex");
            x.push_back(word[i] - 1);
        }
        insproc::FastCounter counter(g->graph);
        *value = copy_out(insproc::to_string(reduced ? counter.b_tilde(x) : counter.b(x)));
    });
}

insproc_status insproc_analyze(const insproc_graph* g, size_t max_n, size_t threads, char** json) {
    return guarded([&] {
        need(g, "graph");
        need(json, "json");
        emit(json, insproc::analyze_graph(g->graph, max_n, threads_or_one(threads)));
    });
}

insproc_status insproc_check_property_c(const insproc_graph* g, size_t max_n, size_t threads, int* verdict,
                                        char** json) {
    return guarded([&] {
        need(g, "graph");
        need(json, "json");
        const auto r = insproc::check_property_c(g->graph, max_n, threads_or_one(threads));
        set_verdict(verdict, r.verified());
        emit(json, insproc::to_json(r));
    });
}

insproc_status insproc_check_k_dependence(const insproc_graph* g, size_t k, size_t max_n, size_t max_m,
                                          size_t threads, int* verdict, char** json) {
    return guarded([&] {
        need(g, "graph");
        need(json, "json");
        const auto r = insproc::check_k_dependence(g->graph, k, max_n, max_m, threads_or_one(threads));
        set_verdict(verdict, r.verified());
        emit(json, insproc::to_json(r));
    });
}

insproc_status insproc_min_k(const insproc_graph* g, size_t max_k, size_t max_n, size_t max_m, size_t threads,
                             int* verdict, char** json) {
    return guarded([&] {
        need(g, "graph");
        need(json, "json");
        const auto r = insproc::min_k_search(g->graph, max_k, max_n, max_m, threads_or_one(threads));
        set_verdict(verdict, r.k.has_value());
        emit(json, insproc::to_json(r));
    });
}

insproc_status insproc_triangle_certificate(const insproc_graph* g, int* verdict, char** json) {
    return guarded([&] {
        need(g, "graph");
        need(json, "json");
        const auto c = insproc::triangle_necessity(g->graph);
        set_verdict(verdict, c.not_finitely_dependent);
        emit(json, insproc::to_json(c));
    });
}

insproc_status insproc_sample(const insproc_graph* g, size_t length, uint64_t seed, size_t count,
                              insproc_sampler method, size_t threads, char** ndjson) {
    return guarded([&] {
        need(g, "graph");
        need(ndjson, "ndjson");
        insproc::SampleBatch batch;
        if (method == INSPROC_SAMPLER_EXACT) {
            batch = insproc::sample_exact(g->graph, length, seed, count, threads_or_one(threads));
        } else if (method == INSPROC_SAMPLER_INSERTION) {
            batch.seed = seed;
            batch.length = length;
            for (size_t i = 0; i < count; ++i)
                batch.words.push_back(insproc::sample_insertion(g->graph, length, insproc::Rng::split(seed, i)).word);
        } else {
            insproc::fail(insproc::ErrorCode::invalid_argument, "unknown sampler");
        }
        *ndjson = copy_out(insproc::batch_to_ndjson(batch));
    });
}

insproc_status insproc_gap_independence(const insproc_graph* g, size_t length, size_t gap, uint64_t seed,
                                        size_t count, size_t threads, int* verdict, char** json) {
    return guarded([&] {
        need(g, "graph");
        need(json, "json");
        const auto batch = insproc::sample_exact(g->graph, length, seed, count, threads_or_one(threads));
        const auto r = insproc::empirical_gap_independence(g->graph, batch, gap);
        set_verdict(verdict, r.reject);
        insproc::Json out = insproc::to_json(r);
        out["length"] = length;
        out["seed"] = seed;
        emit(json, out);
    });
}

insproc_status insproc_sft_from_json(const char* json, insproc_sft** out) {
    return guarded([&] {
        need(json, "json");
        need(out, "out");
        *out = new insproc_sft{insproc::sft_from_json(json)};
    });
}

void insproc_sft_free(insproc_sft* s) { delete s; }

insproc_status insproc_sft_analyze(const insproc_sft* s, size_t max_n, size_t threads, int* verdict, char** json) {
    return guarded([&] {
        need(s, "sft");
        need(json, "json");
        auto r = insproc::analyze_sft(s->shift, max_n, threads_or_one(threads));
        set_verdict(verdict, r.consistent);
        emit(json, r.json);
    });
}

insproc_status insproc_sft_certify(const insproc_sft* s, int* verdict, char** json) {
    return guarded([&] {
        need(s, "sft");
        need(json, "json");
        const auto c = insproc::not_finitely_dependent_certificate(s->shift);
        set_verdict(verdict, c.issued);
        emit(json, insproc::to_json(c));
    });
}

insproc_status insproc_sft_sample(const insproc_sft* s, size_t window, uint64_t seed, size_t count, size_t threads,
                                  char** ndjson) {
    return guarded([&] {
        need(s, "sft");
        need(ndjson, "ndjson");
        *ndjson = copy_out(
            insproc::batch_to_ndjson(insproc::sample_sft(s->shift, window, seed, count, threads_or_one(threads))));
    });
}

insproc_status insproc_verify_identities(size_t sweep_max_n, size_t random_graphs, uint64_t seed, int omit_boundary,
                                         int* verdict, char** json) {
    return guarded([&] {
        need(json, "json");
        insproc::IdentityOptions options;
        options.sweep_max_n = sweep_max_n;
        options.random_graphs = random_graphs;
        options.seed = seed;
        options.convention =
            omit_boundary ? insproc::BoundaryConvention::omitted : insproc::BoundaryConvention::unit_factor;
        auto r = insproc::verify_identities(options);
        set_verdict(verdict, r.passed);
        emit(json, r.json);
    });
}

insproc_status insproc_render_table(const char* json, char** table) {
    return guarded([&] {
        need(json, "json");
        need(table, "table");
        insproc::Json j;
        try {
            j = insproc::Json::parse(json);
        } catch (const insproc::Json::parse_error& e) {
            insproc::fail(insproc::ErrorCode::parse, e.what());
        }
        *table = copy_out(insproc::render_table(j));
    });
}

} // extern "C"
