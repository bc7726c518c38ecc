#include "toughcycles.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <string>
#include <vector>

#include <json.hpp>

#include "toughcycles/io.hpp"
#include "toughcycles/report.hpp"
#include "toughcycles/verifier.hpp"

using namespace toughcycles;

struct tc_graph {
    Graph g;
};

namespace {

thread_local std::string t_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

tc_status set_error(tc_status code, const std::string& msg) {
    t_last_error = msg;
    return code;
}

template <typename F>
tc_status guarded(F&& f) {
    try {
        return f();
    } catch (const ParseError& e) {
        return set_error(TC_ERR_PARSE, e.what());
    } catch (const std::invalid_argument& e) {
        return set_error(TC_ERR_INVALID_ARG, e.what());
    } catch (const std::bad_alloc&) {
        return set_error(TC_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return set_error(TC_ERR_INTERNAL, e.what());
    }
}

std::vector<int> offsets_vec(const int* offsets, int n_offsets) {
    std::vector<int> out;
    for (int i = 0; i < n_offsets; ++i) {
        int off = offsets[i];
        if (off != 0 && off != 2 && off != 4) throw std::invalid_argument("offset must be 0, 2 or 4");
        out.push_back(off);
    }
    return out;
}

tc_status analyze_to_json(const tc_graph* g, AnalyzeOptions opts, char** out, int* failure_out) {
    if (!g || !out) return set_error(TC_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        GraphAnalysis a = analyze_graph(g->g, opts);
        bool failure = a.oracles && a.oracles->any_failure();
        for (const auto& v : a.verdicts) failure |= v.status == BoundStatus::counterexample;
        if (failure_out) *failure_out = failure ? 1 : 0;
        *out = dup_string(record_json(a, false));
        return *out ? TC_OK : set_error(TC_ERR_INTERNAL, "out of memory");
    });
}

}  // namespace

extern "C" {

const char* tc_version(void) { return "toughcycles 1.0.0"; }

const char* tc_last_error(void) { return t_last_error.c_str(); }

void tc_string_free(char* s) { ::free(s); }

void tc_graph_free(tc_graph* g) { delete g; }

tc_status tc_graph_from_graph6(const char* line, tc_graph** out) {
    if (!line || !out) return set_error(TC_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        *out = new tc_graph{parse_graph6(line)};
        return TC_OK;
    });
}

tc_status tc_graph_from_edge_list(const char* text, tc_graph** out) {
    if (!text || !out) return set_error(TC_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        *out = new tc_graph{parse_edge_list(text)};
        return TC_OK;
    });
}

int tc_graph_order(const tc_graph* g) { return g ? g->g.n() : -1; }

int tc_graph_size(const tc_graph* g) { return g ? g->g.edge_count() : -1; }

tc_status tc_graph_to_graph6(const tc_graph* g, char** out) {
    if (!g || !out) return set_error(TC_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        *out = dup_string(write_graph6(g->g));
        return *out ? TC_OK : set_error(TC_ERR_INTERNAL, "out of memory");
    });
}

tc_status tc_invariants_json(const tc_graph* g, const int* offsets, int n_offsets, int timeout_ms,
                             char** out, int* failure_out) {
    return guarded([&] {
        AnalyzeOptions opts;
        opts.offsets = offsets_vec(offsets, n_offsets);
        opts.always_circumference = true;
        opts.timeout_ms = timeout_ms;
        return analyze_to_json(g, opts, out, failure_out);
    });
}

tc_status tc_check_json(const tc_graph* g, const int* offsets, int n_offsets, int timeout_ms,
                        char** out, int* failure_out) {
    return guarded([&] {
        AnalyzeOptions opts;
        opts.offsets = offsets_vec(offsets, n_offsets);
        opts.timeout_ms = timeout_ms;
        return analyze_to_json(g, opts, out, failure_out);
    });
}

tc_status tc_oracles_json(const tc_graph* g, const int* offsets, int n_offsets, int timeout_ms,
                          char** out, int* failure_out) {
    return guarded([&] {
        AnalyzeOptions opts;
        opts.offsets = offsets_vec(offsets, n_offsets);
        opts.with_oracles = true;
        opts.always_circumference = true;
        opts.timeout_ms = timeout_ms;
        return analyze_to_json(g, opts, out, failure_out);
    });
}

tc_status tc_setups_json(const tc_graph* g, int require_s3, char** out) {
    if (!g || !out) return set_error(TC_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        *out = dup_string(setups_json(g->g, write_graph6(g->g), require_s3 != 0));
        return *out ? TC_OK : set_error(TC_ERR_INTERNAL, "out of memory");
    });
}

tc_status tc_hopping_json(const tc_graph* g, const int* cycle, int cycle_len, int u, char** out,
                          int* failure_out) {
    if (!g || !cycle || !out) return set_error(TC_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        std::vector<Vertex> verts(cycle, cycle + cycle_len);
        OrientedCycle c(g->g, std::move(verts));
        std::string json = hopping_json(g->g, write_graph6(g->g), c, u);
        if (failure_out) *failure_out = json.find("\"status\":\"fails\"") != std::string::npos ? 1 : 0;
        *out = dup_string(json);
        return *out ? TC_OK : set_error(TC_ERR_INTERNAL, "out of memory");
    });
}

tc_status tc_scan(const tc_scan_options* o, tc_emit_fn emit, void* user, int* failure_out) {
    if (!o || !emit) return set_error(TC_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        ScanOptions opts;
        opts.offsets = offsets_vec(o->offsets, o->n_offsets);
        opts.with_oracles = o->with_oracles != 0;
        opts.jobs = o->jobs > 0 ? o->jobs : 1;
        opts.timeout_ms = o->timeout_ms;
        opts.timing = o->timing != 0;

        auto start = std::chrono::steady_clock::now();
        ScanStats stats;
        auto sink = [&](const std::string& line) { emit(line.c_str(), user); };
        if (o->gen_n > 0) {
            try {
                stats = scan_generated(o->gen_n, o->connected_only != 0, opts, sink);
            } catch (const std::invalid_argument& e) {
                return set_error(TC_ERR_UNSUPPORTED, e.what());
            }
        } else if (o->input_path) {
            std::ifstream in(o->input_path);
            if (!in) return set_error(TC_ERR_IO, std::string("cannot open ") + o->input_path);
            std::vector<std::string> lines;
            std::string line;
            while (std::getline(in, line)) lines.push_back(line);
            stats = scan_lines(lines, opts, sink);
        } else {
            return set_error(TC_ERR_INVALID_ARG, "scan needs input_path or gen_n");
        }
        long long elapsed =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                .count();
        emit(summary_json(stats, opts.with_oracles, opts.timing, elapsed).c_str(), user);
        if (failure_out)
            *failure_out = (stats.counterexamples > 0 || stats.oracle_failures > 0) ? 1 : 0;
        return TC_OK;
    });
}

}  // extern "C"
