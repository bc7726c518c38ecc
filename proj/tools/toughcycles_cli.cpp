// Command-line front end for the toughcycles engine. Talks to the engine
// exclusively through the C API in toughcycles.h.
//
//   toughcycles <subcommand> [--in FILE | --edge-list STR | --gen-n N [--connected]]
//               [--offsets LIST] [--oracles] [--jobs K] [--timeout-ms T] [--out FILE]
//
// Subcommands: invariants, check, oracles, hopping, setups, scan.
// Exit codes: 0 clean, 1 usage/input error, 2 counterexample or oracle failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "toughcycles.h"

namespace {

struct Options {
    std::string in_path;
    std::string edge_list;
    int gen_n = 0;
    bool connected = false;
    std::string offsets_csv;
    bool oracles = false;
    bool require_s3 = false;
    int jobs = 1;
    int timeout_ms = 10000;
    bool timing = false;
    std::string out_path;
    std::string cycle_csv;
    int hop_u = -1;
};

int usage_error(const std::string& msg) {
    std::cerr << "toughcycles: " << msg << "\n";
    return 1;
}

bool parse_int_list(const std::string& csv, std::vector<int>& out) {
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size()) return false;
            out.push_back(v);
        } catch (...) {
            return false;
        }
    }
    return true;
}

struct Sink {
    std::ostream* os;
    static void emit(const char* line, void* user) {
        auto* self = static_cast<Sink*>(user);
        (*self->os) << line << "\n";
    }
};

int engine_error(tc_status st) {
    std::cerr << "toughcycles: " << tc_last_error() << "\n";
    return st == TC_OK ? 0 : 1;
}

// Reads the graphs for a single-graph-per-line subcommand.
int load_inputs(const Options& opt, std::vector<std::string>& graph6_lines, std::string& edge_list) {
    int sources = (!opt.in_path.empty()) + (!opt.edge_list.empty()) + (opt.gen_n > 0);
    if (sources != 1) return usage_error("exactly one of --in, --edge-list, --gen-n required");
    if (!opt.edge_list.empty()) {
        edge_list = opt.edge_list;
        return 0;
    }
    if (opt.gen_n > 0) return usage_error("--gen-n only applies to the scan subcommand");
    std::ifstream in(opt.in_path);
    if (!in) return usage_error("cannot open " + opt.in_path);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (!line.empty()) graph6_lines.push_back(line);
    }
    if (graph6_lines.empty()) return usage_error("no graphs in " + opt.in_path);
    return 0;
}

using RecordFn = tc_status (*)(const tc_graph*, const int*, int, int, char**, int*);

int run_per_graph(const Options& opt, const std::vector<int>& offsets, RecordFn fn,
                  std::ostream& os) {
    std::vector<std::string> lines;
    std::string edge_list;
    if (int rc = load_inputs(opt, lines, edge_list); rc != 0) return rc;

    bool failure = false;
    auto process = [&](tc_graph* g) -> int {
        char* json = nullptr;
        int fail_flag = 0;
        tc_status st = fn(g, offsets.data(), static_cast<int>(offsets.size()), opt.timeout_ms, &json,
                          &fail_flag);
        tc_graph_free(g);
        if (st != TC_OK) return engine_error(st);
        os << json << "\n";
        tc_string_free(json);
        failure |= fail_flag != 0;
        return 0;
    };

    if (!edge_list.empty()) {
        tc_graph* g = nullptr;
        if (tc_graph_from_edge_list(edge_list.c_str(), &g) != TC_OK) return engine_error(TC_ERR_PARSE);
        if (int rc = process(g); rc != 0) return rc;
    } else {
        for (const auto& line : lines) {
            tc_graph* g = nullptr;
            if (tc_graph_from_graph6(line.c_str(), &g) != TC_OK) return engine_error(TC_ERR_PARSE);
            if (int rc = process(g); rc != 0) return rc;
        }
    }
    return failure ? 2 : 0;
}

int load_single_graph(const Options& opt, tc_graph** out) {
    std::vector<std::string> lines;
    std::string edge_list;
    if (int rc = load_inputs(opt, lines, edge_list); rc != 0) return rc;
    tc_status st = !edge_list.empty() ? tc_graph_from_edge_list(edge_list.c_str(), out)
                                      : tc_graph_from_graph6(lines.front().c_str(), out);
    if (st != TC_OK) return engine_error(st);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine and verification harness for 1-tough longest-cycle bounds"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub, bool with_offsets = true) {
        sub->add_option("--in", opt.in_path, "input file, one graph6 string per line");
        sub->add_option("--edge-list", opt.edge_list, "inline edge list: \"n i j i j ...\"");
        sub->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--timeout-ms", opt.timeout_ms, "per-graph time budget");
        sub->add_option("--out", opt.out_path, "write the report here instead of stdout");
        if (with_offsets) sub->add_option("--offsets", opt.offsets_csv, "bound offsets, e.g. 0,2,4");
    };

    auto* inv = app.add_subcommand("invariants", "alpha, sigma3, NC2, circumference, toughness");
    add_common(inv);
    auto* chk = app.add_subcommand("check", "conjecture bound verdicts for each graph");
    add_common(chk);
    auto* orc = app.add_subcommand("oracles", "lemma-oracle suite for each graph");
    add_common(orc);
    auto* hop = app.add_subcommand("hopping", "hopping fixpoint trace for a (graph, cycle, u) triple");
    add_common(hop, false);
    hop->add_option("--cycle", opt.cycle_csv, "cycle vertices, e.g. 0,1,2,3")->required();
    hop->add_option("--u", opt.hop_u, "off-cycle vertex")->required();
    auto* set = app.add_subcommand("setups", "list the (u,v,C) setups on longest cycles");
    add_common(set, false);
    set->add_flag("--require-s3", opt.require_s3, "keep only setups with four good 2-intervals");
    auto* scan = app.add_subcommand("scan", "scan a corpus against the bounds");
    add_common(scan);
    scan->add_option("--gen-n", opt.gen_n, "generate all graphs on N vertices (N <= 10)");
    scan->add_flag("--connected", opt.connected, "restrict generation to connected graphs");
    scan->add_flag("--oracles", opt.oracles, "run the lemma-oracle suite per graph");
    scan->add_flag("--timing", opt.timing, "report measured elapsed_ms (not byte-deterministic)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::stringstream ss;
        app.exit(e, ss, ss);
        std::cerr << ss.str();
        return 1;
    }

    std::vector<int> offsets;
    if (!opt.offsets_csv.empty()) {
        if (!parse_int_list(opt.offsets_csv, offsets)) return usage_error("bad --offsets list");
    }

    std::ofstream out_file;
    std::ostream* os = &std::cout;
    if (!opt.out_path.empty()) {
        out_file.open(opt.out_path);
        if (!out_file) return usage_error("cannot write " + opt.out_path);
        os = &out_file;
    }

    if (inv->parsed()) return run_per_graph(opt, offsets, tc_invariants_json, *os);
    if (chk->parsed()) {
        if (offsets.empty()) offsets = {0, 2, 4};
        return run_per_graph(opt, offsets, tc_check_json, *os);
    }
    if (orc->parsed()) {
        if (offsets.empty()) offsets = {0, 2, 4};
        return run_per_graph(opt, offsets, tc_oracles_json, *os);
    }

    if (hop->parsed()) {
        tc_graph* g = nullptr;
        if (int rc = load_single_graph(opt, &g); rc != 0) return rc;
        std::vector<int> cycle;
        if (!parse_int_list(opt.cycle_csv, cycle) || cycle.empty()) {
            tc_graph_free(g);
            return usage_error("bad --cycle list");
        }
        char* json = nullptr;
        int fail_flag = 0;
        tc_status st = tc_hopping_json(g, cycle.data(), static_cast<int>(cycle.size()), opt.hop_u,
                                       &json, &fail_flag);
        tc_graph_free(g);
        if (st != TC_OK) return engine_error(st);
        *os << json << "\n";
        tc_string_free(json);
        return fail_flag ? 2 : 0;
    }

    if (set->parsed()) {
        tc_graph* g = nullptr;
        if (int rc = load_single_graph(opt, &g); rc != 0) return rc;
        char* json = nullptr;
        tc_status st = tc_setups_json(g, opt.require_s3 ? 1 : 0, &json);
        tc_graph_free(g);
        if (st != TC_OK) return engine_error(st);
        *os << json << "\n";
        tc_string_free(json);
        return 0;
    }

    // scan
    int sources = (!opt.in_path.empty()) + (opt.gen_n > 0);
    if (sources != 1 || !opt.edge_list.empty())
        return usage_error("scan needs exactly one of --in or --gen-n");
    if (offsets.empty()) offsets = {0, 2, 4};

    tc_scan_options sopts{};
    sopts.input_path = opt.in_path.empty() ? nullptr : opt.in_path.c_str();
    sopts.gen_n = opt.gen_n;
    sopts.connected_only = opt.connected ? 1 : 0;
    sopts.offsets = offsets.data();
    sopts.n_offsets = static_cast<int>(offsets.size());
    sopts.with_oracles = opt.oracles ? 1 : 0;
    sopts.jobs = opt.jobs;
    sopts.timeout_ms = opt.timeout_ms;
    sopts.timing = opt.timing ? 1 : 0;

    Sink sink{os};
    int fail_flag = 0;
    tc_status st = tc_scan(&sopts, &Sink::emit, &sink, &fail_flag);
    if (st != TC_OK) return engine_error(st);
    os->flush();
    if (!opt.out_path.empty() && !out_file) return usage_error("write failed: " + opt.out_path);
    return fail_flag ? 2 : 0;
}
