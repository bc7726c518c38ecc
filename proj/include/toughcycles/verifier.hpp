#ifndef TOUGHCYCLES_VERIFIER_HPP
#define TOUGHCYCLES_VERIFIER_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toughcycles/budget.hpp"
#include "toughcycles/graph.hpp"
#include "toughcycles/invariants.hpp"

namespace toughcycles {

// Conjecture hypothesis: 1-tough, sigma3 >= n, n >= 3.
struct HypothesisResult {
    bool one_tough = false;
    bool sigma3_ok = false;
    bool n_ok = false;
    bool passes() const { return one_tough && sigma3_ok && n_ok; }
};
HypothesisResult check_hypothesis(const Graph& g);

enum class BoundStatus { holds, counterexample, hypothesis_not_met, nc2_undefined, skipped };
const char* to_string(BoundStatus s);

struct BoundVerdict {
    int offset = 0;  // 0 | 2 | 4
    std::optional<int> rhs;  // min{n, 2*nc2 + offset}
    BoundStatus status = BoundStatus::skipped;
};

// c(G) >= min{n, 2*NC2 + offset} under the hypothesis. Counterexamples are
// re-verified with the naive oracles before being reported.
BoundVerdict check_bound(const Graph& g, int offset);

enum class OracleStatus { holds, fails, vacuous, skipped };
enum class OracleMode { strict, relaxed, standalone };
const char* to_string(OracleStatus s);
const char* to_string(OracleMode m);

struct OracleEntry {
    std::string id;
    OracleMode mode = OracleMode::strict;
    OracleStatus status = OracleStatus::vacuous;
    long long instances = 0;
    std::string reason;        // for skipped entries
    std::string witness_json;  // populated when status == fails
};

struct OracleReport {
    std::vector<OracleEntry> entries;
    bool any_failure() const;
    const OracleEntry* find(const std::string& id, OracleMode mode) const;
};

struct LemmaOracleOptions {
    std::size_t setup_budget = 200000;   // max (setups + rejected triples)
    std::size_t cycle_budget = 500000;   // max cycles enumerated for the hopping suite
    Budget budget;                       // wall-clock deadline, optional
};

// Table-driven suite over every lemma the paper states about setups, plus the
// standalone hopping checks. Universally quantified lemmas examine every
// gated configuration; existential ones search for a witness. Relaxed-lane
// entries rerun the checks that stay valid without the graph hypothesis on
// graphs that fail it.
OracleReport run_lemma_oracles(const Graph& g, const LemmaOracleOptions& opts = {});

struct AnalyzeOptions {
    std::vector<int> offsets;  // subset of {0,2,4}
    bool with_oracles = false;
    bool always_circumference = false;  // compute c even when the hypothesis fails
    int timeout_ms = 10000;
    LemmaOracleOptions oracle_options;
};

struct GraphAnalysis {
    std::string graph6;
    int n = 0;
    bool connected = false;
    int alpha = 0;
    int sigma3 = 0;
    std::optional<int> nc2;
    std::optional<int> circumference;
    bool one_tough = false;
    HypothesisResult hypothesis;
    std::vector<BoundVerdict> verdicts;
    std::optional<OracleReport> oracles;
    long long elapsed_ms = 0;
    bool timed_out = false;
};

GraphAnalysis analyze_graph(const Graph& g, const AnalyzeOptions& opts);

struct ScanOptions {
    std::vector<int> offsets{0, 2, 4};
    bool with_oracles = false;
    int jobs = 1;
    int timeout_ms = 10000;
    bool timing = false;  // emit measured elapsed_ms (breaks byte-determinism)
    LemmaOracleOptions oracle_options;
};

struct ScanStats {
    long long total = 0;
    long long connected = 0;
    long long hypothesis_passing = 0;
    long long hamiltonian_under_hypothesis = 0;
    long long non_hamiltonian_under_hypothesis = 0;
    long long counterexamples = 0;
    long long oracle_failures = 0;
    long long warnings = 0;  // malformed input lines
    long long skipped = 0;   // per-graph timeouts
    std::map<std::string, long long> verdict_totals;               // by status name
    std::map<std::string, std::map<std::string, long long>> oracle_totals;  // id -> status -> count
};

// Scans graph6 lines; records are emitted as JSON lines sorted by graph6
// string (deterministic regardless of parallelism), then one summary line.
ScanStats scan_lines(const std::vector<std::string>& lines, const ScanOptions& opts,
                     const std::function<void(const std::string&)>& emit_line);

// Internal-generator scan over all (connected) graphs on n vertices.
ScanStats scan_generated(int n, bool connected_only, const ScanOptions& opts,
                         const std::function<void(const std::string&)>& emit_line);

}  // namespace toughcycles

#endif
