#ifndef TOUGHCYCLES_REPORT_HPP
#define TOUGHCYCLES_REPORT_HPP

#include <string>

#include "toughcycles/hopping.hpp"
#include "toughcycles/setup.hpp"
#include "toughcycles/verifier.hpp"

namespace toughcycles {

// One JSON object per graph, keys in fixed order:
// {graph, n, alpha, sigma3, nc2, circumference, one_tough, hypothesis,
//  verdicts, oracles?, elapsed_ms}. elapsed_ms is 0 unless timing was
// requested, keeping reports byte-deterministic.
std::string record_json(const GraphAnalysis& a, bool timing);

// Trailing summary object: totals per status plus vacuity counts.
std::string summary_json(const ScanStats& s, bool with_oracles, bool timing, long long elapsed_ms);

std::string setups_json(const Graph& g, const std::string& graph6, bool require_s3);

std::string hopping_json(const Graph& g, const std::string& graph6, const OrientedCycle& c, Vertex u);

}  // namespace toughcycles

#endif
