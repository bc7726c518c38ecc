#ifndef TOUGHCYCLES_NAIVE_HPP
#define TOUGHCYCLES_NAIVE_HPP

#include <optional>

#include "toughcycles/graph.hpp"

// Independent brute-force oracles used to cross-validate the fast paths.
// Deliberately written along different routes: subset enumeration, BFS
// distances, subset dynamic programming. Feasible for n up to ~20.

namespace toughcycles::naive {

int independence_number(const Graph& g);  // all 2^n subsets
int sigma3(const Graph& g);               // triple loop over an adjacency matrix
std::optional<int> nc2(const Graph& g);   // BFS distance per pair

struct ToughnessResult {
    bool one_tough = true;
    std::optional<VertexSet> min_violating_cut;
};
ToughnessResult is_one_tough(const Graph& g);  // all 2^n - 2 subsets

// Held-Karp style dynamic programming over (subset, endpoint) pairs.
int circumference(const Graph& g);

int components_after_removal(const Graph& g, VertexSet removed);  // label propagation

}  // namespace toughcycles::naive

#endif
