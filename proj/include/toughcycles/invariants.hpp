#ifndef TOUGHCYCLES_INVARIANTS_HPP
#define TOUGHCYCLES_INVARIANTS_HPP

#include <optional>

#include "toughcycles/cycle.hpp"
#include "toughcycles/graph.hpp"

namespace toughcycles {

// Maximum independent set via branch and bound; witness retrievable.
struct IndependenceResult {
    int alpha = 0;
    VertexSet witness;
};
IndependenceResult independence_number(const Graph& g);

// Minimum degree sum over independent triples; 3(n-1) when alpha(G) <= 2.
int sigma3(const Graph& g);

// Minimum |N(u) u N(v)| over pairs at distance exactly 2; n-1 for complete
// graphs. nullopt when the graph is neither complete nor has a distance-2
// pair (disconnected unions of cliques).
std::optional<int> nc2(const Graph& g);

// 1-toughness: every nonempty S has w(G-S) <= |S|. The search is pruned to
// subsets that can participate in a minimal violating cut (|S| <= (n-1)/2,
// members of degree >= 2); a minimum-size violating cut is returned when one
// exists.
struct ToughnessResult {
    bool one_tough = true;
    std::optional<VertexSet> violating_cut;
};
ToughnessResult is_one_tough(const Graph& g);

// True iff the off-cycle vertices form an independent set.
bool is_dominating_cycle(const Graph& g, const OrientedCycle& c);

// mu(C): max degree in G over off-cycle vertices; nullopt for spanning cycles.
std::optional<int> mu_cycle(const Graph& g, const OrientedCycle& c);

// mu(G): max of mu_cycle over all longest cycles; nullopt when hamiltonian
// or acyclic.
std::optional<int> mu_graph(const Graph& g);

struct InvariantBundle {
    int n = 0;
    int alpha = 0;
    int sigma3 = 0;
    std::optional<int> nc2;
    int circumference = 0;  // 0 when acyclic
    bool is_one_tough = false;
    bool is_hamiltonian = false;
    std::optional<int> mu_graph;
};
InvariantBundle invariant_bundle(const Graph& g);

}  // namespace toughcycles

#endif
