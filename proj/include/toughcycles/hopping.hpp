#ifndef TOUGHCYCLES_HOPPING_HPP
#define TOUGHCYCLES_HOPPING_HPP

#include <utility>
#include <vector>

#include "toughcycles/cycle.hpp"
#include "toughcycles/graph.hpp"

namespace toughcycles {

// Least fixpoint of X_i = N(Y_{i-1} u {u}), Y_i = (X_i n V(C))+ n (X_i n V(C))-.
struct HoppingSets {
    VertexSet x, y;
    std::vector<std::pair<VertexSet, VertexSet>> trace;  // (X_i, Y_i) per iteration
    int iterations = 0;  // X_{iterations} repeated X_{iterations-1}
};

// Preconditions (throws std::invalid_argument): u off-cycle and isolated in
// G - V(C). Terminates within n iterations by monotonicity.
HoppingSets hopping_fixpoint(const Graph& g, const OrientedCycle& c, Vertex u);

struct HoppingVerdicts {
    // Hypotheses: no cycle of length |C|+1; no |C|-cycle with fewer
    // components left behind; u isolated off-cycle.
    bool hypotheses_met = false;
    bool census_complete = true;  // false: enumeration budget ran out, verdict unknown
    bool a = false;               // X within V(C)
    bool b = false;               // no two consecutive cycle vertices in X
    bool c = false;               // X and Y disjoint
    bool d = false;               // Y independent
    bool all_hold() const { return a && b && c && d; }
};

// Verifies the hypotheses by exhaustive cycle enumeration (or a caller-provided
// census) and evaluates conclusions (a)-(d) on the fixpoint.
HoppingVerdicts check_hopping_conclusions(const Graph& g, const OrientedCycle& c, Vertex u,
                                          const HoppingSets& h, const CycleCensus* census = nullptr);

}  // namespace toughcycles

#endif
