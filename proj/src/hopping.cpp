#include "toughcycles/hopping.hpp"

#include <stdexcept>

namespace toughcycles {

HoppingSets hopping_fixpoint(const Graph& g, const OrientedCycle& c, Vertex u) {
    if (c.contains(u)) throw std::invalid_argument("u lies on the cycle");
    VertexSet off = g.vertices() - c.vertex_set();
    if (!(g.neighbors(u) & off).empty())
        throw std::invalid_argument("u is not isolated in G - V(C)");

    HoppingSets h;
    VertexSet y_prev;
    VertexSet x_prev;
    for (;;) {
        VertexSet x = g.neighbors(u);
        for (Vertex w : y_prev) x |= g.neighbors(w);
        VertexSet on = x & c.vertex_set();
        VertexSet succs, preds;
        for (Vertex w : on) {
            succs.insert(c.successor(w));
            preds.insert(c.predecessor(w));
        }
        VertexSet y = succs & preds;
        h.trace.emplace_back(x, y);
        ++h.iterations;
        if (h.iterations > 1 && x == x_prev) {
            h.x = x;
            h.y = y;
            break;
        }
        x_prev = x;
        y_prev = y;
    }
    return h;
}

HoppingVerdicts check_hopping_conclusions(const Graph& g, const OrientedCycle& c, Vertex u,
                                          const HoppingSets& h, const CycleCensus* census) {
    HoppingVerdicts v;
    CycleCensus local;
    if (!census) {
        local = cycle_census(g);
        census = &local;
    }
    v.census_complete = census->complete;

    int m = c.length();
    VertexSet off = g.vertices() - c.vertex_set();
    bool u_ok = !c.contains(u) && (g.neighbors(u) & off).empty();
    bool no_longer = !census->has_length(m + 1);
    int omega_c = components_after_removal(g, c.vertex_set());
    bool minimal = census->min_components[static_cast<size_t>(m)] == omega_c;
    v.hypotheses_met = v.census_complete && u_ok && no_longer && minimal;

    v.a = h.x.subset_of(c.vertex_set());
    v.b = true;
    for (Vertex w : h.x & c.vertex_set())
        if (h.x.contains(c.successor(w))) v.b = false;
    v.c = (h.x & h.y).empty();
    v.d = true;
    for (Vertex w : h.y)
        if (!(g.neighbors(w) & h.y).empty()) v.d = false;
    return v;
}

}  // namespace toughcycles
