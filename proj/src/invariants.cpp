#include "toughcycles/invariants.hpp"

#include <algorithm>

namespace toughcycles {

namespace {

struct MisSearch {
    const Graph* g;
    int best = 0;
    VertexSet best_set;

    void dfs(VertexSet chosen, VertexSet open) {
        int have = chosen.count();
        if (have + open.count() <= best) return;
        if (open.empty()) {
            best = have;
            best_set = chosen;
            return;
        }
        // branch on a max-degree-in-open vertex
        Vertex pivot = -1;
        int pd = -1;
        for (Vertex v : open) {
            int d = (g->neighbors(v) & open).count();
            if (d > pd) {
                pd = d;
                pivot = v;
            }
        }
        VertexSet without = open;
        without.erase(pivot);
        dfs(VertexSet(chosen).insert(pivot), without - g->neighbors(pivot));
        dfs(chosen, without);
    }
};

}  // namespace

IndependenceResult independence_number(const Graph& g) {
    MisSearch s;
    s.g = &g;
    s.dfs(VertexSet(), g.vertices());
    return {s.best, s.best_set};
}

int sigma3(const Graph& g) {
    int n = g.n();
    int best = -1;
    for (Vertex a = 0; a < n; ++a) {
        VertexSet nota = g.vertices() - g.neighbors(a) - VertexSet::first_n(a + 1);
        for (Vertex b : nota) {
            VertexSet notab = nota - g.neighbors(b) - VertexSet::first_n(b + 1);
            for (Vertex c : notab) {
                int sum = g.degree(a) + g.degree(b) + g.degree(c);
                if (best < 0 || sum < best) best = sum;
            }
        }
    }
    return best >= 0 ? best : 3 * (n - 1);
}

std::optional<int> nc2(const Graph& g) {
    int n = g.n();
    bool complete = true;
    for (Vertex v = 0; v < n && complete; ++v) complete = g.degree(v) == n - 1;
    if (complete) return n - 1;

    int best = -1;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) {
            if (g.adjacent(a, b)) continue;
            if ((g.neighbors(a) & g.neighbors(b)).empty()) continue;  // d(a,b) != 2
            int u = g.neighborhood_union(a, b).count();
            if (best < 0 || u < best) best = u;
        }
    if (best < 0) return std::nullopt;
    return best;
}

ToughnessResult is_one_tough(const Graph& g) {
    int n = g.n();
    // A minimal violating cut S has every member adjacent to at least two
    // components of G-S, hence degree >= 2, and w(G-S) <= n-|S| forces
    // |S| <= (n-1)/2.
    VertexSet eligible;
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) >= 2) eligible.insert(v);

    if (!is_connected(g)) {
        // some single vertex already violates for n >= 3
        for (Vertex v = 0; v < n; ++v)
            if (components_after_removal(g, VertexSet::single(v)) > 1)
                return {false, VertexSet::single(v)};
        return {false, std::nullopt};  // n <= 2 disconnected; outside hypotheses
    }

    std::vector<Vertex> pool;
    for (Vertex v : eligible) pool.push_back(v);
    int max_size = (n - 1) / 2;

    std::vector<Vertex> cur;
    std::optional<VertexSet> hit;
    // subsets of `pool` in increasing size, lexicographic within a size
    auto rec = [&](auto&& self, std::size_t from, int want, VertexSet mask) -> bool {
        if (want == 0) {
            if (components_after_removal(g, mask) > mask.count()) {
                hit = mask;
                return true;
            }
            return false;
        }
        for (std::size_t i = from; i + static_cast<size_t>(want) <= pool.size(); ++i) {
            if (self(self, i + 1, want - 1, VertexSet(mask).insert(pool[i]))) return true;
        }
        return false;
    };
    for (int size = 1; size <= max_size; ++size)
        if (rec(rec, 0, size, VertexSet())) return {false, hit};
    return {true, std::nullopt};
}

bool is_dominating_cycle(const Graph& g, const OrientedCycle& c) {
    VertexSet off = g.vertices() - c.vertex_set();
    for (Vertex v : off)
        if (!(g.neighbors(v) & off).empty()) return false;
    return true;
}

std::optional<int> mu_cycle(const Graph& g, const OrientedCycle& c) {
    VertexSet off = g.vertices() - c.vertex_set();
    if (off.empty()) return std::nullopt;
    int best = 0;
    for (Vertex v : off) best = std::max(best, g.degree(v));
    return best;
}

std::optional<int> mu_graph(const Graph& g) {
    auto cycles = longest_cycles(g);
    if (cycles.empty() || cycles.front().length() == g.n()) return std::nullopt;
    int best = 0;
    for (const auto& c : cycles) best = std::max(best, *mu_cycle(g, c));
    return best;
}

InvariantBundle invariant_bundle(const Graph& g) {
    InvariantBundle b;
    b.n = g.n();
    b.alpha = independence_number(g).alpha;
    b.sigma3 = sigma3(g);
    b.nc2 = nc2(g);
    b.circumference = circumference(g).length;
    b.is_one_tough = is_one_tough(g).one_tough;
    b.is_hamiltonian = b.circumference == b.n;
    if (!b.is_hamiltonian && b.circumference > 0) b.mu_graph = mu_graph(g);
    return b;
}

}  // namespace toughcycles
