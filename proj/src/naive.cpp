#include "toughcycles/naive.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace toughcycles::naive {

namespace {

constexpr int kMaxNaiveN = 22;

void check_size(const Graph& g, int cap = kMaxNaiveN) {
    if (g.n() > cap) throw std::invalid_argument("naive oracle limited to small graphs");
}

bool subset_independent(const Graph& g, std::uint64_t mask) {
    for (Vertex v : VertexSet(mask))
        if ((g.neighbors(v).bits() & mask) != 0) return false;
    return true;
}

}  // namespace

int independence_number(const Graph& g) {
    check_size(g);
    int best = 0;
    std::uint64_t all = VertexSet::first_n(g.n()).bits();
    for (std::uint64_t m = 0; m <= all; ++m) {
        if (std::popcount(m) > best && subset_independent(g, m)) best = std::popcount(m);
        if (m == all) break;
    }
    return best;
}

int sigma3(const Graph& g) {
    int n = g.n();
    bool adj[64][64] = {};
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b) adj[a][b] = g.adjacent(a, b);
    std::vector<int> deg(static_cast<size_t>(n));
    for (Vertex v = 0; v < n; ++v) deg[static_cast<size_t>(v)] = g.degree(v);

    int best = -1;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (adj[a][b]) continue;
            for (int c = b + 1; c < n; ++c) {
                if (adj[a][c] || adj[b][c]) continue;
                int s = deg[static_cast<size_t>(a)] + deg[static_cast<size_t>(b)] + deg[static_cast<size_t>(c)];
                if (best < 0 || s < best) best = s;
            }
        }
    return best >= 0 ? best : 3 * (n - 1);
}

std::optional<int> nc2(const Graph& g) {
    int n = g.n();
    bool complete = g.edge_count() == n * (n - 1) / 2;
    if (complete) return n - 1;
    int best = -1;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) {
            auto d = distance(g, a, b);
            if (!d || *d != 2) continue;
            int u = g.neighborhood_union(a, b).count();
            if (best < 0 || u < best) best = u;
        }
    if (best < 0) return std::nullopt;
    return best;
}

ToughnessResult is_one_tough(const Graph& g) {
    check_size(g);
    int n = g.n();
    std::uint64_t all = VertexSet::first_n(n).bits();
    ToughnessResult res;
    int best_size = n + 1;
    for (std::uint64_t m = 1; m < all; ++m) {
        VertexSet s(m);
        if (components_after_removal(g, s) > s.count()) {
            res.one_tough = false;
            if (s.count() < best_size) {
                best_size = s.count();
                res.min_violating_cut = s;
            }
        }
    }
    return res;
}

int circumference(const Graph& g) {
    check_size(g, 20);
    int n = g.n();
    std::size_t total = std::size_t{1} << n;
    // reach[mask] = endpoints v of simple paths that start at the lowest
    // vertex of mask and visit exactly mask
    std::vector<std::uint64_t> reach(total, 0);
    for (Vertex s = 0; s < n; ++s) reach[std::size_t{1} << s] = std::uint64_t{1} << s;

    int best = 0;
    for (std::size_t mask = 1; mask < total; ++mask) {
        if (reach[mask] == 0) continue;
        Vertex start = std::countr_zero(mask);
        int size = std::popcount(mask);
        if (size >= 3 && (reach[mask] & g.neighbors(start).bits()) != 0) best = std::max(best, size);
        for (Vertex v : VertexSet(reach[mask])) {
            std::uint64_t ext = g.neighbors(v).bits() & ~mask & ~((std::uint64_t{1} << start) - 1);
            for (Vertex w : VertexSet(ext)) reach[mask | (std::uint64_t{1} << w)] |= std::uint64_t{1} << w;
        }
    }
    return best;
}

int components_after_removal(const Graph& g, VertexSet removed) {
    int n = g.n();
    std::vector<int> label(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) label[static_cast<size_t>(v)] = v;
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex a = 0; a < n; ++a) {
            if (removed.contains(a)) continue;
            for (Vertex b : g.neighbors(a)) {
                if (removed.contains(b)) continue;
                int m = std::min(label[static_cast<size_t>(a)], label[static_cast<size_t>(b)]);
                if (label[static_cast<size_t>(a)] != m || label[static_cast<size_t>(b)] != m) {
                    label[static_cast<size_t>(a)] = label[static_cast<size_t>(b)] = m;
                    changed = true;
                }
            }
        }
    }
    int count = 0;
    for (int v = 0; v < n; ++v)
        if (!removed.contains(v) && label[static_cast<size_t>(v)] == v) ++count;
    return count;
}

}  // namespace toughcycles::naive
