#include "toughcycles/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace toughcycles {

namespace {

constexpr int kMaxCanonN = 11;
constexpr int kMaxGenN = 10;

// Iterated refinement: vertices recolored by (color, sorted neighbor colors)
// until stable. Color indices come from sorting the signature multiset, so
// they are invariant under isomorphism.
std::vector<int> refine_colors(const Graph& g) {
    int n = g.n();
    std::vector<int> color(n, 0);
    for (int round = 0; round < n; ++round) {
        std::vector<std::vector<int>> sig(n);
        for (Vertex v = 0; v < n; ++v) {
            sig[v].push_back(color[v]);
            std::vector<int> nb;
            for (Vertex w : g.neighbors(v)) nb.push_back(color[w]);
            std::sort(nb.begin(), nb.end());
            sig[v].insert(sig[v].end(), nb.begin(), nb.end());
        }
        std::vector<std::vector<int>> sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> next(n);
        for (Vertex v = 0; v < n; ++v)
            next[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
        if (next == color) break;
        color = next;
    }
    return color;
}

// Branch-and-bound minimization of the packed upper-triangle bit string over
// all vertex orderings that list refinement classes in nondecreasing color
// order. Interchangeable twins are explored once.
struct CanonSearch {
    const Graph* g;
    int n;
    std::vector<int> color;
    std::array<Vertex, kMaxCanonN> perm{};
    std::array<std::uint32_t, kMaxCanonN> cur_col{};
    std::array<std::uint32_t, kMaxCanonN> best_col{};
    std::uint64_t best_key = 0;
    bool have_best = false;

    std::uint64_t pack(const std::array<std::uint32_t, kMaxCanonN>& col) const {
        std::uint64_t key = 0;
        for (int d = 1; d < n; ++d) key = (key << d) | col[static_cast<size_t>(d)];
        return key;
    }

    // Adjacency of w to perm[0..d-1], earliest placed most significant
    // (matches graph6 bit order within the column).
    std::uint32_t column(Vertex w, int d) const {
        std::uint32_t c = 0;
        for (int i = 0; i < d; ++i) c = (c << 1) | (g->adjacent(perm[i], w) ? 1u : 0u);
        return c;
    }

    // -1/0/+1: columns placed so far vs the current best's prefix.
    int prefix_cmp(int depth) const {
        for (int i = 1; i < depth; ++i) {
            if (cur_col[static_cast<size_t>(i)] != best_col[static_cast<size_t>(i)])
                return cur_col[static_cast<size_t>(i)] < best_col[static_cast<size_t>(i)] ? -1 : 1;
        }
        return 0;
    }

    void dfs(int depth, VertexSet used) {
        if (depth == n) {
            std::uint64_t key = pack(cur_col);
            if (!have_best || key < best_key) {
                best_key = key;
                best_col = cur_col;
                have_best = true;
            }
            return;
        }
        int want = -1;
        for (Vertex v = 0; v < n; ++v)
            if (!used.contains(v) && (want < 0 || color[v] < want)) want = color[v];

        struct Cand {
            std::uint32_t col;
            Vertex v;
        };
        std::array<Cand, kMaxCanonN> cands;
        int nc = 0;
        for (Vertex v = 0; v < n; ++v)
            if (!used.contains(v) && color[v] == want) cands[nc++] = {column(v, depth), v};
        std::sort(cands.begin(), cands.begin() + nc,
                  [](const Cand& a, const Cand& b) { return a.col < b.col || (a.col == b.col && a.v < b.v); });

        VertexSet tried;
        for (int k = 0; k < nc; ++k) {
            auto [col, v] = cands[k];
            if (have_best) {
                // Recomputed per candidate: the best may have improved below us.
                int cmp = prefix_cmp(depth);
                if (cmp > 0) break;
                if (cmp == 0 && col > best_col[depth]) break;  // sorted: the rest are larger
            }
            bool twin = false;
            for (Vertex t : tried) {
                std::uint64_t diff = (g->neighbors(v) ^ g->neighbors(t)).bits();
                diff &= ~(std::uint64_t{1} << v);
                diff &= ~(std::uint64_t{1} << t);
                if (diff == 0) {
                    twin = true;
                    break;
                }
            }
            if (twin) continue;
            tried.insert(v);

            cur_col[depth] = col;
            perm[depth] = v;
            dfs(depth + 1, VertexSet(used).insert(v));
        }
    }
};

}  // namespace

std::uint64_t canonical_key(const Graph& g) {
    if (g.n() > kMaxCanonN) throw std::invalid_argument("canonical_key supports n <= 11");
    CanonSearch s;
    s.g = &g;
    s.n = g.n();
    s.color = refine_colors(g);
    s.dfs(0, VertexSet());
    return s.best_key;
}

Graph graph_from_key(int n, std::uint64_t key) {
    std::vector<Edge> edges;
    int shift = n * (n - 1) / 2;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            --shift;
            if ((key >> shift) & 1) edges.emplace_back(i, j);
        }
    return Graph(n, edges);
}

namespace {

std::vector<std::uint64_t> extend_level(const std::vector<std::uint64_t>& prev, int n, int jobs) {
    // Every n-vertex graph arises by attaching a new vertex to some
    // (n-1)-vertex graph; dedupe by canonical key.
    int pn = n - 1;
    std::uint64_t subsets = std::uint64_t{1} << pn;
    unsigned nthreads = static_cast<unsigned>(std::max(1, jobs));
    std::vector<std::unordered_set<std::uint64_t>> found(nthreads);
    std::vector<std::thread> workers;
    std::atomic<std::size_t> next{0};
    auto work = [&](unsigned tid) {
        auto& mine = found[tid];
        for (;;) {
            std::size_t idx = next.fetch_add(1);
            if (idx >= prev.size()) break;
            Graph base = graph_from_key(pn, prev[idx]);
            std::vector<Edge> base_edges = base.edges();
            for (std::uint64_t s = 0; s < subsets; ++s) {
                std::vector<Edge> edges = base_edges;
                for (Vertex v : VertexSet(s)) edges.emplace_back(v, pn);
                mine.insert(canonical_key(Graph(n, edges)));
            }
        }
    };
    for (unsigned t = 0; t < nthreads; ++t) workers.emplace_back(work, t);
    for (auto& w : workers) w.join();

    std::unordered_set<std::uint64_t> all;
    for (auto& f : found) all.insert(f.begin(), f.end());
    std::vector<std::uint64_t> keys(all.begin(), all.end());
    std::sort(keys.begin(), keys.end());
    return keys;
}

std::mutex g_levels_mutex;
std::vector<std::vector<std::uint64_t>> g_levels;  // g_levels[n-1] = keys for order n

}  // namespace

const std::vector<std::uint64_t>& all_graph_keys(int n, int jobs) {
    if (n < 1 || n > kMaxGenN)
        throw std::invalid_argument("internal generation supports 1 <= n <= 10");
    std::scoped_lock lock(g_levels_mutex);
    if (g_levels.empty()) g_levels.push_back({0});  // K1
    while (static_cast<int>(g_levels.size()) < n)
        g_levels.push_back(extend_level(g_levels.back(), static_cast<int>(g_levels.size()) + 1, jobs));
    return g_levels[static_cast<size_t>(n) - 1];
}

std::size_t enumerate_graphs(int n, bool connected_only, const std::function<void(const Graph&)>& visit,
                             int jobs) {
    const auto& keys = all_graph_keys(n, jobs);
    std::size_t count = 0;
    for (std::uint64_t k : keys) {
        Graph g = graph_from_key(n, k);
        if (connected_only && !is_connected(g)) continue;
        ++count;
        visit(g);
    }
    return count;
}

}  // namespace toughcycles
