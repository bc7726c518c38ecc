#include "toughcycles/cycle.hpp"

#include <algorithm>
#include <stdexcept>

namespace toughcycles {

OrientedCycle::OrientedCycle(const Graph& g, std::vector<Vertex> verts) : verts_(std::move(verts)) {
    int k = static_cast<int>(verts_.size());
    if (k < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    pos_.assign(static_cast<size_t>(g.n()), -1);
    for (int i = 0; i < k; ++i) {
        Vertex v = verts_[static_cast<size_t>(i)];
        if (v < 0 || v >= g.n()) throw std::invalid_argument("cycle vertex out of range");
        if (pos_[static_cast<size_t>(v)] != -1) throw std::invalid_argument("repeated cycle vertex");
        pos_[static_cast<size_t>(v)] = i;
        vset_.insert(v);
    }
    for (int i = 0; i < k; ++i) {
        Vertex a = verts_[static_cast<size_t>(i)];
        Vertex b = verts_[static_cast<size_t>((i + 1) % k)];
        if (!g.adjacent(a, b)) throw std::invalid_argument("consecutive cycle vertices not adjacent");
    }
}

int OrientedCycle::position(Vertex v) const {
    if (v < 0 || v >= static_cast<int>(pos_.size()) || pos_[static_cast<size_t>(v)] < 0)
        throw std::invalid_argument("vertex not on cycle");
    return pos_[static_cast<size_t>(v)];
}

Vertex OrientedCycle::step(Vertex v, int offset) const { return at(position(v) + offset); }

OrientedCycle OrientedCycle::reversed(const Graph& g) const {
    std::vector<Vertex> rev(verts_.rbegin(), verts_.rend());
    return OrientedCycle(g, std::move(rev));
}

std::vector<Vertex> OrientedCycle::segment(Vertex a, Vertex b) const {
    std::vector<Vertex> out;
    int pa = position(a), pb = position(b);
    int k = length();
    int len = ((pb - pa) % k + k) % k;
    out.reserve(static_cast<size_t>(len) + 1);
    for (int i = 0; i <= len; ++i) out.push_back(at(pa + i));
    return out;
}

std::vector<Vertex> OrientedCycle::canonical_key() const {
    int k = length();
    std::vector<Vertex> best;
    for (int dir : {1, -1}) {
        for (int start = 0; start < k; ++start) {
            std::vector<Vertex> rot(static_cast<size_t>(k));
            for (int i = 0; i < k; ++i) rot[static_cast<size_t>(i)] = at(start + dir * i);
            if (best.empty() || rot < best) best = std::move(rot);
        }
    }
    return best;
}

namespace {

VertexSet reachable_through(const Graph& g, Vertex from, VertexSet allowed) {
    VertexSet frontier = g.neighbors(from) & allowed;
    VertexSet seen = frontier;
    while (!frontier.empty()) {
        VertexSet next;
        for (Vertex v : frontier) next |= g.neighbors(v);
        next &= allowed;
        next -= seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

struct CycleDfs {
    const Graph* g;
    int min_len, max_len;
    std::size_t max_cycles;  // 0 = unlimited
    const Budget* deadline;
    std::size_t emitted = 0;
    unsigned tick = 0;
    bool aborted = false;
    std::vector<Vertex> path;
    const std::function<void(std::span<const Vertex>)>* visit;

    void run() {
        int n = g->n();
        for (Vertex s = 0; s < n && !aborted; ++s) {
            path.assign(1, s);
            VertexSet allowed = g->vertices() - VertexSet::first_n(s + 1);
            extend(s, allowed);
        }
    }

    void extend(Vertex endpoint, VertexSet allowed) {
        if (aborted) return;
        if (deadline && (++tick & 1023u) == 0 && deadline->expired()) {
            aborted = true;
            return;
        }
        Vertex s = path.front();
        int len = static_cast<int>(path.size());
        if (len >= 3 && len >= min_len && g->adjacent(endpoint, s) && path[1] < endpoint) {
            if (max_cycles != 0 && emitted == max_cycles) {
                aborted = true;
                return;
            }
            ++emitted;
            (*visit)(path);
        }
        if (len == max_len) return;
        for (Vertex w : g->neighbors(endpoint) & allowed) {
            path.push_back(w);
            extend(w, allowed - VertexSet::single(w));
            path.pop_back();
            if (aborted) return;
        }
    }
};

}  // namespace

bool enumerate_cycles(const Graph& g, const CycleEnumOptions& opts,
                      const std::function<void(std::span<const Vertex>)>& visit) {
    CycleDfs dfs;
    dfs.g = &g;
    dfs.min_len = std::max(3, opts.min_length);
    dfs.max_len = std::min(g.n(), opts.max_length);
    dfs.max_cycles = opts.max_cycles;
    dfs.deadline = opts.deadline;
    dfs.visit = &visit;
    dfs.run();
    return !dfs.aborted;
}

namespace {

struct LongestDfs {
    const Graph* g;
    const Budget* deadline;
    int best = 0;
    unsigned tick = 0;
    bool aborted = false;
    std::vector<Vertex> best_path;
    std::vector<Vertex> path;

    void run() {
        int n = g->n();
        for (Vertex s = 0; s < n && !aborted; ++s) {
            if (best == n) return;
            path.assign(1, s);
            extend(s, g->vertices() - VertexSet::first_n(s + 1));
        }
    }

    void extend(Vertex endpoint, VertexSet allowed) {
        if (aborted) return;
        if (deadline && (++tick & 1023u) == 0 && deadline->expired()) {
            aborted = true;
            return;
        }
        Vertex s = path.front();
        int len = static_cast<int>(path.size());
        if (len >= 3 && len > best && g->adjacent(endpoint, s)) {
            best = len;
            best_path = path;
        }
        if (best == g->n()) return;
        // the cycle must come back to s through unused vertices
        VertexSet reach = reachable_through(*g, endpoint, allowed | VertexSet::single(s));
        if (!reach.contains(s)) return;
        if (len + (reach - VertexSet::single(s)).count() <= best) return;
        for (Vertex w : g->neighbors(endpoint) & allowed & reach) {
            path.push_back(w);
            extend(w, allowed - VertexSet::single(w));
            path.pop_back();
            if (best == g->n() || aborted) return;
        }
    }
};

}  // namespace

CircumferenceResult circumference(const Graph& g, const Budget* deadline) {
    LongestDfs dfs;
    dfs.g = &g;
    dfs.deadline = deadline;
    dfs.run();
    return {dfs.best, std::move(dfs.best_path), !dfs.aborted};
}

std::vector<OrientedCycle> longest_cycles(const Graph& g, std::size_t max_cycles, bool* complete,
                                          const Budget* deadline) {
    std::vector<OrientedCycle> out;
    CircumferenceResult cr = circumference(g, deadline);
    if (complete) *complete = cr.complete;
    if (!cr.complete || cr.length == 0) return out;

    // exact-length enumeration with reachability pruning
    struct ExactDfs {
        const Graph* g;
        int target;
        std::size_t max_cycles;
        const Budget* deadline;
        unsigned tick = 0;
        bool aborted = false;
        std::vector<Vertex> path;
        std::vector<OrientedCycle>* out;

        void extend(Vertex endpoint, VertexSet allowed) {
            if (aborted) return;
            if (deadline && (++tick & 1023u) == 0 && deadline->expired()) {
                aborted = true;
                return;
            }
            Vertex s = path.front();
            int len = static_cast<int>(path.size());
            if (len == target) {
                if (g->adjacent(endpoint, s) && path[1] < endpoint) {
                    if (max_cycles != 0 && out->size() == max_cycles) {
                        aborted = true;
                        return;
                    }
                    out->emplace_back(*g, path);
                }
                return;
            }
            VertexSet reach = reachable_through(*g, endpoint, allowed | VertexSet::single(s));
            if (!reach.contains(s)) return;
            if (len + (reach - VertexSet::single(s)).count() < target) return;
            for (Vertex w : g->neighbors(endpoint) & allowed & reach) {
                path.push_back(w);
                extend(w, allowed - VertexSet::single(w));
                path.pop_back();
                if (aborted) return;
            }
        }
    };

    ExactDfs dfs;
    dfs.g = &g;
    dfs.target = cr.length;
    dfs.max_cycles = max_cycles;
    dfs.deadline = deadline;
    dfs.out = &out;
    for (Vertex s = 0; s < g.n() && !dfs.aborted; ++s) {
        dfs.path.assign(1, s);
        dfs.extend(s, g.vertices() - VertexSet::first_n(s + 1));
    }
    if (complete) *complete = !dfs.aborted;
    return out;
}

CycleCensus cycle_census(const Graph& g, std::size_t max_cycles, const Budget* deadline) {
    CycleCensus census;
    CycleEnumOptions opts;
    opts.max_cycles = max_cycles;
    opts.deadline = deadline;
    census.complete = enumerate_cycles(g, opts, [&](std::span<const Vertex> cyc) {
        int m = static_cast<int>(cyc.size());
        census.lengths_present |= std::uint64_t{1} << m;
        VertexSet vs;
        for (Vertex v : cyc) vs.insert(v);
        int omega = components_after_removal(g, vs);
        auto& slot = census.min_components[static_cast<size_t>(m)];
        if (slot < 0 || omega < slot) slot = omega;
    });
    return census;
}

}  // namespace toughcycles
