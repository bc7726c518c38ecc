#include "toughcycles/setup.hpp"

#include <algorithm>
#include <stdexcept>

namespace toughcycles {

int IntervalDecomposition::two_interval_count() const {
    int c = 0;
    for (const auto& iv : intervals) c += iv.length == 2;
    return c;
}

int IntervalDecomposition::good_two_interval_count() const {
    int c = 0;
    for (const auto& iv : intervals) c += iv.length == 2 && iv.good;
    return c;
}

bool IntervalDecomposition::all_lengths_at_most(int k) const {
    for (const auto& iv : intervals)
        if (iv.length > k) return false;
    return true;
}

int IntervalDecomposition::count_longer_than(int k) const {
    int c = 0;
    for (const auto& iv : intervals) c += iv.length > k;
    return c;
}

int IntervalDecomposition::min_length() const {
    int m = -1;
    for (const auto& iv : intervals)
        if (m < 0 || iv.length < m) m = iv.length;
    return m;
}

namespace {

IntervalDecomposition decompose(const Graph& g, const OrientedCycle& c,
                                const std::vector<Vertex>& anchors, Vertex u, Vertex v) {
    IntervalDecomposition d;
    std::size_t m = anchors.size();
    if (m == 0) return d;
    VertexSet nu = u >= 0 ? g.neighbors(u) : VertexSet();
    VertexSet nv = v >= 0 ? g.neighbors(v) : VertexSet();
    for (std::size_t idx = 0; idx < m; ++idx) {
        Interval iv;
        iv.start_b = anchors[idx];
        iv.end_b = anchors[(idx + 1) % m];
        int pa = c.position(iv.start_b), pb = c.position(iv.end_b);
        int k = c.length();
        iv.length = ((pb - pa) % k + k) % k;
        if (iv.length == 0) iv.length = k;  // single anchor wraps the whole cycle
        for (int t = 1; t < iv.length; ++t) iv.inner.push_back(c.at(pa + t));
        if (iv.length == 2 && u >= 0 && v >= 0) {
            bool in_u = nu.contains(iv.start_b) && nu.contains(iv.end_b);
            bool in_v = nv.contains(iv.start_b) && nv.contains(iv.end_b);
            iv.good = in_u || in_v;
        }
        d.intervals.push_back(std::move(iv));
    }
    return d;
}

VertexSet shift(const OrientedCycle& c, VertexSet a, int dir) {
    VertexSet out;
    for (Vertex v : a) out.insert(c.step(v, dir));
    return out;
}

}  // namespace

std::optional<Setup> Setup::try_build(const Graph& g, OrientedCycle cycle, Vertex u, Vertex v,
                                      std::string* reject_reason) {
    auto reject = [&](const char* why) -> std::optional<Setup> {
        if (reject_reason) *reject_reason = why;
        return std::nullopt;
    };
    if (u < 0 || u >= g.n() || v < 0 || v >= g.n()) return reject("vertex out of range");
    if (cycle.contains(u)) return reject("u lies on the cycle");
    if (!cycle.contains(v)) return reject("v not on the cycle");
    Vertex vp = cycle.successor(v), vm = cycle.predecessor(v);
    if (!g.adjacent(u, vp) || !g.adjacent(u, vm)) return reject("v+,v- not both in N(u)");

    VertexSet b = g.neighborhood_union(u, v);
    if (b.contains(v)) return reject("pivot inside B");  // uv is an edge
    if (!b.subset_of(cycle.vertex_set())) return reject("B member off the cycle");

    Setup s(g, std::move(cycle), u, v);
    s.b_set_ = b;
    int k = s.cycle_.length();
    int pv = s.cycle_.position(v);
    for (int t = 1; t < k; ++t) {
        Vertex w = s.cycle_.at(pv + t);
        if (b.contains(w)) s.b_order_.push_back(w);
    }
    s.b_plus_ = shift(s.cycle_, b, +1);
    s.b_minus_ = shift(s.cycle_, b, -1);
    s.decomp_ = decompose(g, s.cycle_, s.b_order_, u, v);
    s.s3_ = s.decomp_.good_two_interval_count() >= 4;
    return s;
}

IntervalDecomposition decompose_by_anchors(const OrientedCycle& c, VertexSet anchors) {
    std::vector<Vertex> ordered;
    for (int p = 0; p < c.length(); ++p)
        if (anchors.contains(c.at(p))) ordered.push_back(c.at(p));
    // graph/pivot not involved: goodness flags stay false
    IntervalDecomposition d;
    std::size_t m = ordered.size();
    if (m == 0) return d;
    for (std::size_t idx = 0; idx < m; ++idx) {
        Interval iv;
        iv.start_b = ordered[idx];
        iv.end_b = ordered[(idx + 1) % m];
        int pa = c.position(iv.start_b), pb = c.position(iv.end_b);
        int k = c.length();
        iv.length = ((pb - pa) % k + k) % k;
        if (iv.length == 0) iv.length = k;
        for (int t = 1; t < iv.length; ++t) iv.inner.push_back(c.at(pa + t));
        d.intervals.push_back(std::move(iv));
    }
    return d;
}

Setup reverse_orientation(const Setup& s) {
    auto rebuilt = Setup::try_build(s.graph(), s.cycle().reversed(s.graph()), s.u(), s.v());
    if (!rebuilt) throw std::logic_error("reversed setup failed to rebuild");
    return *rebuilt;
}

Setup swap_roles(const Setup& s) {
    const Graph& g = s.graph();
    std::vector<Vertex> verts;
    verts.reserve(static_cast<size_t>(s.cycle().length()));
    for (Vertex w : s.cycle().vertices()) verts.push_back(w == s.v() ? s.u() : w);
    OrientedCycle spliced(g, std::move(verts));  // needs uv+ and uv-, present by (S2)
    auto rebuilt = Setup::try_build(g, std::move(spliced), s.v(), s.u());
    if (!rebuilt) throw std::logic_error("swapped setup failed to rebuild");
    return *rebuilt;
}

std::optional<Setup> relocate_v(const Setup& s, Vertex v0) {
    if (v0 == s.v()) throw std::invalid_argument("relocation target equals the pivot");
    if (!s.cycle().contains(v0)) throw std::invalid_argument("relocation target off the cycle");
    if (!s.decomposition().all_lengths_at_most(3))
        throw std::invalid_argument("relocation requires all intervals of length 2 or 3");
    const Graph& g = s.graph();
    Vertex p = s.cycle().successor(v0), q = s.cycle().predecessor(v0);
    if (g.adjacent(s.u(), p) && g.adjacent(s.u(), q))
        return Setup::try_build(g, s.cycle(), s.u(), v0);
    if (g.adjacent(s.v(), p) && g.adjacent(s.v(), q)) {
        Setup sw = swap_roles(s);
        return Setup::try_build(g, sw.cycle(), sw.u(), v0);
    }
    throw std::invalid_argument("v0+,v0- neither both in N(u) nor both in N(v)");
}

bool inner_connected(const Graph& g, const Interval& p, const Interval& q) {
    for (Vertex x : p.inner)
        for (Vertex y : q.inner)
            if (g.adjacent(x, y)) return true;
    return false;
}

std::vector<SmallPair> find_small_pairs(const Setup& s) {
    const Graph& g = s.graph();
    std::vector<SmallPair> out;
    int cap = s.m() - 1;
    for (Vertex x = 0; x < g.n(); ++x)
        for (Vertex y = x + 1; y < g.n(); ++y) {
            if (g.adjacent(x, y)) continue;
            if ((g.neighbors(x) & g.neighbors(y)).empty()) continue;  // d != 2
            int u = g.neighborhood_union(x, y).count();
            if (u <= cap) out.push_back({x, y, u});
        }
    return out;
}

std::optional<std::vector<Vertex>> hamiltonian_path(const Graph& g, VertexSet within, Vertex from,
                                                    Vertex to) {
    if (!within.contains(from) || !within.contains(to)) return std::nullopt;
    if (within.count() == 1) {
        if (from == to) return std::vector<Vertex>{from};
        return std::nullopt;
    }
    if (from == to) return std::nullopt;

    std::vector<Vertex> path{from};
    VertexSet rest = VertexSet(within).erase(from);

    auto reach_ok = [&](Vertex endpoint, VertexSet remaining) {
        // every remaining vertex must be reachable from the endpoint inside
        // the remaining set
        VertexSet frontier = g.neighbors(endpoint) & remaining;
        VertexSet seen = frontier;
        while (!frontier.empty()) {
            VertexSet next;
            for (Vertex w : frontier) next |= g.neighbors(w);
            next &= remaining;
            next -= seen;
            seen |= next;
            frontier = next;
        }
        return seen == remaining;
    };

    std::optional<std::vector<Vertex>> found;
    auto dfs = [&](auto&& self, Vertex endpoint, VertexSet remaining) -> bool {
        if (remaining.empty()) {
            if (endpoint == to) {
                found = path;
                return true;
            }
            return false;
        }
        if (!reach_ok(endpoint, remaining)) return false;
        for (Vertex w : g.neighbors(endpoint) & remaining) {
            if (w == to && remaining.count() > 1) continue;  // the target must come last
            path.push_back(w);
            if (self(self, w, VertexSet(remaining).erase(w))) return true;
            path.pop_back();
        }
        return false;
    };
    dfs(dfs, from, rest);
    return found;
}

namespace {

int edge_case(const Setup& s, Vertex bi, Vertex bj) {
    const Graph& g = s.graph();
    bool iu = g.adjacent(bi, s.u()), ju = g.adjacent(bj, s.u());
    bool iv = g.adjacent(bi, s.v()), jv = g.adjacent(bj, s.v());
    if (iu && ju) return 1;
    if (iv && jv) return 2;
    if (jv && iu) return 3;
    if (ju && iv) return 4;
    return 0;
}

}  // namespace

std::vector<BadPathWitness> find_bad_paths(const Setup& s, std::size_t budget, bool* complete) {
    const Graph& g = s.graph();
    const OrientedCycle& c = s.cycle();
    std::vector<BadPathWitness> out;
    if (complete) *complete = true;
    int m = s.m();

    auto push = [&](BadPathWitness w) -> bool {
        if (budget != 0 && out.size() == budget) {
            if (complete) *complete = false;
            return false;
        }
        out.push_back(std::move(w));
        return true;
    };

    for (int i = 2; i <= m - 1; ++i) {
        // form (i): all vertices of v+ -> C -> b_i^-, ends v+ and b_j, j < i
        {
            std::vector<Vertex> seg = c.segment(s.v_plus(), c.predecessor(s.b(i)));
            VertexSet segset;
            for (Vertex w : seg) segset.insert(w);
            for (int j = 1; j < i; ++j) {
                Vertex bj = s.b(j);
                if (!segset.contains(bj)) continue;
                auto path = hamiltonian_path(g, segset, bj, s.v_plus());
                if (!path) continue;
                BadPathWitness w;
                w.form = BadPathWitness::Form::one;
                w.i_index = i;
                w.j_index = j;
                w.path = std::move(*path);
                w.case_id = edge_case(s, s.b(i), bj);
                w.degenerate = w.path.size() == 1;
                if (!push(std::move(w))) return out;
            }
        }
        // form (ii): all vertices of b_i^+ -> C -> v-, ends v- and b_j, j > i
        {
            std::vector<Vertex> seg = c.segment(c.successor(s.b(i)), s.v_minus());
            VertexSet segset;
            for (Vertex w : seg) segset.insert(w);
            for (int j = i + 1; j <= m; ++j) {
                Vertex bj = s.b(j);
                if (!segset.contains(bj)) continue;
                auto path = hamiltonian_path(g, segset, bj, s.v_minus());
                if (!path) continue;
                BadPathWitness w;
                w.form = BadPathWitness::Form::two;
                w.i_index = i;
                w.j_index = j;
                w.path = std::move(*path);
                w.case_id = edge_case(s, s.b(i), bj);
                w.degenerate = w.path.size() == 1;
                if (!push(std::move(w))) return out;
            }
        }
    }
    return out;
}

OrientedCycle extend_cycle(const Setup& s, const BadPathWitness& w) {
    const Graph& g = s.graph();
    if (w.form == BadPathWitness::Form::two) {
        // reversal maps form (ii) to form (i): indices mirror, the stored
        // path already runs from b_j to the new v+
        Setup rs = reverse_orientation(s);
        BadPathWitness mirrored = w;
        mirrored.form = BadPathWitness::Form::one;
        mirrored.i_index = s.m() + 1 - w.i_index;
        mirrored.j_index = s.m() + 1 - w.j_index;
        return extend_cycle(rs, mirrored);
    }

    Vertex bi = s.b(w.i_index), bj = s.b(w.j_index);
    int case_id = w.case_id != 0 ? w.case_id : edge_case(s, bi, bj);
    if (case_id == 0) throw std::invalid_argument("no rewiring case applies");
    if (w.path.empty() || w.path.front() != bj || w.path.back() != s.v_plus())
        throw std::invalid_argument("witness path does not run from b_j to v+");

    std::vector<Vertex> fw = s.cycle().segment(bi, s.v_minus());
    std::vector<Vertex> rev(fw.rbegin(), fw.rend());

    std::vector<Vertex> verts;
    verts.push_back(s.v_plus());
    switch (case_id) {
        case 1:
            verts.push_back(s.v());
            verts.insert(verts.end(), rev.begin(), rev.end());
            verts.push_back(s.u());
            break;
        case 2:
            verts.push_back(s.u());
            verts.insert(verts.end(), rev.begin(), rev.end());
            verts.push_back(s.v());
            break;
        case 3:
            verts.push_back(s.u());
            verts.insert(verts.end(), fw.begin(), fw.end());
            verts.push_back(s.v());
            break;
        case 4:
            verts.push_back(s.v());
            verts.insert(verts.end(), fw.begin(), fw.end());
            verts.push_back(s.u());
            break;
        default:
            throw std::invalid_argument("bad case id");
    }
    verts.insert(verts.end(), w.path.begin(), w.path.end() - 1);  // path up to but excluding v+

    OrientedCycle result(g, std::move(verts));  // validates edges and distinctness
    if (result.length() != s.cycle().length() + 1)
        throw std::logic_error("rewired cycle has wrong length");
    VertexSet expect = s.cycle().vertex_set();
    expect.insert(s.u());
    if (result.vertex_set() != expect) throw std::logic_error("rewired cycle covers wrong vertices");
    return result;
}

SetupEnumeration enumerate_setups(const Graph& g, bool require_s3, std::size_t budget) {
    SetupEnumeration out;
    CircumferenceResult cr = circumference(g);
    out.longest_length = cr.length;
    if (cr.length == 0) {
        out.empty_reason = "acyclic";
        return out;
    }
    if (cr.length == g.n()) {
        out.empty_reason = "hamiltonian";
        return out;
    }
    bool cycles_complete = true;
    auto cycles = longest_cycles(g, budget, &cycles_complete);
    out.complete = cycles_complete;

    for (const auto& base : cycles) {
        for (int orient = 0; orient < 2; ++orient) {
            OrientedCycle c = orient == 0 ? base : base.reversed(g);
            VertexSet off = g.vertices() - c.vertex_set();
            for (Vertex u : off) {
                for (Vertex v : c.vertices()) {
                    if (!g.adjacent(u, c.successor(v)) || !g.adjacent(u, c.predecessor(v))) continue;
                    std::string reason;
                    auto s = Setup::try_build(g, c, u, v, &reason);
                    if (budget != 0 && out.setups.size() + out.rejected.size() >= budget) {
                        out.complete = false;
                        return out;
                    }
                    if (s) {
                        if (!require_s3 || s->s3_satisfied()) out.setups.push_back(std::move(*s));
                    } else {
                        std::vector<Vertex> cv(c.vertices().begin(), c.vertices().end());
                        out.rejected.push_back({std::move(cv), u, v, std::move(reason)});
                    }
                }
            }
        }
    }
    if (out.setups.empty() && out.empty_reason.empty()) out.empty_reason = "no qualifying triple";
    return out;
}

std::vector<Setup> find_setups(const Graph& g, bool require_s3) {
    return enumerate_setups(g, require_s3).setups;
}

}  // namespace toughcycles
