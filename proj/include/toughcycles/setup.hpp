#ifndef TOUGHCYCLES_SETUP_HPP
#define TOUGHCYCLES_SETUP_HPP

#include <optional>
#include <string>
#include <vector>

#include "toughcycles/cycle.hpp"
#include "toughcycles/graph.hpp"

namespace toughcycles {

// C-path between consecutive B-vertices along the cycle. The decomposition
// tiles the whole cycle, including the wrap segment through the pivot v
// (always a 2-interval b_m -> v -> b_1).
struct Interval {
    Vertex start_b = -1;
    Vertex end_b = -1;
    int length = 0;  // edge count
    std::vector<Vertex> inner;
    bool good = false;  // 2-interval with both ends in N(u) or both in N(v)
};

struct IntervalDecomposition {
    std::vector<Interval> intervals;

    int two_interval_count() const;
    int good_two_interval_count() const;
    bool all_lengths_at_most(int k) const;
    int count_longer_than(int k) const;
    int min_length() const;
};

// Triple (u, v, C): off-cycle u, on-cycle v with v+, v- in N(u), plus the
// ordered set B = N(u) u N(v) = {b_1,...,b_m} starting at v+. Buildable only
// when B lies on the cycle and v itself is outside B; rejected triples carry
// a reason (under the paper's hypotheses a rejection is counterexample-grade).
class Setup {
public:
    static std::optional<Setup> try_build(const Graph& g, OrientedCycle cycle, Vertex u, Vertex v,
                                          std::string* reject_reason = nullptr);

    const Graph& graph() const { return *g_; }
    const OrientedCycle& cycle() const { return cycle_; }
    Vertex u() const { return u_; }
    Vertex v() const { return v_; }
    Vertex v_plus() const { return cycle_.successor(v_); }
    Vertex v_minus() const { return cycle_.predecessor(v_); }

    int m() const { return static_cast<int>(b_order_.size()); }
    const std::vector<Vertex>& b_order() const { return b_order_; }
    Vertex b(int index1) const { return b_order_[static_cast<size_t>(index1 - 1)]; }  // 1-based
    VertexSet b_set() const { return b_set_; }
    VertexSet b_plus() const { return b_plus_; }
    VertexSet b_minus() const { return b_minus_; }
    VertexSet off_cycle() const { return g_->vertices() - cycle_.vertex_set(); }

    bool s3_satisfied() const { return s3_; }
    const IntervalDecomposition& decomposition() const { return decomp_; }

private:
    Setup(const Graph& g, OrientedCycle cycle, Vertex u, Vertex v)
        : g_(&g), cycle_(std::move(cycle)), u_(u), v_(v) {}

    const Graph* g_;
    OrientedCycle cycle_;
    Vertex u_, v_;
    std::vector<Vertex> b_order_;
    VertexSet b_set_, b_plus_, b_minus_;
    bool s3_ = false;
    IntervalDecomposition decomp_;
};

// Decomposition of the cycle by an arbitrary anchor set (Lemma-style interval
// counting against N(u) alone). Anchors off the cycle are ignored by the
// caller's choice; goodness flags stay false.
IntervalDecomposition decompose_by_anchors(const OrientedCycle& c, VertexSet anchors);

// Same setup on the reversed cycle: B+ and B- swap as sets.
Setup reverse_orientation(const Setup& s);

// C~ = u v+ ... v- with u spliced for v; the triple (v, u, C~) is the new
// setup. Same B as a vertex set.
Setup swap_roles(const Setup& s);

// Move the pivot to v0 (Lemma-style setup refinement). Preconditions: all
// intervals of length 2 or 3, v0 != v, and v0+,v0- both in N(u) (direct) or
// both in N(v) (routed through swap_roles). Returns nullopt when the triple
// fails to determine a setup -- a violation-grade event under the paper's
// hypotheses. Throws std::invalid_argument on precondition misuse.
std::optional<Setup> relocate_v(const Setup& s, Vertex v0);

bool inner_connected(const Graph& g, const Interval& p, const Interval& q);

struct SmallPair {
    Vertex x = -1, y = -1;
    int union_size = 0;
};
// All vertex pairs with d(x,y) = 2 and |N(x,y)| <= |B|-1.
std::vector<SmallPair> find_small_pairs(const Setup& s);

struct BadPathWitness {
    enum class Form { one, two };  // statement forms (i)/(ii)
    Form form = Form::one;
    int i_index = 0;  // 1-based index of b_i, 1 < i < m
    int j_index = 0;  // other end's index: j < i for form (i), j > i for form (ii)
    // Path vertices from b_j to the anchor end (v+ for form (i), v- for (ii)).
    std::vector<Vertex> path;
    int case_id = 0;  // first satisfiable edge-condition case 1..4, 0 when none
    bool degenerate = false;  // single-vertex path (b_j coincides with the anchor)
};

// One witness per satisfiable (form, i, j) configuration, found by
// Hamiltonian-path search on the prescribed segment with pinned ends.
std::vector<BadPathWitness> find_bad_paths(const Setup& s, std::size_t budget = 0,
                                           bool* complete = nullptr);

// The four cycle rewirings (and their form-(ii) mirrors): a valid cycle on
// exactly V(C) u {u} with length |C|+1. Throws std::invalid_argument when no
// edge-condition case applies.
OrientedCycle extend_cycle(const Setup& s, const BadPathWitness& w);

struct RejectedTriple {
    std::vector<Vertex> cycle;
    Vertex u = -1, v = -1;
    std::string reason;
};

struct SetupEnumeration {
    std::vector<Setup> setups;
    std::vector<RejectedTriple> rejected;  // triples meeting (S2) that fail to build
    int longest_length = 0;
    bool complete = true;  // false when a budget ran out
    std::string empty_reason;  // set when no setups exist (e.g. "hamiltonian")
};

// All (u, v, C) triples over longest cycles in both orientations, off-cycle
// u and on-cycle v with v+,v- in N(u); deduplicated up to cycle rotation.
SetupEnumeration enumerate_setups(const Graph& g, bool require_s3, std::size_t budget = 0);

std::vector<Setup> find_setups(const Graph& g, bool require_s3);

// Hamiltonian path of the induced subgraph on `within` with pinned ends,
// smallest-vertex-first search order. Exposed for tests.
std::optional<std::vector<Vertex>> hamiltonian_path(const Graph& g, VertexSet within, Vertex from,
                                                    Vertex to);

}  // namespace toughcycles

#endif
