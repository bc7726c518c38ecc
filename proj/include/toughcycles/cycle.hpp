#ifndef TOUGHCYCLES_CYCLE_HPP
#define TOUGHCYCLES_CYCLE_HPP

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "toughcycles/budget.hpp"
#include "toughcycles/graph.hpp"

namespace toughcycles {

// Simple cycle with a fixed orientation; successor/predecessor arithmetic is
// modular over the stored vertex order.
class OrientedCycle {
public:
    // Validates: length >= 3, distinct vertices, consecutive adjacency
    // including the closing edge. Throws std::invalid_argument otherwise.
    OrientedCycle(const Graph& g, std::vector<Vertex> verts);

    int length() const { return static_cast<int>(verts_.size()); }
    std::span<const Vertex> vertices() const { return verts_; }
    bool contains(Vertex v) const { return pos_[static_cast<size_t>(v)] >= 0; }
    int position(Vertex v) const;  // throws when off-cycle

    Vertex successor(Vertex v) const { return step(v, 1); }
    Vertex predecessor(Vertex v) const { return step(v, -1); }
    Vertex step(Vertex v, int offset) const;
    Vertex at(int pos) const { return verts_[static_cast<size_t>(mod(pos))]; }

    VertexSet vertex_set() const { return vset_; }
    OrientedCycle reversed(const Graph& g) const;

    // Consecutive vertices from a to b inclusive, following the orientation.
    std::vector<Vertex> segment(Vertex a, Vertex b) const;

    // Lexicographically minimal rotation over both orientations; identifies
    // cycles up to rotation and reflection.
    std::vector<Vertex> canonical_key() const;

    friend bool operator==(const OrientedCycle&, const OrientedCycle&) = default;

private:
    int mod(int p) const {
        int k = length();
        return ((p % k) + k) % k;
    }

    std::vector<Vertex> verts_;
    std::vector<int> pos_;  // vertex -> index, -1 off-cycle
    VertexSet vset_;
};

struct CycleEnumOptions {
    int min_length = 3;
    int max_length = Graph::max_vertices;
    std::size_t max_cycles = 0;        // 0 = unlimited
    const Budget* deadline = nullptr;  // optional wall-clock cutoff
};

// Visits every simple cycle exactly once up to rotation and reflection
// (lowest vertex first, lower second neighbor first). Returns false when a
// budget ran out before completion.
bool enumerate_cycles(const Graph& g, const CycleEnumOptions& opts,
                      const std::function<void(std::span<const Vertex>)>& visit);

// Exact longest-cycle length via branch and bound over paths with bitset
// reachability pruning. Zero for forests; witness present otherwise.
struct CircumferenceResult {
    int length = 0;
    std::vector<Vertex> witness;
    bool complete = true;  // false when the deadline cut the search short
};
CircumferenceResult circumference(const Graph& g, const Budget* deadline = nullptr);

// All cycles of length circumference(g), each once up to rotation/reflection.
std::vector<OrientedCycle> longest_cycles(const Graph& g, std::size_t max_cycles = 0,
                                          bool* complete = nullptr,
                                          const Budget* deadline = nullptr);

// Per-length facts needed by the hopping-lemma hypotheses.
struct CycleCensus {
    std::uint64_t lengths_present = 0;            // bit m set: an m-cycle exists
    std::array<int, 65> min_components{};         // min over m-cycles of w(G - V(C)); -1 when none
    bool complete = true;                         // false when a budget ran out

    CycleCensus() { min_components.fill(-1); }
    bool has_length(int m) const { return m >= 0 && m < 64 && ((lengths_present >> m) & 1); }
};
CycleCensus cycle_census(const Graph& g, std::size_t max_cycles = 0,
                         const Budget* deadline = nullptr);

}  // namespace toughcycles

#endif
