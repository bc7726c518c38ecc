#ifndef TOUGHCYCLES_GRAPH_HPP
#define TOUGHCYCLES_GRAPH_HPP

#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "toughcycles/vertex_set.hpp"

namespace toughcycles {

using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph on dense vertex indices 0..n-1, n <= 64.
// Adjacency is symmetric and irreflexive by construction.
class Graph {
public:
    static constexpr int max_vertices = 64;

    explicit Graph(int n);  // edgeless
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges);

    int n() const { return n_; }
    int edge_count() const { return edge_count_; }

    bool adjacent(Vertex a, Vertex b) const { return adj_[a].contains(b); }
    VertexSet neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return adj_[v].count(); }
    VertexSet vertices() const { return VertexSet::first_n(n_); }

    // N(x,y) = N(x) u N(y)
    VertexSet neighborhood_union(Vertex x, Vertex y) const { return adj_[x] | adj_[y]; }

    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

    static Graph path(int n);
    static Graph cycle(int n);
    static Graph complete(int n);
    static Graph complete_bipartite(int a, int b);
    static Graph petersen();

private:
    int n_ = 0;
    int edge_count_ = 0;
    std::vector<VertexSet> adj_;
};

// Shortest-path hop count, nullopt when unreachable. distance(g,x,x) = 0.
std::optional<int> distance(const Graph& g, Vertex x, Vertex y);

// Number of connected components of the subgraph induced on V(G) - removed.
// Zero when every vertex is removed.
int components_after_removal(const Graph& g, VertexSet removed);

bool is_connected(const Graph& g);

// Components of the induced subgraph on `within`, as vertex sets.
std::vector<VertexSet> components_within(const Graph& g, VertexSet within);

}  // namespace toughcycles

#endif
