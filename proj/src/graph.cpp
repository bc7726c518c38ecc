#include "toughcycles/graph.hpp"

#include <stdexcept>
#include <string>

namespace toughcycles {

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(n)) {
    if (n < 1 || n > max_vertices)
        throw std::invalid_argument("graph order out of range [1,64]: " + std::to_string(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (auto [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (a == b) throw std::invalid_argument("self-loop");
        if (!adj_[a].contains(b)) {
            adj_[a].insert(b);
            adj_[b].insert(a);
            ++edge_count_;
        }
    }
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<size_t>(edge_count_));
    for (Vertex a = 0; a < n_; ++a)
        for (Vertex b : adj_[a])
            if (b > a) out.emplace_back(a, b);
    return out;
}

Graph Graph::path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph Graph::cycle(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

Graph Graph::complete(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

Graph Graph::complete_bipartite(int a, int b) {
    std::vector<Edge> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph(a + b, e);
}

Graph Graph::petersen() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
        e.emplace_back(i, i + 5);                // spokes
        e.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
    }
    return Graph(10, e);
}

std::optional<int> distance(const Graph& g, Vertex x, Vertex y) {
    if (x == y) return 0;
    VertexSet frontier = VertexSet::single(x);
    VertexSet seen = frontier;
    int d = 0;
    while (!frontier.empty()) {
        ++d;
        VertexSet next;
        for (Vertex v : frontier) next |= g.neighbors(v);
        next -= seen;
        if (next.contains(y)) return d;
        seen |= next;
        frontier = next;
    }
    return std::nullopt;
}

int components_after_removal(const Graph& g, VertexSet removed) {
    VertexSet rest = g.vertices() - removed;
    int count = 0;
    while (!rest.empty()) {
        ++count;
        VertexSet comp = VertexSet::single(rest.min());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (Vertex v : frontier) next |= g.neighbors(v);
            next &= rest;
            next -= comp;
            comp |= next;
            frontier = next;
        }
        rest -= comp;
    }
    return count;
}

bool is_connected(const Graph& g) { return components_after_removal(g, VertexSet()) == 1; }

std::vector<VertexSet> components_within(const Graph& g, VertexSet within) {
    std::vector<VertexSet> out;
    VertexSet rest = within;
    while (!rest.empty()) {
        VertexSet comp = VertexSet::single(rest.min());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (Vertex v : frontier) next |= g.neighbors(v);
            next &= rest;
            next -= comp;
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        rest -= comp;
    }
    return out;
}

}  // namespace toughcycles
