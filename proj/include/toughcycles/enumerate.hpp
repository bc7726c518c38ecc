#ifndef TOUGHCYCLES_ENUMERATE_HPP
#define TOUGHCYCLES_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "toughcycles/graph.hpp"

namespace toughcycles {

// Upper-triangle adjacency bits packed in graph6 order, minimized over all
// vertex orderings compatible with the iterated-refinement coloring.
// Equal keys <=> isomorphic graphs. Supported for n <= 11 (55 bits).
std::uint64_t canonical_key(const Graph& g);

Graph graph_from_key(int n, std::uint64_t key);

// All non-isomorphic graphs on n vertices, one representative per class,
// streamed in increasing canonical-key order. Internal generation supports
// 1 <= n <= 10; larger corpora come from graph6 files. Counts are
// cross-checked against the published class counts in tests.
// Returns the number of graphs visited.
std::size_t enumerate_graphs(int n, bool connected_only, const std::function<void(const Graph&)>& visit,
                             int jobs = 1);

// Canonical keys for all graphs on n vertices (sorted). Cached per level.
const std::vector<std::uint64_t>& all_graph_keys(int n, int jobs = 1);

}  // namespace toughcycles

#endif
