#pragma once

#include <vector>

#include "frank/graph.hpp"

namespace frank {

bool is_connected(const Graph& g);

/// Vertex sets of the connected components of g, each sorted, ordered by
/// smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

/// Exact global edge connectivity, computed as the minimum over t != 0 of a
/// unit-capacity max-flow from vertex 0 to t. Returns 0 for disconnected
/// graphs (and for n <= 1).
int edge_connectivity(const Graph& g);

bool is_three_edge_connected(const Graph& g);

/// Length of a shortest cycle, or 0 if the graph is a forest.
int girth(const Graph& g);

/// True iff v disconnects g - v.
bool is_cut_vertex(const Graph& g, int v);

bool is_hamiltonian(const Graph& g);

/// Proper 3-edge-colorability test by backtracking (exact). Used by the snark
/// self-checks; feasible for the cubic graphs this library targets.
bool is_three_edge_colorable(const Graph& g);

} // namespace frank
