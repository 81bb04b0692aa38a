#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "frank/certificate.hpp"
#include "frank/graph.hpp"
#include "frank/orientation.hpp"

namespace frank {

/// Assignment of the neighbors of a vertex v to the new cycle C_v of a local
/// cubic modification: cycle vertex j is matched to cycle_order[j], and the
/// cycle runs 0-1-...-(d-1)-0.
struct Matching {
    int vertex = -1;
    std::vector<int> cycle_order;
};

/// Record of one graph transformation, with enough correspondence data to
/// carry orientations back and forth.
struct TransformTrace {
    std::string kind; // "lcm" | "truncate" | "contract"
    std::string source_graph6, result_graph6;
    std::vector<int> vertex_map;                 // source vertex -> result vertex, -1 if removed
    std::vector<int> new_vertices;               // result vertices created by the operation
    std::vector<std::array<int, 2>> edge_images; // per source edge: result endpoints in source
                                                 // endpoint order, or {-1,-1} if the edge vanished
    std::vector<int> edge_map;                   // per source edge: result edge index or -1
    std::vector<int> cycle_edges;                // lcm/truncate: result edge indices of C_v

    std::string to_json(int indent = -1) const;
};

/// Replaces vertex v (degree d >= 3) by a d-cycle, each new vertex inheriting
/// one former neighbor of v per the matching. Result vertices: old u keeps u
/// (shifted down past v), cycle vertex j becomes (n-1)+j.
std::pair<Graph, TransformTrace> local_cubic_modification(const Graph& g, int v,
                                                          const Matching& m);

/// A matching whose local cubic modification stays 3-edge-connected.
/// Neighbors are interleaved round-robin across the components of g - v (the
/// cut-vertex case); every candidate is verified by recomputing edge
/// connectivity, with deterministic seeded retries.
Matching good_matching(const Graph& g, int v, std::uint64_t seed = 0);

/// Degree-3 special case of local_cubic_modification (vertex truncation).
std::pair<Graph, TransformTrace> truncate(const Graph& g, int v);

/// Contracts a triangle of a cubic graph into one vertex (the inverse of
/// truncation). The new vertex lands at index n-3; the three outside edges
/// must go to distinct vertices or the result would not be simple.
std::pair<Graph, TransformTrace> contract_triangle(const Graph& g, std::array<int, 3> t);

/// Pulls an orientation of the transformed graph back onto the source graph
/// of an lcm/truncate trace: directions are copied on identical edges and
/// from each cycle arc (c_x, x) to (v, x). The input must be strongly
/// connected; the projection then is as well.
Orientation project_orientation(const Graph& source, const Orientation& o_result,
                                const TransformTrace& trace);

/// Lifts a verifying certificate of g through the truncation of the degree-3
/// vertex v onto the transformed graph. Each orientation is first normalized
/// (reversed if needed) so exactly two arcs leave v; directions are copied
/// outside the triangle and the three triangle arcs are chosen from the four
/// strongly-connected patterns so that the lifted certificate verifies. If
/// `patterns` is given it receives the chosen pattern index per orientation.
Certificate lift_certificate(const Graph& g, int v, const Certificate& c,
                             const TransformTrace& trace, std::vector<int>* patterns = nullptr);

/// Contracts triangles until none remain or the graph is K_4 (which stays as
/// is: contracting its triangles would create multi-edges).
std::pair<Graph, std::vector<TransformTrace>> reduce_to_triangle_free(const Graph& g);

} // namespace frank
