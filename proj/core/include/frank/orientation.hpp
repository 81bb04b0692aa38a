#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "frank/graph.hpp"

namespace frank {

/// Orientation of a Graph: one direction bit per canonical edge, bit set iff
/// the arc runs from the smaller-labeled endpoint to the larger. Requires
/// n <= 64 and m <= 64 so orientations and edge subsets fit in one word.
class Orientation {
public:
    Orientation(const Graph& g, std::uint64_t bits);

    const Graph& graph() const { return *g_; }
    std::uint64_t bits() const { return bits_; }
    int edge_count() const { return g_->edge_count(); }

    bool from_lower(int e) const { return (bits_ >> e) & 1u; }

    /// (tail, head) of the arc replacing edge e.
    std::pair<int, int> arc(int e) const {
        auto [u, v] = g_->edge(e);
        return from_lower(e) ? std::pair{u, v} : std::pair{v, u};
    }

    Orientation reversed() const { return Orientation(*g_, ~bits_ & mask_); }

    std::uint64_t out_mask(int v) const { return out_[static_cast<size_t>(v)]; }
    std::uint64_t in_mask(int v) const { return in_[static_cast<size_t>(v)]; }
    int out_degree(int v) const;
    int in_degree(int v) const;

    /// Arc list [[tail,head],...] in canonical edge order.
    std::vector<std::pair<int, int>> arcs() const;

    /// '0'/'1' string, character i = direction bit of edge i.
    std::string bitstring() const;

    bool operator==(const Orientation& o) const { return g_ == o.g_ ? bits_ == o.bits_ : false; }

private:
    const Graph* g_;
    std::uint64_t bits_;
    std::uint64_t mask_;
    std::vector<std::uint64_t> out_, in_;
};

/// Spec operation make_orientation: checks that exactly one direction bit per
/// edge is supplied (LengthMismatch otherwise).
Orientation make_orientation(const Graph& g, const std::vector<bool>& bits);

/// Builds an orientation from an explicit arc list in canonical edge order.
/// LengthMismatch if the list does not match the graph's edges one to one.
Orientation orientation_from_arcs(const Graph& g, const std::vector<std::pair<int, int>>& arcs);

Orientation reverse_orientation(const Orientation& o);

bool is_strongly_connected(const Orientation& o);

/// Edge e is deletable iff a directed path from the arc's tail to its head
/// survives the arc's removal (equivalently, O - e stays strongly connected
/// when O is strongly connected). With check_sc the precondition is enforced.
bool is_deletable(const Orientation& o, int e, bool check_sc = false);

/// Edges deletable in one strongly connected orientation, plus the
/// orientation's bits so the witness can be reconstructed later.
struct DeletableSet {
    std::uint64_t edges = 0;
    std::uint64_t orientation_bits = 0;
    int size() const;
    bool contains(int e) const { return (edges >> e) & 1u; }
};

/// All deletable edges of o (NotStronglyConnected if o is not). For cubic
/// graphs the out-degree-2 / in-degree-2 necessary condition prunes the path
/// queries unless redgreen_prune is disabled.
DeletableSet deletable_set(const Orientation& o, bool redgreen_prune = true);

/// Red = degree-3 vertex with out-degree 2, green = degree-3 vertex with
/// in-degree 2; everything else (including all non-cubic vertices) neutral.
struct VertexColoring {
    std::uint64_t red = 0, green = 0, neutral = 0;
    bool is_red(int v) const { return (red >> v) & 1u; }
    bool is_green(int v) const { return (green >> v) & 1u; }
};

VertexColoring color_vertices(const Orientation& o);

} // namespace frank
