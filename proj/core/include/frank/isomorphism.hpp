#pragma once

#include <cstdint>
#include <vector>

#include "frank/graph.hpp"

namespace frank {

/// Full automorphism group of g as explicit vertex permutations, found by
/// labeled backtracking with adjacency-chunk pruning. Reference method for
/// n <= 12 (TooLarge beyond); a secondary guard rejects groups that would
/// materialize more than ~10^6 elements.
struct AutGroup {
    std::vector<std::vector<int>> elements;   // each maps vertex -> image
    std::vector<std::vector<int>> generators; // small generating subset of elements
    std::size_t order() const { return elements.size(); }
};

AutGroup automorphism_group(const Graph& g);

/// Canonical form: the lexicographically minimal edge list over all vertex
/// relabelings, edges sorted and compared in colex order (max endpoint, then
/// min). Two graphs are isomorphic iff they have equal order and equal codes.
/// Requires n <= 32. If `vertex_at` is given it receives the minimizing
/// labeling (new label -> original vertex).
std::vector<std::uint16_t> canonical_edge_code(const Graph& g, std::vector<int>* vertex_at = nullptr);

bool is_isomorphic(const Graph& a, const Graph& b);

namespace detail {

/// True iff the graph given by adjacency bitmasks is its own canonical
/// labeling (no relabeling yields a colex-smaller edge list). This is the
/// acceptance test of the orderly generator in enumerate_cubic.
bool is_canonically_labeled(int n, const std::uint32_t* adj);

} // namespace detail

} // namespace frank
