#pragma once

#include <vector>

#include "frank/graph.hpp"

namespace frank {

/// All cubic 3-edge-connected graphs on n vertices, one per isomorphism
/// class, in a deterministic order (sorted canonical codes). Orderly
/// generation: edges are added in increasing colex order and a partial graph
/// survives only if it is its own canonical labeling, so each class is built
/// exactly once. n must be even and 4 <= n <= 12 (OddOrder / TooLarge).
std::vector<Graph> enumerate_cubic_3ec(int n);

} // namespace frank
