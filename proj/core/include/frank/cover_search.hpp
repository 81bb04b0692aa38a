#pragma once

#include <cstdint>
#include <optional>

#include "frank/certificate.hpp"
#include "frank/graph.hpp"

namespace frank {

struct CoverSearchOptions {
    double budget_seconds = 900.0;
    std::uint64_t seed = 0;
    int workers = 1;
    /// Stop after this many restarts even if budget remains; 0 = unlimited.
    int max_restarts = 0;
};

/// Randomized local search for a k-orientation certificate:
/// each restart draws k random orientations, repairs them to strong
/// connectivity by reversing arcs on unreachable cuts, then hill-climbs on
/// the number of covered (somewhere-deletable) edges with single-edge flips
/// that keep strong connectivity, restarting on stagnation. The returned
/// certificate is verified; absence of a result proves nothing.
///
/// Deterministic given (seed, k): restart r uses an RNG derived from
/// (seed, r), workers race over restart indices in batches, and the lowest
/// successful restart index wins regardless of worker count.
std::optional<Certificate> cover_search(const Graph& g, int k,
                                        const CoverSearchOptions& opts = {});

} // namespace frank
