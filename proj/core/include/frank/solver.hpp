#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "frank/certificate.hpp"
#include "frank/graph.hpp"
#include "frank/orientation.hpp"

namespace frank {

struct EnumOptions {
    /// Fix edge 0's direction and scan half the space; sound for everything
    /// derived from deletable sets because reversal preserves them.
    bool fix_first_edge = true;
    int workers = 1;
    /// Upper bound on the number of orientations a scan may visit
    /// (SpaceTooLarge beyond). 2^26 keeps worst-case scans in seconds.
    std::uint64_t max_space = std::uint64_t{1} << 26;
};

struct EnumStats {
    std::uint64_t scanned = 0;
    std::uint64_t sc_count = 0;
};

struct ScOrientation {
    std::uint64_t bits = 0;
    std::uint64_t deletable = 0;
};

/// All strongly connected orientations of g (up to the optional fixed-bit
/// reduction), each with its deletable set, sorted by direction bits.
std::vector<ScOrientation> enumerate_sc_orientations(const Graph& g, const EnumOptions& opts = {},
                                                     EnumStats* stats = nullptr);

/// Streaming variant; fn runs sequentially in ascending bit order.
void for_each_sc_orientation(const Graph& g, const EnumOptions& opts,
                             const std::function<void(const ScOrientation&)>& fn,
                             EnumStats* stats = nullptr);

/// Distinct deletable sets reduced to maximal elements (no set contained in
/// another), each keeping the smallest orientation bits that produced it.
/// Sorted by (size descending, edge bits ascending); deterministic for any
/// worker count.
struct MaximalSets {
    std::vector<DeletableSet> sets;
    EnumStats stats;
};
MaximalSets maximal_deletable_sets(const Graph& g, const EnumOptions& opts = {});

/// Orbit count of strongly connected orientations under Aut(g), optionally
/// extended by the reversal involution. Representatives are the
/// orbit-minimal direction bit vectors, ascending.
struct OrientationClasses {
    int count = 0;
    bool includes_reversal = false;
    std::uint64_t sc_total = 0; // size of the full (unreduced) SC set
    std::vector<std::uint64_t> representatives;
};
OrientationClasses orientation_classes(const Graph& g, bool include_reversal);

struct SolveBudget {
    double seconds = 900.0;
};

struct SolveStats {
    std::uint64_t scanned = 0;
    std::uint64_t sc_count = 0;
    std::uint64_t maximal_sets = 0;
    double seconds = 0.0;
};

struct SolveReport {
    std::string graph6;
    std::string status;  // "exact" | "inconclusive"
    std::optional<int> frank_number;
    int lower = 1;       // proven lower bound
    int upper = -1;      // proven upper bound, -1 if none
    std::string method;  // "exact" | "nash-williams" | "search"
    std::optional<Certificate> certificate;
    std::string lower_bound_evidence;
    SolveStats stats;
    std::uint64_t seed = 0;

    std::string to_json(int indent = -1) const;
};

/// Exact Frank number by exhaustion over deletable sets: F is the minimum
/// k <= max_k for which k maximal deletable sets cover all edges, and the
/// failed search at k-1 is the lower-bound proof. Edge connectivity 3 rules
/// out F = 1 up front; edge connectivity >= 4 admits F = 1, found by scanning
/// for a fully deletable orientation. NotThreeEdgeConnected if lambda(g) < 3;
/// over-budget or over-space runs return status "inconclusive" with the bounds
/// proven so far.
SolveReport frank_number_exact(const Graph& g, int max_k = 3, const SolveBudget& budget = {},
                               const EnumOptions& opts = {});

struct ConjectureFinding {
    int conjecture = 0;
    std::string status; // "holds" | "fails" | "skipped"
    std::string detail; // witness bitstrings or reason
};

struct ConjectureReport {
    std::string graph6;
    std::vector<ConjectureFinding> findings;
};

/// Batch checks of the four orientation conjectures on cubic 3-edge-connected
/// graphs:
///   1. some strongly connected orientation has a deletable arc at every vertex;
///   2. two orientations give every vertex two distinct deletable incident
///      arcs (distinct as (edge, direction) pairs);
///   3. some orientation has at least half of all arcs deletable;
///   4. Hamiltonian graphs have Frank number 2 (non-Hamiltonian inputs are
///      skipped).
std::vector<ConjectureReport> check_conjectures(const std::vector<Graph>& gs,
                                                const std::set<int>& which = {1, 2, 3, 4},
                                                const EnumOptions& opts = {});

} // namespace frank
