#pragma once

#include <string>
#include <utility>
#include <vector>

#include "frank/graph.hpp"
#include "frank/orientation.hpp"

namespace frank {

/// Portable proof object for F(G) <= k: k orientations plus, for every edge,
/// the index of an orientation in which that edge is deletable.
///
/// JSON schema (External Interfaces):
///   {"graph6": str, "claimed_frank_number": int,
///    "orientations": [[[tail,head],...],...], "witness": [int,...]}
/// with orientations' arc lists and the witness array in canonical edge order.
struct Certificate {
    std::string graph6;
    int claimed_k = 0;
    std::vector<std::vector<std::pair<int, int>>> orientations;
    std::vector<int> witness;

    std::string to_json(int indent = -1) const;
    static Certificate from_json_text(const std::string& text);
};

/// Assembles a certificate from orientations of g; the witness entry of each
/// edge is the first orientation in which it is deletable (-1 never occurs
/// for a valid cover; an incomplete cover raises CertificateInvalid).
Certificate make_certificate(const Graph& g, const std::vector<Orientation>& orientations);

struct VerifyReport {
    bool ok = false;
    std::string failure;              // empty, or GraphMismatch /
                                      // NotStronglyConnected(i) / WitnessNotDeletable(e) / ...
    int failed_orientation = -1;
    int failed_edge = -1;
    std::vector<int> witnesses;       // echoed per-edge witnesses on success
};

/// Checks graph match, orientation validity, strong connectivity of every
/// orientation, and per-edge witness deletability; stops at the first failure.
VerifyReport verify_certificate(const Graph& g, const Certificate& c);

} // namespace frank
