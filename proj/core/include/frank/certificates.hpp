#pragma once

#include <optional>
#include <string>

#include "frank/certificate.hpp"
#include "frank/graph.hpp"

namespace frank {

/// Constructive two-orientation certificates for the elementary families.
/// Every generator verifies its own output before returning it and raises
/// CertificateInvalid if the construction ever failed to verify.
Certificate wheel_certificate(int n);  // n >= 3; wheel(3) is K_4
Certificate mobius_certificate(int n); // even n >= 4; mobius(4) is K_4
Certificate prism_certificate(int k);  // k >= 3

/// Certificate for gp(2s+1, s), s >= 3. The first orientation is fully
/// determined (near-Hamiltonian circuit missing one inner vertex, both inner
/// arcs into it, spoke chords by index parity); the second keeps the spokes,
/// reverses the outer cycle except one arc, and recovers the inner directions
/// by exhaustive search over the 2^(2s+1) assignments (cached per s).
/// CompletionNotFound if no assignment completes the pair.
Certificate gp_certificate(int s);

/// Snark certificates (flower, blanusa) are not constructive: they are found
/// by cover_search and stored as fixture files. The loader looks up a
/// certificate by the graph's graph6 string in `dir`/manifest.json, verifies
/// it, and returns it; nullopt when the directory or entry is missing.
std::optional<Certificate> load_fixture_certificate(const Graph& g, const std::string& dir);

/// Fixture directory resolution: the FRANK_FIXTURES environment variable if
/// set, else "tests/fixtures/snark-certificates" relative to the working
/// directory.
std::string default_fixture_dir();

} // namespace frank
