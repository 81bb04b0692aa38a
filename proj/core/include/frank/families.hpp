#pragma once

#include <string>

#include "frank/graph.hpp"

namespace frank {

/// Parametrized graph families. Vertex labelings are frozen so the
/// constructive certificate generators can address vertices by index:
///
///   wheel(n):   hub = 0, rim v_1..v_n = 1..n (cycle 1-2-...-n-1), n+1 vertices
///   mobius(n):  rim v_1..v_n = 0..n-1, diagonals v_i v_{i+n/2}; n even >= 4
///   prism(k):   outer v_1..v_k = 0..k-1, inner u_1..u_k = k..2k-1, spokes v_i u_i
///   gp(n,k):    outer u_1..u_n = 0..n-1, inner v_1..v_n = n..2n-1,
///               spokes u_i v_i, inner edges v_i v_{i+k} (mod n); 1 <= k < n/2
///   flower(n):  star centers v_1..v_n = 0..n-1, leaves a_i = n+i-1,
///               b_i = 2n+i-1, c_i = 3n+i-1; an n-cycle on the a's and a
///               2n-cycle on (b_1..b_n, c_1..c_n); n odd >= 3
///   blanusa(i): fixed 18-vertex edge lists, i in {1,2}
///   petersen:   Kneser-style constant (2-subsets of a 5-set, disjointness
///               adjacency); isomorphic to gp(5,2)
///   k4:         complete graph on 4 vertices
struct FamilySpec {
    enum class Kind { petersen, wheel, mobius, prism, gp, flower, blanusa, k4 };
    Kind kind = Kind::petersen;
    int a = 0; // first parameter (n, k, s or index), if any
    int b = 0; // second parameter (gp only)

    static FamilySpec petersen_() { return {Kind::petersen, 0, 0}; }
    static FamilySpec wheel(int n) { return {Kind::wheel, n, 0}; }
    static FamilySpec mobius(int n) { return {Kind::mobius, n, 0}; }
    static FamilySpec prism(int k) { return {Kind::prism, k, 0}; }
    static FamilySpec gp(int n, int k) { return {Kind::gp, n, k}; }
    static FamilySpec flower(int n) { return {Kind::flower, n, 0}; }
    static FamilySpec blanusa(int i) { return {Kind::blanusa, i, 0}; }
    static FamilySpec k4_() { return {Kind::k4, 0, 0}; }
};

/// Parses the CLI form: "petersen", "k4", "wheel:5", "mobius:8", "prism:4",
/// "gp:7,3", "flower:5", "blanusa:1".
FamilySpec parse_family_spec(const std::string& text);
std::string to_string(const FamilySpec& spec);

/// Builds the family member with the labeling documented above.
/// InvalidParameter on out-of-range parameters. The Blanusa constants run a
/// one-time self-check (cubic, girth >= 5, 3-edge-connected, not
/// 3-edge-colorable) on first use.
Graph generate_family(const FamilySpec& spec);

/// Convenience shortcuts used throughout the tests.
Graph petersen_graph();
Graph complete_graph(int n);
Graph cycle_graph(int n);

} // namespace frank
