#include "frank/families.hpp"

#include <mutex>
#include <utility>
#include <vector>

#include "frank/connectivity.hpp"

namespace frank {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

// The two Blanusa snarks, built offline as dot products of two Petersen
// graphs and relabeled by BFS order from vertex 0. blanusa(1) is the one with
// automorphism group of order 8, blanusa(2) the one of order 4.
const EdgeList kBlanusa1 = {
    {0, 1},  {0, 2},  {0, 3},  {1, 4},   {1, 5},   {2, 6},   {2, 7},
    {3, 8},  {3, 9},  {4, 10}, {4, 11},  {5, 6},   {5, 12},  {6, 10},
    {7, 12}, {7, 13}, {8, 11}, {8, 14},  {9, 13},  {9, 15},  {10, 16},
    {11, 15}, {12, 16}, {13, 14}, {14, 17}, {15, 17}, {16, 17},
};
const EdgeList kBlanusa2 = {
    {0, 1},  {0, 2},  {0, 3},  {1, 4},   {1, 5},   {2, 6},   {2, 7},
    {3, 8},  {3, 9},  {4, 6},  {4, 10},  {5, 8},   {5, 11},  {6, 12},
    {7, 10}, {7, 13}, {8, 14}, {9, 11},  {9, 15},  {10, 16}, {11, 17},
    {12, 13}, {12, 16}, {13, 15}, {14, 15}, {14, 17}, {16, 17},
};

Graph blanusa_graph(int index) {
    if (index != 1 && index != 2) raise(errc::invalid_parameter, "blanusa index must be 1 or 2");
    Graph g = Graph::build(18, index == 1 ? kBlanusa1 : kBlanusa2);
    static std::once_flag checked[2];
    std::call_once(checked[static_cast<size_t>(index - 1)], [&] {
        bool ok = g.is_cubic() && girth(g) >= 5 && edge_connectivity(g) == 3 &&
                  !is_three_edge_colorable(g);
        if (!ok) raise(errc::invalid_parameter, "blanusa constant failed its snark self-check");
    });
    return g;
}

Graph wheel_graph(int n) {
    if (n < 3) raise(errc::invalid_parameter, "wheel needs n >= 3");
    EdgeList e;
    for (int i = 1; i <= n; ++i) {
        e.emplace_back(0, i);
        e.emplace_back(i, i == n ? 1 : i + 1);
    }
    return Graph::build(n + 1, e);
}

Graph mobius_graph(int n) {
    if (n < 4 || n % 2 != 0) raise(errc::invalid_parameter, "mobius needs even n >= 4");
    EdgeList e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    for (int i = 0; i < n / 2; ++i) e.emplace_back(i, i + n / 2);
    return Graph::build(n, e);
}

Graph prism_graph(int k) {
    if (k < 3) raise(errc::invalid_parameter, "prism needs k >= 3");
    EdgeList e;
    for (int i = 0; i < k; ++i) {
        e.emplace_back(i, (i + 1) % k);         // outer cycle
        e.emplace_back(k + i, k + (i + 1) % k); // inner cycle
        e.emplace_back(i, k + i);               // spokes
    }
    return Graph::build(2 * k, e);
}

Graph gp_graph(int n, int k) {
    if (n < 3 || k < 1) raise(errc::invalid_parameter, "gp needs n >= 3, k >= 1");
    if (2 * k >= n)
        raise(errc::invalid_parameter, "gp needs k < n/2 (k = n/2 would duplicate inner edges)");
    EdgeList e;
    for (int i = 0; i < n; ++i) {
        e.emplace_back(i, (i + 1) % n);         // outer cycle
        e.emplace_back(n + i, n + (i + k) % n); // inner chords
        e.emplace_back(i, n + i);               // spokes
    }
    return Graph::build(2 * n, e);
}

Graph flower_graph(int n) {
    if (n < 3 || n % 2 == 0) raise(errc::invalid_parameter, "flower needs odd n >= 3");
    auto a = [n](int i) { return n + i; };      // 0-based leaf indices
    auto b = [n](int i) { return 2 * n + i; };
    auto c = [n](int i) { return 3 * n + i; };
    EdgeList e;
    for (int i = 0; i < n; ++i) {
        e.emplace_back(i, a(i));
        e.emplace_back(i, b(i));
        e.emplace_back(i, c(i));
        e.emplace_back(a(i), a((i + 1) % n));
    }
    // one 2n-cycle through all b's then all c's
    for (int i = 0; i + 1 < n; ++i) {
        e.emplace_back(b(i), b(i + 1));
        e.emplace_back(c(i), c(i + 1));
    }
    e.emplace_back(b(n - 1), c(0));
    e.emplace_back(c(n - 1), b(0));
    return Graph::build(4 * n, e);
}

} // namespace

Graph petersen_graph() {
    // vertices = 2-subsets of {0..4} in lexicographic order, adjacent iff disjoint
    std::vector<std::pair<int, int>> sets;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) sets.emplace_back(i, j);
    EdgeList e;
    for (size_t x = 0; x < sets.size(); ++x)
        for (size_t y = x + 1; y < sets.size(); ++y) {
            auto [a, b] = sets[x];
            auto [c, d] = sets[y];
            if (a != c && a != d && b != c && b != d)
                e.emplace_back(static_cast<int>(x), static_cast<int>(y));
        }
    return Graph::build(10, e);
}

Graph complete_graph(int n) {
    EdgeList e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::build(n, e);
}

Graph cycle_graph(int n) {
    EdgeList e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::build(n, e);
}

Graph generate_family(const FamilySpec& spec) {
    using Kind = FamilySpec::Kind;
    switch (spec.kind) {
        case Kind::petersen: return petersen_graph();
        case Kind::wheel: return wheel_graph(spec.a);
        case Kind::mobius: return mobius_graph(spec.a);
        case Kind::prism: return prism_graph(spec.a);
        case Kind::gp: return gp_graph(spec.a, spec.b);
        case Kind::flower: return flower_graph(spec.a);
        case Kind::blanusa: return blanusa_graph(spec.a);
        case Kind::k4: return complete_graph(4);
    }
    raise(errc::invalid_parameter, "unknown family kind");
}

FamilySpec parse_family_spec(const std::string& text) {
    auto colon = text.find(':');
    std::string name = text.substr(0, colon);
    std::vector<int> params;
    if (colon != std::string::npos) {
        std::string rest = text.substr(colon + 1);
        size_t pos = 0;
        while (pos <= rest.size()) {
            auto comma = rest.find(',', pos);
            std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos
                                                                          : comma - pos);
            try {
                params.push_back(std::stoi(tok));
            } catch (...) {
                raise(errc::invalid_parameter, "bad family parameter in '" + text + "'");
            }
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    auto want = [&](size_t k) {
        if (params.size() != k)
            raise(errc::invalid_parameter, "family '" + name + "' takes " + std::to_string(k) +
                                               " parameter(s)");
    };
    if (name == "petersen") { want(0); return FamilySpec::petersen_(); }
    if (name == "k4") { want(0); return FamilySpec::k4_(); }
    if (name == "wheel") { want(1); return FamilySpec::wheel(params[0]); }
    if (name == "mobius") { want(1); return FamilySpec::mobius(params[0]); }
    if (name == "prism") { want(1); return FamilySpec::prism(params[0]); }
    if (name == "flower") { want(1); return FamilySpec::flower(params[0]); }
    if (name == "blanusa") { want(1); return FamilySpec::blanusa(params[0]); }
    if (name == "gp") { want(2); return FamilySpec::gp(params[0], params[1]); }
    raise(errc::invalid_parameter, "unknown family '" + name + "'");
}

std::string to_string(const FamilySpec& spec) {
    using Kind = FamilySpec::Kind;
    switch (spec.kind) {
        case Kind::petersen: return "petersen";
        case Kind::k4: return "k4";
        case Kind::wheel: return "wheel:" + std::to_string(spec.a);
        case Kind::mobius: return "mobius:" + std::to_string(spec.a);
        case Kind::prism: return "prism:" + std::to_string(spec.a);
        case Kind::flower: return "flower:" + std::to_string(spec.a);
        case Kind::blanusa: return "blanusa:" + std::to_string(spec.a);
        case Kind::gp: return "gp:" + std::to_string(spec.a) + "," + std::to_string(spec.b);
    }
    return "?";
}

} // namespace frank
