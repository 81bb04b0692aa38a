#include <doctest.h>

#include "frank/graph.hpp"

TEST_CASE("build_graph canonicalizes") {
    auto g = frank::build_graph(4, {{2, 1}, {0, 1}, {3, 0}});
    CHECK(g.edge_count() == 3);
    CHECK(g.edge(0).u == 0);
}
