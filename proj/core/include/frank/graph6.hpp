#pragma once

#include <string>
#include <vector>

#include "frank/graph.hpp"

namespace frank {

/// graph6 text codec (single-byte size header, so n <= 62).
///
/// Bit layout follows the published format: the upper triangle of the
/// adjacency matrix is read in column order x(0,1), x(0,2), x(1,2), x(0,3),
/// ..., packed into 6-bit chunks (zero-padded at the end), each chunk offset
/// by 63 into the printable range.
Graph parse_graph6(const std::string& text);
std::string write_graph6(const Graph& g);

/// Reads one graph per line; blank lines and an optional ">>graph6<<" header
/// are skipped.
std::vector<Graph> read_graph6_lines(const std::string& text);

} // namespace frank
