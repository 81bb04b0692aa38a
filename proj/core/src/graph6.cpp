#include "frank/graph6.hpp"

#include <sstream>

namespace frank {

namespace {
constexpr int kOffset = 63;   // printable offset of every 6-bit chunk
constexpr int kMaxSmall = 62; // largest order with a single-byte header
} // namespace

Graph parse_graph6(const std::string& text) {
    if (text.empty()) raise(errc::malformed_header, "empty string");
    unsigned char c0 = static_cast<unsigned char>(text[0]);
    if (c0 == 126) raise(errc::unsupported_size, "multi-byte size header (n > 62)");
    if (c0 < kOffset || c0 > kOffset + kMaxSmall)
        raise(errc::malformed_header, "size byte out of range");
    int n = c0 - kOffset;

    int nbits = n * (n - 1) / 2;
    size_t nbytes = static_cast<size_t>((nbits + 5) / 6);
    if (text.size() != 1 + nbytes)
        raise(errc::malformed_header, "expected " + std::to_string(1 + nbytes) + " bytes, got " +
                                          std::to_string(text.size()));

    std::vector<std::pair<int, int>> pairs;
    int k = 0;          // position in the upper-triangle bit stream
    int col = 1, row = 0;
    for (size_t i = 0; i < nbytes; ++i) {
        unsigned char c = static_cast<unsigned char>(text[1 + i]);
        if (c < kOffset || c > 126) raise(errc::malformed_header, "chunk byte out of range");
        int chunk = c - kOffset;
        for (int b = 5; b >= 0; --b, ++k) {
            bool set = (chunk >> b) & 1;
            if (k >= nbits) {
                if (set) raise(errc::trailing_bits, "nonzero padding bits");
                continue;
            }
            if (set) pairs.emplace_back(row, col);
            if (++row == col) { row = 0; ++col; }
        }
    }
    return Graph::build(n, pairs);
}

std::string write_graph6(const Graph& g) {
    int n = g.vertex_count();
    if (n > kMaxSmall) raise(errc::unsupported_size, "n > 62");
    std::string out;
    out.push_back(static_cast<char>(n + kOffset));

    int nbits = n * (n - 1) / 2;
    int chunk = 0, filled = 0;
    int col = 1, row = 0;
    for (int k = 0; k < nbits; ++k) {
        chunk = (chunk << 1) | (g.has_edge(row, col) ? 1 : 0);
        if (++row == col) { row = 0; ++col; }
        if (++filled == 6) {
            out.push_back(static_cast<char>(chunk + kOffset));
            chunk = 0;
            filled = 0;
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kOffset));
    return out;
}

std::vector<Graph> read_graph6_lines(const std::string& text) {
    std::vector<Graph> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line.rfind(">>", 0) == 0) continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

} // namespace frank
