#pragma once

#include <stdexcept>
#include <string>

namespace frank {

/// Error codes shared across the library. Each maps 1:1 onto a failure mode
/// of some public operation; `error::code()` lets callers dispatch without
/// string matching.
enum class errc {
    loop_edge,
    duplicate_edge,
    vertex_out_of_range,
    malformed_header,
    trailing_bits,
    unsupported_size,
    invalid_parameter,
    too_large,
    odd_order,
    length_mismatch,
    not_strongly_connected,
    not_three_edge_connected,
    space_too_large,
    degree_too_small,
    wrong_degree,
    not_a_triangle,
    would_create_multiedge,
    certificate_invalid,
    completion_not_found,
    usage_error,
    file_not_found,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::loop_edge: return "LoopEdge";
        case errc::duplicate_edge: return "DuplicateEdge";
        case errc::vertex_out_of_range: return "VertexOutOfRange";
        case errc::malformed_header: return "MalformedHeader";
        case errc::trailing_bits: return "TrailingBits";
        case errc::unsupported_size: return "UnsupportedSize";
        case errc::invalid_parameter: return "InvalidParameter";
        case errc::too_large: return "TooLarge";
        case errc::odd_order: return "OddOrder";
        case errc::length_mismatch: return "LengthMismatch";
        case errc::not_strongly_connected: return "NotStronglyConnected";
        case errc::not_three_edge_connected: return "NotThreeEdgeConnected";
        case errc::space_too_large: return "SpaceTooLarge";
        case errc::degree_too_small: return "DegreeTooSmall";
        case errc::wrong_degree: return "WrongDegree";
        case errc::not_a_triangle: return "NotATriangle";
        case errc::would_create_multiedge: return "WouldCreateMultiedge";
        case errc::certificate_invalid: return "CertificateInvalid";
        case errc::completion_not_found: return "CompletionNotFound";
        case errc::usage_error: return "UsageError";
        case errc::file_not_found: return "FileNotFound";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
public:
    error(errc c, const std::string& what)
        : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc c, const std::string& what) { throw error(c, what); }

} // namespace frank
