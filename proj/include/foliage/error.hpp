#pragma once

#include <stdexcept>
#include <string>

namespace foliage {

// Error conditions surfaced across the library. Budget exhaustion is NOT an
// error: solvers report it through an `exact` flag on their result instead.
enum class Errc {
    edge_not_in_graph,
    invalid_size,
    invalid_vertex,
    not_an_edge,
    invalid_probability,
    size_cap_exceeded,
    too_many_colors,
    not_integrable,
    disconnected,
    improper_coloring,
    not_acyclic,
    not_a_closed_surface,
    unsupported_format,
    invalid_color_count,
    incomplete_report,
    parse_error,
};

inline const char* errc_name(Errc c) {
    switch (c) {
    case Errc::edge_not_in_graph: return "EdgeNotInGraph";
    case Errc::invalid_size: return "InvalidSize";
    case Errc::invalid_vertex: return "InvalidVertex";
    case Errc::not_an_edge: return "NotAnEdge";
    case Errc::invalid_probability: return "InvalidProbability";
    case Errc::size_cap_exceeded: return "SizeCapExceeded";
    case Errc::too_many_colors: return "TooManyColors";
    case Errc::not_integrable: return "NotIntegrable";
    case Errc::disconnected: return "Disconnected";
    case Errc::improper_coloring: return "ImproperColoring";
    case Errc::not_acyclic: return "NotAcyclic";
    case Errc::not_a_closed_surface: return "NotAClosedSurface";
    case Errc::unsupported_format: return "UnsupportedFormat";
    case Errc::invalid_color_count: return "InvalidColorCount";
    case Errc::incomplete_report: return "IncompleteReport";
    case Errc::parse_error: return "ParseError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) {
    throw Error(code, what);
}

} // namespace foliage
