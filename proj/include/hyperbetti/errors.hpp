#pragma once

#include <stdexcept>
#include <string>

namespace hyperbetti {

// Error codes shared by the library and the command line tool.  The CLI maps
// them onto its exit code contract (invalid input vs. method inapplicable vs.
// property violation), so every throw site picks the code deliberately.
enum class errc {
    loop_edge,
    contained_edge,
    duplicate_edge,
    vertex_out_of_range,
    bad_label,
    no_such_edge,
    not_uniform,
    not_properly_connected,
    not_triangulated,
    not_a_graph,
    not_a_splitting_edge,
    too_few_edges,
    no_edges,
    too_many_generators,
    too_large,
    bad_field_char,
    cap_exceeded,
    parse_error,
    bad_argument,
    property_violation,
    internal_check_failed,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw error(code, message);
}

} // namespace hyperbetti
