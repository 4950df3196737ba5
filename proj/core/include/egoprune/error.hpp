#pragma once

#include <stdexcept>
#include <string>

namespace egoprune {

// Stable error taxonomy. The CLI maps codes onto its exit-code contract:
// 1 = usage/validation, 2 = I/O and file-format, 3 = numerical/degeneracy.
enum class Errc {
    invalid_argument,

    io,
    unsupported_format,
    bad_magic,
    bad_version,
    bad_header,
    truncated_payload,
    non_finite_payload,

    dimension_mismatch,
    insufficient_data,
    degenerate_geometry,
    no_consensus,
    point_at_infinity,
    singular_matrix,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

inline int exit_code_for(Errc code) {
    switch (code) {
        case Errc::invalid_argument:
            return 1;
        case Errc::io:
        case Errc::unsupported_format:
        case Errc::bad_magic:
        case Errc::bad_version:
        case Errc::bad_header:
        case Errc::truncated_payload:
        case Errc::non_finite_payload:
            return 2;
        default:
            return 3;
    }
}

[[noreturn]] inline void fail(Errc code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace egoprune
