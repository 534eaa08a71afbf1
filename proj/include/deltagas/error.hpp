#pragma once

#include <stdexcept>
#include <string>

namespace deltagas {

enum class ErrorCode {
    pole,               // Gamma family evaluated at a nonpositive integer
    invalid_interval,
    invalid_argument,
    pole_on_node,
    poles_too_close,
    singular_system,    // Bose operator too close to non-invertible
    not_converged,
    wrong_statistics,
    bracket_failure,
    out_of_strip,
    wrong_half_plane,
    depth_exceeded,
    grid_mismatch,
    contraction_failure,
    degenerate_fit,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace deltagas
