#include "deltagas/error.hpp"

namespace deltagas {

const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::pole: return "pole";
    case ErrorCode::invalid_interval: return "invalid interval";
    case ErrorCode::invalid_argument: return "invalid argument";
    case ErrorCode::pole_on_node: return "pole on node";
    case ErrorCode::poles_too_close: return "poles too close";
    case ErrorCode::singular_system: return "singular system";
    case ErrorCode::not_converged: return "not converged";
    case ErrorCode::wrong_statistics: return "wrong statistics";
    case ErrorCode::bracket_failure: return "bracket failure";
    case ErrorCode::out_of_strip: return "out of strip";
    case ErrorCode::wrong_half_plane: return "wrong half plane";
    case ErrorCode::depth_exceeded: return "depth exceeded";
    case ErrorCode::grid_mismatch: return "grid mismatch";
    case ErrorCode::contraction_failure: return "contraction failure";
    case ErrorCode::degenerate_fit: return "degenerate fit";
    }
    return "unknown";
}

}  // namespace deltagas
