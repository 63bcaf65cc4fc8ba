#ifndef HOLOFLOW_ERRORS_HPP
#define HOLOFLOW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace holoflow {

// Stable error codes, mirrored one-to-one by hf_status in the C header.
enum class ErrorCode {
    invalid_argument = 1,
    parse_error = 2,
    monotonicity = 3,
    ident_zero_equator = 4,
    degenerate_eigenvector = 5,
    step_underflow = 6,
    singular_on_path = 7,
    center_on_orbit = 8,
    not_between_centers = 9,
    anchor_is_zero = 10,
    branch_point_hit = 11,
    io_error = 12,
    numeric_failure = 13,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace holoflow

#endif
