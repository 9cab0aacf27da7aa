#ifndef MESOCAT_ERRORS_HPP
#define MESOCAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mesocat {

// Bad user input: unparsable config, invalid parameter combinations.
// The CLI maps this to exit code 2.
class config_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A numerical guard tripped: truncation too small, step size too coarse,
// grid too large. The CLI maps this to exit code 3.
class guard_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Conditional projection landed on a branch with vanishing probability
// (< 1e-14). Distinct from a generic guard so callers can react to it.
class zero_norm_projection : public guard_error {
public:
    using guard_error::guard_error;
};

} // namespace mesocat

#endif
