#ifndef CSCK_ERRORS_HPP
#define CSCK_ERRORS_HPP

#include <stdexcept>

namespace csck {

/// Invalid parameters or malformed input files (CLI exit code 2).
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A requested solve has no solution for the given data (CLI exit code 4).
struct NoSolutionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An internal invariant the construction guarantees failed to hold.
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace csck

#endif
