#ifndef GBLREI_ERRORS_HPP
#define GBLREI_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gblrei {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent arguments (size/grid mismatch, bad names, bad config).
struct InvalidInputError : Error {
    using Error::Error;
};

// A symbol or formula produced a non-finite value where one was required.
struct NumericDomainError : Error {
    using Error::Error;
};

// A documented precondition was violated (e.g. nonzero mean mode).
struct PreconditionError : Error {
    using Error::Error;
};

// Argument outside the mathematical domain of the operation.
struct OutOfDomainError : Error {
    using Error::Error;
};

// Non-finite state detected during time stepping.
struct DivergenceError : Error {
    DivergenceError(const std::string& what, std::size_t step)
        : Error(what), step_index(step) {}
    std::size_t step_index;
};

}  // namespace gblrei

#endif
