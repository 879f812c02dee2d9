#ifndef EMBKIT_ERRORS_HPP
#define EMBKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace embkit {

// Input that cannot be parsed (files, DIMACS, flags).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A documented precondition of an operation was violated by the caller.
struct precondition_error : std::invalid_argument {
    explicit precondition_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// An internal invariant failed (e.g. the SNF identity); indicates a bug.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace embkit

#endif
