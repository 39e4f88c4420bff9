#pragma once

#include <stdexcept>
#include <string>

namespace ballkit {

// Base class for everything thrown by ballkit.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Tensor/grid shape violations (odd Fourier sizes, mismatched dims, ...).
struct InvalidSizeError : Error {
    using Error::Error;
};

// Point outside the closed unit ball, invalid slice plane, ...
struct DomainError : Error {
    using Error::Error;
};

// Singular or failed linear-algebra step; message names the offending mode.
struct SolverError : Error {
    using Error::Error;
};

// Malformed .bfn container (bad magic, truncation, size overflow, ...).
struct FormatError : Error {
    using Error::Error;
};

// Expression syntax error; carries the byte offset of the problem.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t off)
        : Error(what), offset(off) {}
    std::size_t offset = 0;
};

} // namespace ballkit
