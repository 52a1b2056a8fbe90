#pragma once

#include <stdexcept>

namespace qpr {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violations of mathematical preconditions (singular pivot block, unattainable
// sequence, out-of-range order). The CLI maps these to exit code 1.
struct DomainError : Error {
    using Error::Error;
};

// Malformed text: scalar tokens, matrix files, sequence strings. Exit code 2.
struct ParseError : Error {
    using Error::Error;
};

} // namespace qpr
