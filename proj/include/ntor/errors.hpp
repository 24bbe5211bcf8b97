#pragma once

#include <stdexcept>
#include <string>

namespace ntor {

// Malformed or inconsistent input; the CLI maps this to exit code 2.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Text that fails to parse; carries a 0-based character offset.
struct ParseError : ValidationError {
    ParseError(const std::string& what, size_t pos)
        : ValidationError(what + " at position " + std::to_string(pos)), position(pos) {}
    size_t position;
};

// Well-formed input whose mathematical hypotheses fail (degenerate pairing,
// inadmissible triple, singular basis change...); exit code 3.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ntor
