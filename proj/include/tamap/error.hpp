#pragma once

#include <stdexcept>
#include <string>

namespace tamap {

/// Malformed text input (bad alphabet, unbalanced word, bad map file).
struct parse_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A well-formed value that violates the invariants an operation requires.
struct invalid_object : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace tamap
