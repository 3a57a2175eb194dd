#pragma once

#include <stdexcept>

namespace anforge {

// Bad argument or malformed input data.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operation is not defined on this domain (e.g. a Boolean-only analysis
// applied to q > 2).
struct unsupported_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// q^n exceeds the configured whole-space enumeration limit.
struct space_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A bounded search ran out of its budget before reaching an answer.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace anforge
