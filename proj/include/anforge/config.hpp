#pragma once

#include <cstdint>

namespace anforge {

// Whole-space operations refuse to enumerate more than max_space()
// configurations. Default 2^22, overridable via the ANFORGE_MAX_SPACE
// environment variable (read once) or set_max_space().
std::uint64_t max_space();
void set_max_space(std::uint64_t limit);

// q^n with overflow detection; throws input_error on 64-bit overflow.
std::uint64_t checked_pow(std::uint64_t q, int n);

// q^n, additionally checked against max_space(); throws space_limit_error.
std::uint64_t require_space(int n, int q);

} // namespace anforge
