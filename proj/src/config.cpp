#include "anforge/config.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "anforge/errors.hpp"

namespace anforge {

namespace {

std::uint64_t initial_limit() {
    if (const char* env = std::getenv("ANFORGE_MAX_SPACE")) {
        try {
            unsigned long long v = std::stoull(env);
            if (v >= 2) return v;
        } catch (...) {
            // fall through to the default on garbage input
        }
    }
    return std::uint64_t{1} << 22;
}

std::atomic<std::uint64_t>& limit_slot() {
    static std::atomic<std::uint64_t> limit{initial_limit()};
    return limit;
}

} // namespace

std::uint64_t max_space() { return limit_slot().load(); }

void set_max_space(std::uint64_t limit) { limit_slot().store(limit); }

std::uint64_t checked_pow(std::uint64_t q, int n) {
    std::uint64_t r = 1;
    for (int i = 0; i < n; ++i) {
        if (q != 0 && r > UINT64_MAX / q) throw input_error("q^n overflows 64 bits");
        r *= q;
    }
    return r;
}

std::uint64_t require_space(int n, int q) {
    if (n < 1) throw input_error("node count must be >= 1");
    if (q < 2) throw input_error("alphabet size must be >= 2");
    std::uint64_t size = checked_pow(static_cast<std::uint64_t>(q), n);
    if (size > max_space())
        throw space_limit_error("q^n = " + std::to_string(size) +
                                " exceeds the enumeration limit " + std::to_string(max_space()));
    return size;
}

} // namespace anforge
