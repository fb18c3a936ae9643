#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hex633 {

// Thrown when a checked 64-bit integer operation would wrap around.
// The message names the operation that overflowed.
class arithmetic_overflow : public std::overflow_error {
public:
    explicit arithmetic_overflow(const std::string& op)
        : std::overflow_error("integer overflow in " + op) {}
};

// Thrown when an internal consistency check fails (should be unreachable).
class invariant_violation : public std::logic_error {
public:
    explicit invariant_violation(const std::string& what)
        : std::logic_error("invariant violation: " + what) {}
};

inline std::int64_t checked_add(std::int64_t x, std::int64_t y, const char* op) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw arithmetic_overflow(op);
    return r;
}

inline std::int64_t checked_sub(std::int64_t x, std::int64_t y, const char* op) {
    std::int64_t r;
    if (__builtin_sub_overflow(x, y, &r)) throw arithmetic_overflow(op);
    return r;
}

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y, const char* op) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) throw arithmetic_overflow(op);
    return r;
}

inline std::int64_t checked_neg(std::int64_t x, const char* op) {
    return checked_sub(0, x, op);
}

}  // namespace hex633
