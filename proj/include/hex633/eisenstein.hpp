#pragma once

#include <array>
#include <compare>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "hex633/checked.hpp"

namespace hex633 {

// Element a + b*w of the ring E, where w is a primitive cube root of unity
// (w^2 = -1 - w).  All arithmetic is exact on checked 64-bit coefficients.
struct Eisenstein {
    std::int64_t a = 0;  // coefficient of 1
    std::int64_t b = 0;  // coefficient of w

    constexpr Eisenstein() = default;
    constexpr Eisenstein(std::int64_t a_, std::int64_t b_) : a(a_), b(b_) {}

    bool operator==(const Eisenstein&) const = default;
    // Canonical (a, b) lexicographic order, used for all sorted output.
    auto operator<=>(const Eisenstein&) const = default;

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_real() const { return b == 0; }
};

inline Eisenstein operator+(const Eisenstein& x, const Eisenstein& y) {
    return {checked_add(x.a, y.a, "eisenstein add"),
            checked_add(x.b, y.b, "eisenstein add")};
}

inline Eisenstein operator-(const Eisenstein& x, const Eisenstein& y) {
    return {checked_sub(x.a, y.a, "eisenstein sub"),
            checked_sub(x.b, y.b, "eisenstein sub")};
}

inline Eisenstein operator-(const Eisenstein& x) {
    return {checked_neg(x.a, "eisenstein neg"), checked_neg(x.b, "eisenstein neg")};
}

// (a+bw)(c+dw) = (ac - bd) + (ad + bc - bd)w, from w^2 = -1 - w.
inline Eisenstein operator*(const Eisenstein& x, const Eisenstein& y) {
    const char* op = "eisenstein mul";
    std::int64_t ac = checked_mul(x.a, y.a, op);
    std::int64_t bd = checked_mul(x.b, y.b, op);
    std::int64_t ad = checked_mul(x.a, y.b, op);
    std::int64_t bc = checked_mul(x.b, y.a, op);
    return {checked_sub(ac, bd, op),
            checked_sub(checked_add(ad, bc, op), bd, op)};
}

inline Eisenstein operator*(std::int64_t k, const Eisenstein& x) {
    return {checked_mul(k, x.a, "eisenstein scale"), checked_mul(k, x.b, "eisenstein scale")};
}

// Complex conjugate: conj(a + bw) = (a - b) - bw, since conj(w) = w^2.
inline Eisenstein conj(const Eisenstein& x) {
    return {checked_sub(x.a, x.b, "eisenstein conj"), checked_neg(x.b, "eisenstein conj")};
}

// Multiplicative norm a^2 - ab + b^2 = x * conj(x); nonnegative.
inline std::int64_t norm(const Eisenstein& x) {
    const char* op = "eisenstein norm";
    std::int64_t aa = checked_mul(x.a, x.a, op);
    std::int64_t ab = checked_mul(x.a, x.b, op);
    std::int64_t bb = checked_mul(x.b, x.b, op);
    return checked_add(checked_sub(aa, ab, op), bb, op);
}

// x + conj(x) = 2a - b, the rational trace of x.
inline std::int64_t real_trace(const Eisenstein& x) {
    return checked_sub(checked_mul(2, x.a, "eisenstein trace"), x.b, "eisenstein trace");
}

// Embedding with w = exp(2*pi*i/3): a + bw -> (a - b/2, b*sqrt(3)/2).
inline std::complex<double> to_complex(const Eisenstein& x) {
    constexpr double half_sqrt3 = 0.86602540378443864676;
    return {static_cast<double>(x.a) - 0.5 * static_cast<double>(x.b),
            half_sqrt3 * static_cast<double>(x.b)};
}

// The six units of E: +-1, +-w, +-(1+w).  Canonical (a, b) order.
const std::array<Eisenstein, 6>& units();

// All e with norm(e) = n, sorted in canonical (a, b) order.
// Throws std::domain_error for n < 0.
std::vector<Eisenstein> elements_of_norm(std::int64_t n);

std::string to_string(const Eisenstein& x);

}  // namespace hex633
