#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "hex633/eisenstein.hpp"

namespace hex633 {

// Minkowski 4-vector (t timelike): t = (d1+d2)/2, z = (d1-d2)/2, (x,y) = c.
struct Vec4 {
    double t = 0, x = 0, y = 0, z = 0;
};

inline double minkowski_dot(const Vec4& p, const Vec4& q) {
    return p.t * q.t - p.x * q.x - p.y * q.y - p.z * q.z;
}

// A 2x2 hermitian matrix over E:
//
//     [ d1       conj(c) ]
//     [ c        d2      ]
//
// c is the bottom-left entry; the top-right entry is implicit.  The
// determinant d1*d2 - norm(c) is the Minkowski quadratic form on the lattice.
struct LatticePoint {
    std::int64_t d1 = 0;
    std::int64_t d2 = 0;
    Eisenstein c;

    constexpr LatticePoint() = default;
    constexpr LatticePoint(std::int64_t d1_, std::int64_t d2_, Eisenstein c_)
        : d1(d1_), d2(d2_), c(c_) {}

    bool operator==(const LatticePoint&) const = default;

    bool is_zero() const { return d1 == 0 && d2 == 0 && c.is_zero(); }
};

inline LatticePoint identity_point() { return {1, 1, {0, 0}}; }

inline std::int64_t det(const LatticePoint& A) {
    return checked_sub(checked_mul(A.d1, A.d2, "lattice det"), norm(A.c), "lattice det");
}

inline std::int64_t trace(const LatticePoint& A) {
    return checked_add(A.d1, A.d2, "lattice trace");
}

inline LatticePoint operator+(const LatticePoint& A, const LatticePoint& B) {
    return {checked_add(A.d1, B.d1, "lattice add"),
            checked_add(A.d2, B.d2, "lattice add"), A.c + B.c};
}

inline LatticePoint operator-(const LatticePoint& A, const LatticePoint& B) {
    return {checked_sub(A.d1, B.d1, "lattice sub"),
            checked_sub(A.d2, B.d2, "lattice sub"), A.c - B.c};
}

inline LatticePoint operator-(const LatticePoint& A) {
    return {checked_neg(A.d1, "lattice neg"), checked_neg(A.d2, "lattice neg"), -A.c};
}

inline LatticePoint operator*(std::int64_t k, const LatticePoint& A) {
    return {checked_mul(k, A.d1, "lattice scale"), checked_mul(k, A.d2, "lattice scale"),
            k * A.c};
}

// Polarization of det: det(A+B) - det(A) - det(B).  Equals twice the
// Minkowski inner product of the corresponding 4-vectors, and is always an
// integer; twice_inner(A, A) = 2*det(A).
inline std::int64_t twice_inner(const LatticePoint& A, const LatticePoint& B) {
    const char* op = "twice_inner";
    std::int64_t s = checked_sub(det(A + B), det(A), op);
    return checked_sub(s, det(B), op);
}

// Canonical ordering (trace, d1, d2, c.a, c.b); drives all sorted output.
inline std::strong_ordering order_key(const LatticePoint& A, const LatticePoint& B) {
    if (auto c = trace(A) <=> trace(B); c != 0) return c;
    if (auto c = A.d1 <=> B.d1; c != 0) return c;
    if (auto c = A.d2 <=> B.d2; c != 0) return c;
    return A.c <=> B.c;
}

inline bool operator<(const LatticePoint& A, const LatticePoint& B) {
    return order_key(A, B) == std::strong_ordering::less;
}

inline Vec4 to_vec4(const LatticePoint& A) {
    auto xy = to_complex(A.c);
    return {0.5 * (static_cast<double>(A.d1) + static_cast<double>(A.d2)),
            xy.real(), xy.imag(),
            0.5 * (static_cast<double>(A.d1) - static_cast<double>(A.d2))};
}

inline bool is_on_hyperboloid(const LatticePoint& A) {
    return det(A) == 1 && trace(A) > 0;
}

// Classification of a lattice point by det and trace sign.  Exactly one
// class applies to every point: det > 0 forces both diagonal entries to
// share a sign, and det = 0 with A != 0 forces trace != 0, so the listed
// conditions cover the lattice.
enum class NsClass {
    PrincipalPolarization,  // det = 1, trace > 0
    Ample,                  // det > 0, trace > 0, det != 1
    NullFutureDirected,     // det = 0, trace > 0
    Degenerate,             // A = 0
    Indefinite,             // det < 0
    PastDirected,           // det >= 0, trace < 0, A != 0
};

NsClass classify(const LatticePoint& A);

// gcd(d1, d2, c.a, c.b) = 1.  Throws std::domain_error for A = 0.
bool is_primitive(const LatticePoint& A);

std::string to_string(const LatticePoint& A);
std::string to_string(NsClass k);

}  // namespace hex633
