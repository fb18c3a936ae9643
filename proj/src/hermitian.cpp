#include "hex633/hermitian.hpp"

#include <numeric>
#include <stdexcept>

namespace hex633 {

NsClass classify(const LatticePoint& A) {
    if (A.is_zero()) return NsClass::Degenerate;
    std::int64_t d = det(A);
    if (d < 0) return NsClass::Indefinite;
    std::int64_t t = trace(A);
    if (t < 0) return NsClass::PastDirected;
    // d >= 0 and A != 0 force t != 0 (see header note).
    if (d == 0) return NsClass::NullFutureDirected;
    return d == 1 ? NsClass::PrincipalPolarization : NsClass::Ample;
}

bool is_primitive(const LatticePoint& A) {
    if (A.is_zero()) throw std::domain_error("is_primitive: zero point");
    std::int64_t g = std::gcd(std::gcd(A.d1, A.d2), std::gcd(A.c.a, A.c.b));
    return g == 1 || g == -1;
}

std::string to_string(const LatticePoint& A) {
    return "[" + std::to_string(A.d1) + "," + std::to_string(A.d2) + "," +
           std::to_string(A.c.a) + "," + std::to_string(A.c.b) + "]";
}

std::string to_string(NsClass k) {
    switch (k) {
        case NsClass::PrincipalPolarization: return "PrincipalPolarization";
        case NsClass::Ample: return "Ample";
        case NsClass::NullFutureDirected: return "NullFutureDirected";
        case NsClass::Degenerate: return "Degenerate";
        case NsClass::Indefinite: return "Indefinite";
        case NsClass::PastDirected: return "PastDirected";
    }
    return "?";
}

}  // namespace hex633
