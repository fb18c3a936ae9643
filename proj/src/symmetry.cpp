#include "hex633/symmetry.hpp"

#include <set>
#include <stdexcept>

namespace hex633 {

GroupElement compose(const GroupElement& g, const GroupElement& h) {
    return {g.m11 * h.m11 + g.m12 * h.m21, g.m11 * h.m12 + g.m12 * h.m22,
            g.m21 * h.m11 + g.m22 * h.m21, g.m21 * h.m12 + g.m22 * h.m22};
}

GroupElement inverse(const GroupElement& g) {
    return {g.m22, -g.m12, -g.m21, g.m11};
}

LatticePoint act(const GroupElement& g, const LatticePoint& A) {
    // Full product over E; a11/a22 are the real diagonal of A.
    Eisenstein a11{A.d1, 0}, a22{A.d2, 0};
    Eisenstein a12 = conj(A.c), a21 = A.c;

    // M = g * A
    Eisenstein m11 = g.m11 * a11 + g.m12 * a21;
    Eisenstein m12 = g.m11 * a12 + g.m12 * a22;
    Eisenstein m21 = g.m21 * a11 + g.m22 * a21;
    Eisenstein m22 = g.m21 * a12 + g.m22 * a22;

    // R = M * conj-transpose(g)
    Eisenstein r11 = m11 * conj(g.m11) + m12 * conj(g.m12);
    Eisenstein r12 = m11 * conj(g.m21) + m12 * conj(g.m22);
    Eisenstein r21 = m21 * conj(g.m11) + m22 * conj(g.m12);
    Eisenstein r22 = m21 * conj(g.m21) + m22 * conj(g.m22);

    if (!r11.is_real() || !r22.is_real() || r12 != conj(r21))
        throw invariant_violation("act: result not hermitian");
    return {r11.a, r22.a, r21};
}

const std::vector<GroupElement>& generators() {
    static const std::vector<GroupElement> gens = [] {
        GroupElement S{{0, 0}, {-1, 0}, {1, 0}, {0, 0}};
        GroupElement T1{{1, 0}, {1, 0}, {0, 0}, {1, 0}};
        GroupElement Tw{{1, 0}, {0, 1}, {0, 0}, {1, 0}};
        return std::vector<GroupElement>{S, inverse(S), T1, inverse(T1), Tw, inverse(Tw)};
    }();
    return gens;
}

OrbitResult orbit(std::int64_t T, std::int64_t E) {
    if (T < 2 || E < T) throw std::domain_error("orbit: requires E >= T >= 2");

    std::set<LatticePoint> seen;
    std::vector<LatticePoint> frontier{identity_point()};
    seen.insert(identity_point());

    OrbitResult result;
    while (!frontier.empty()) {
        std::vector<LatticePoint> next;
        for (const LatticePoint& A : frontier) {
            for (const GroupElement& g : generators()) {
                LatticePoint B = act(g, A);
                if (trace(B) > E) continue;
                if (seen.insert(B).second) next.push_back(B);
            }
        }
        frontier = std::move(next);
        ++result.rounds;
    }

    for (const LatticePoint& A : seen) {
        if (trace(A) <= T) result.points.push_back(A);
    }
    // std::set already iterates in canonical order.
    return result;
}

}  // namespace hex633
