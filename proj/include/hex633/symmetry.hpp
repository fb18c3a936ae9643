#pragma once

#include <cstdint>
#include <vector>

#include "hex633/hermitian.hpp"

namespace hex633 {

// A 2x2 matrix over E with determinant exactly 1.  Acts on the lattice by
// A -> g A g', which preserves det, trace sign on the det > 0 cone, and the
// polarized form.
struct GroupElement {
    Eisenstein m11, m12, m21, m22;

    bool operator==(const GroupElement&) const = default;
};

inline GroupElement group_identity() {
    return {{1, 0}, {0, 0}, {0, 0}, {1, 0}};
}

inline Eisenstein det(const GroupElement& g) {
    return g.m11 * g.m22 - g.m12 * g.m21;
}

GroupElement compose(const GroupElement& g, const GroupElement& h);

// Adjugate; the inverse when det(g) = 1.
GroupElement inverse(const GroupElement& g);

// g A g' reassembled as a LatticePoint.  The product of a determinant-1
// matrix with a hermitian matrix and its own conjugate transpose is again
// hermitian with Eisenstein entries; a failed hermiticity check throws
// invariant_violation.
LatticePoint act(const GroupElement& g, const LatticePoint& A);

// S = [[0,-1],[1,0]], T1 = [[1,1],[0,1]], Tw = [[1,w],[0,1]] and their
// inverses (6 elements; S and its inverse are distinct).  Elementary
// matrices generate the determinant-1 group over a Euclidean ring; here the
// choice is validated by the orbit equality check rather than assumed.
const std::vector<GroupElement>& generators();

struct OrbitResult {
    std::vector<LatticePoint> points;  // orbit members with trace <= T, sorted
    int rounds = 0;                    // BFS rounds until closure at bound E
};

// Breadth-first closure of {identity_point()} under all generators, keeping
// every point with trace <= E, then restricted to trace <= T.
// Requires E >= T >= 2.
OrbitResult orbit(std::int64_t T, std::int64_t E);

}  // namespace hex633
