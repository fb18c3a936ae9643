#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hex633/hermitian.hpp"

namespace hex633 {

// One tiled flat of the honeycomb: the set of centers A with
// twice_inner(A, n) = level for a primitive future null vector n.  Only
// level 1 names a true cell; other level sets are exposed read-only.
struct CellId {
    LatticePoint n;
    std::int64_t level = 1;

    bool operator==(const CellId&) const = default;
};

inline bool operator<(const CellId& a, const CellId& b) {
    if (a.level != b.level) return a.level < b.level;
    return a.n < b.n;
}

// A hermitian matrix with rational entries, stored as an integer lattice
// point over a positive denominator, always in lowest terms.  Honeycomb
// corner points have denominator 3.
struct RationalPoint {
    LatticePoint num;
    std::int64_t den = 1;

    RationalPoint() = default;
    RationalPoint(LatticePoint num_, std::int64_t den_);

    bool operator==(const RationalPoint&) const = default;
};

inline bool operator<(const RationalPoint& a, const RationalPoint& b) {
    if (a.den != b.den) return a.den < b.den;
    return a.num < b.num;
}

// det(v) == k, exactly.
bool rational_det_is(const RationalPoint& v, std::int64_t k);

// twice_inner(v, B) == p/q, exactly (q > 0).
bool rational_twice_inner_is(const RationalPoint& v, const LatticePoint& B,
                             std::int64_t p, std::int64_t q);

std::string to_string(const RationalPoint& v);

// Thrown by hexagon_vertices when the trace bound truncates the in-cell
// neighborhood; the message lists the missing neighbor points.
class incomplete_neighborhood : public std::runtime_error {
public:
    explicit incomplete_neighborhood(const std::string& what)
        : std::runtime_error(what) {}
};

// All unordered index pairs with twice_inner = 3, the minimal value
// attained between distinct centers.  The minimum is asserted by a scan at
// build time; a different minimum throws invariant_violation.
std::vector<std::pair<std::size_t, std::size_t>> build_adjacency(
    const std::vector<LatticePoint>& centers);

// The level-1 cells through a center: all primitive null n with
// twice_inner(A, n) = 1.  Exactly two exist for every center; the search is
// finite because trace(n) <= trace(A) for every solution.
std::vector<CellId> cells_through(const LatticePoint& A);

// All centers A with trace <= T and twice_inner(A, n) = level.  Only
// level = 1 is supported; other levels throw std::domain_error.
std::vector<LatticePoint> cell_members(const CellId& cell, std::int64_t T);

// The six corner points of the hexagon centered at A inside one of its
// cells: for each pair (B, B') of in-cell neighbors of A adjacent to each
// other, (A + B + B' - n)/3.  Each corner has det 1, lies on the cell
// (twice_inner with n equal 1), and is equidistant from A, B, B'
// (twice_inner 7/3).  Sorted canonically.
std::vector<RationalPoint> hexagon_vertices(const LatticePoint& A, const CellId& cell,
                                            std::int64_t T);

// Corner points of the per-cell hexagon tilings represent honeycomb
// vertices.  One honeycomb vertex touches four cells, and its corner point
// in each cell is a different rational point; the four are identified by
// the integer key A + B + B' - 2n, which is independent of the cell used to
// compute it.  The key has det 6; the corner point in an incident cell n is
// (key + n)/3, the incident cells are the primitive null n with
// twice_inner(key, n) = 3, and the incident hexagons are the centers at
// twice_inner(key, A) = 6.
LatticePoint vertex_key(const LatticePoint& A, const LatticePoint& B,
                        const LatticePoint& B2, const CellId& cell);

// The corner point of vertex `key` inside cell n.
RationalPoint vertex_shadow(const LatticePoint& key, const CellId& cell);

// Exact numerator conversion, dividing by the denominator last.
Vec4 to_vec4(const RationalPoint& v);

struct HoneycombGraph {
    std::int64_t trace_bound = 0;
    std::vector<LatticePoint> centers;
    std::vector<std::pair<std::size_t, std::size_t>> adjacency;

    struct Cell {
        CellId id;
        std::vector<std::size_t> members;  // center indices, ascending
    };
    std::vector<Cell> cells;

    struct Vertex {
        LatticePoint key;              // det-6 integer key, shared across cells
        RationalPoint rep;             // corner point in the smallest incident cell
        std::vector<std::size_t> hexagons;  // incident center indices, ascending
        std::vector<std::size_t> cells;     // incident cell indices, ascending
    };
    std::vector<Vertex> vertices;

    struct Face {
        std::size_t center = 0;
        std::size_t cell = 0;
        std::array<std::size_t, 6> corners{};  // vertex indices in cyclic order
    };
    std::vector<Face> faces;  // one per (hexagon, cell) with a full neighborhood
};

// Assemble centers, adjacency, cells, vertices, and per-cell hexagon faces
// for everything that fits inside the trace bound.
HoneycombGraph build_graph(std::int64_t T);

struct IncidenceCheck {
    std::string name;
    std::int64_t expected = 0;
    std::int64_t objects_checked = 0;
    std::int64_t failures = 0;
    std::string counterexample;  // first failing object, empty when passing

    bool pass() const { return failures == 0; }
};

struct IncidenceReport {
    std::int64_t trace_bound = 0;
    std::int64_t margin = 0;
    std::vector<IncidenceCheck> checks;

    bool all_pass() const;
};

// Verify the {6,3,3} incidence counts on every object whose neighborhood
// fits inside the margin trace(.) <= T/3: (a) 6 in-cell neighbors per
// hexagon per cell, (b) 12 neighbors per hexagon, (c) 2 cells per hexagon,
// (d) 3 hexagons per vertex per incident cell, (e) 4 cells and 6 hexagons
// per vertex, (f) 3 cells containing each honeycomb edge.
IncidenceReport verify_incidence(std::int64_t T);

}  // namespace hex633
