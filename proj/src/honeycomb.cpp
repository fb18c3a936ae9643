#include "hex633/honeycomb.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "hex633/enumeration.hpp"

namespace hex633 {

RationalPoint::RationalPoint(LatticePoint num_, std::int64_t den_) : num(num_), den(den_) {
    if (den == 0) throw std::domain_error("RationalPoint: zero denominator");
    if (den < 0) {
        den = checked_neg(den, "rational normalize");
        num = -num;
    }
    std::int64_t g = std::gcd(std::gcd(num.d1, num.d2), std::gcd(num.c.a, num.c.b));
    g = std::gcd(g, den);
    if (g > 1) {
        num = {num.d1 / g, num.d2 / g, {num.c.a / g, num.c.b / g}};
        den /= g;
    }
}

bool rational_det_is(const RationalPoint& v, std::int64_t k) {
    // det(num/den) = det(num)/den^2
    return det(v.num) == checked_mul(k, checked_mul(v.den, v.den, "rational det"),
                                     "rational det");
}

bool rational_twice_inner_is(const RationalPoint& v, const LatticePoint& B,
                             std::int64_t p, std::int64_t q) {
    // twice_inner(num/den, B) = twice_inner(num, B)/den == p/q
    return checked_mul(q, twice_inner(v.num, B), "rational twice_inner") ==
           checked_mul(p, v.den, "rational twice_inner");
}

std::string to_string(const RationalPoint& v) {
    return to_string(v.num) + "/" + std::to_string(v.den);
}

std::vector<std::pair<std::size_t, std::size_t>> build_adjacency(
    const std::vector<LatticePoint>& centers) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::int64_t min_seen = 0;
    bool any = false;
    for (std::size_t i = 0; i < centers.size(); ++i) {
        for (std::size_t j = i + 1; j < centers.size(); ++j) {
            std::int64_t ti = twice_inner(centers[i], centers[j]);
            if (!any || ti < min_seen) {
                min_seen = ti;
                any = true;
            }
            if (ti == 3) edges.emplace_back(i, j);
        }
    }
    if (any && min_seen != 3)
        throw invariant_violation("build_adjacency: minimal twice_inner between distinct "
                                  "centers is " + std::to_string(min_seen) + ", expected 3");
    return edges;
}

std::vector<CellId> cells_through(const LatticePoint& A) {
    if (!is_on_hyperboloid(A))
        throw std::domain_error("cells_through: point not on the hyperboloid");
    std::vector<CellId> out;
    // Every null n with twice_inner(A, n) = 1 has trace(n) <= trace(A).
    for (const LatticePoint& n : enumerate_null(trace(A), /*primitive_only=*/true)) {
        if (twice_inner(A, n) == 1) out.push_back({n, 1});
    }
    return out;
}

static void validate_cell(const CellId& cell) {
    if (cell.level != 1)
        throw std::domain_error("cell level must be 1; level sets with level != 1 are not cells");
    if (cell.n.is_zero() || det(cell.n) != 0 || trace(cell.n) <= 0)
        throw std::domain_error("cell vector must be a future null lattice point");
    if (!is_primitive(cell.n)) throw std::domain_error("cell vector must be primitive");
}

std::vector<LatticePoint> cell_members(const CellId& cell, std::int64_t T) {
    validate_cell(cell);
    std::vector<LatticePoint> out;
    for (const LatticePoint& A : enumerate_centers(T)) {
        if (twice_inner(A, cell.n) == cell.level) out.push_back(A);
    }
    return out;
}

LatticePoint vertex_key(const LatticePoint& A, const LatticePoint& B,
                        const LatticePoint& B2, const CellId& cell) {
    return A + B + B2 - 2 * cell.n;
}

RationalPoint vertex_shadow(const LatticePoint& key, const CellId& cell) {
    return RationalPoint(key + cell.n, 3);
}

std::vector<RationalPoint> hexagon_vertices(const LatticePoint& A, const CellId& cell,
                                            std::int64_t T) {
    validate_cell(cell);
    if (!is_on_hyperboloid(A))
        throw std::domain_error("hexagon_vertices: center not on the hyperboloid");
    if (twice_inner(A, cell.n) != cell.level)
        throw std::domain_error("hexagon_vertices: center is not a member of the cell");

    std::vector<LatticePoint> nbrs;
    for (const LatticePoint& B : cell_members(cell, T)) {
        if (B != A && twice_inner(A, B) == 3) nbrs.push_back(B);
    }
    if (nbrs.size() != 6) {
        // Recompute with a bound that certainly contains the whole ring
        // (in-cell neighbor traces stay below 3*trace(A)) and report what
        // the requested bound cut off.
        std::vector<LatticePoint> full;
        for (const LatticePoint& B :
             cell_members(cell, 3 * trace(A) + 2)) {
            if (B != A && twice_inner(A, B) == 3) full.push_back(B);
        }
        std::string msg = "hexagon_vertices: trace bound " + std::to_string(T) +
                          " truncates the neighborhood of " + to_string(A) + "; missing:";
        for (const LatticePoint& B : full) {
            if (std::find(nbrs.begin(), nbrs.end(), B) == nbrs.end())
                msg += " " + to_string(B);
        }
        throw incomplete_neighborhood(msg);
    }

    std::vector<RationalPoint> out;
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
        for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
            if (twice_inner(nbrs[i], nbrs[j]) != 3) continue;
            out.push_back(RationalPoint(A + nbrs[i] + nbrs[j] - cell.n, 3));
        }
    }
    if (out.size() != 6)
        throw invariant_violation("hexagon_vertices: expected 6 corners, found " +
                                  std::to_string(out.size()));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Shared assembly of the combinatorial data inside one trace ball.
struct Assembly {
    std::int64_t T = 0;
    std::vector<LatticePoint> centers;
    std::vector<std::pair<std::size_t, std::size_t>> adjacency;
    std::vector<std::vector<std::size_t>> neighbors;     // per center
    std::vector<CellId> cells;                           // sorted
    std::vector<std::vector<std::size_t>> cell_members;  // per cell, center indices
    std::vector<std::vector<std::size_t>> center_cells;  // per center, cell indices

    // Corner triple: three mutually adjacent centers in one cell.
    struct Triple {
        std::array<std::size_t, 3> hexagons;  // ascending center indices
        std::size_t cell = 0;
        LatticePoint key;  // A + B + B' - 2n
    };
    std::vector<Triple> triples;

    bool in_cell(std::size_t center, std::size_t cell) const {
        return twice_inner(centers[center], cells[cell].n) == cells[cell].level;
    }
};

Assembly assemble(std::int64_t T) {
    Assembly a;
    a.T = T;
    a.centers = enumerate_centers(T);
    a.adjacency = build_adjacency(a.centers);

    a.neighbors.resize(a.centers.size());
    for (auto [i, j] : a.adjacency) {
        a.neighbors[i].push_back(j);
        a.neighbors[j].push_back(i);
    }

    std::set<CellId> cell_set;
    for (const LatticePoint& A : a.centers) {
        for (const CellId& c : cells_through(A)) cell_set.insert(c);
    }
    a.cells.assign(cell_set.begin(), cell_set.end());

    a.cell_members.resize(a.cells.size());
    a.center_cells.resize(a.centers.size());
    for (std::size_t k = 0; k < a.cells.size(); ++k) {
        for (std::size_t i = 0; i < a.centers.size(); ++i) {
            if (twice_inner(a.centers[i], a.cells[k].n) == a.cells[k].level) {
                a.cell_members[k].push_back(i);
                a.center_cells[i].push_back(k);
            }
        }
    }

    // Enumerate corner triples once, via their smallest member.
    for (std::size_t k = 0; k < a.cells.size(); ++k) {
        const auto& members = a.cell_members[k];
        for (std::size_t mi = 0; mi < members.size(); ++mi) {
            std::size_t i = members[mi];
            std::vector<std::size_t> ring;
            for (std::size_t mj = mi + 1; mj < members.size(); ++mj) {
                std::size_t j = members[mj];
                if (twice_inner(a.centers[i], a.centers[j]) == 3) ring.push_back(j);
            }
            for (std::size_t x = 0; x < ring.size(); ++x) {
                for (std::size_t y = x + 1; y < ring.size(); ++y) {
                    if (twice_inner(a.centers[ring[x]], a.centers[ring[y]]) != 3) continue;
                    Assembly::Triple t;
                    t.hexagons = {i, ring[x], ring[y]};
                    t.cell = k;
                    t.key = vertex_key(a.centers[i], a.centers[ring[x]],
                                       a.centers[ring[y]], a.cells[k]);
                    a.triples.push_back(t);
                }
            }
        }
    }
    return a;
}

}  // namespace

HoneycombGraph build_graph(std::int64_t T) {
    Assembly a = assemble(T);

    HoneycombGraph g;
    g.trace_bound = T;
    g.centers = std::move(a.centers);
    g.adjacency = std::move(a.adjacency);
    g.cells.resize(a.cells.size());
    for (std::size_t k = 0; k < a.cells.size(); ++k) {
        g.cells[k].id = a.cells[k];
        g.cells[k].members = a.cell_members[k];
    }

    // Cluster corner triples into honeycomb vertices by integer key.
    struct ClusterData {
        std::set<std::size_t> hexagons;
        std::set<std::size_t> cells;
    };
    std::map<LatticePoint, ClusterData> clusters;
    for (const auto& t : a.triples) {
        auto& cd = clusters[t.key];
        cd.hexagons.insert(t.hexagons.begin(), t.hexagons.end());
        cd.cells.insert(t.cell);
    }

    std::map<LatticePoint, std::size_t> vertex_index;
    for (const auto& [key, cd] : clusters) {
        HoneycombGraph::Vertex v;
        v.key = key;
        v.hexagons.assign(cd.hexagons.begin(), cd.hexagons.end());
        v.cells.assign(cd.cells.begin(), cd.cells.end());
        v.rep = vertex_shadow(key, a.cells[*cd.cells.begin()]);
        vertex_index[key] = g.vertices.size();
        g.vertices.push_back(std::move(v));
    }

    // One face per (hexagon, cell) whose in-cell ring is complete.  The six
    // corners are ordered by angle around the projected center inside the
    // cell plane (Klein coordinates).
    std::map<std::pair<std::size_t, std::size_t>, std::vector<LatticePoint>> face_keys;
    for (const auto& t : a.triples) {
        for (std::size_t h : t.hexagons) face_keys[{h, t.cell}].push_back(t.key);
    }
    for (auto& [fc, keys] : face_keys) {
        if (keys.size() != 6) continue;  // ring truncated by the trace bound
        auto [center_i, cell_k] = fc;

        Vec4 c4 = to_vec4(g.centers[center_i]);
        double ct = c4.t;
        std::array<double, 3> cp{c4.x / ct, c4.y / ct, c4.z / ct};
        std::vector<std::array<double, 3>> rel(6);
        std::sort(keys.begin(), keys.end());
        for (std::size_t s = 0; s < 6; ++s) {
            Vec4 p = to_vec4(vertex_shadow(keys[s], a.cells[cell_k]));
            rel[s] = {p.x / p.t - cp[0], p.y / p.t - cp[1], p.z / p.t - cp[2]};
        }
        auto cross = [](const std::array<double, 3>& u, const std::array<double, 3>& v) {
            return std::array<double, 3>{u[1] * v[2] - u[2] * v[1],
                                         u[2] * v[0] - u[0] * v[2],
                                         u[0] * v[1] - u[1] * v[0]};
        };
        auto dot = [](const std::array<double, 3>& u, const std::array<double, 3>& v) {
            return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
        };
        // Pick a second direction not collinear with rel[0] (antipodal
        // corner pairs exist on every hexagon).
        std::array<double, 3> nrm{};
        for (std::size_t s = 1; s < 6; ++s) {
            nrm = cross(rel[0], rel[s]);
            if (dot(nrm, nrm) > 1e-18) break;
        }
        std::array<double, 3> e2 = cross(nrm, rel[0]);
        std::vector<std::size_t> order{0, 1, 2, 3, 4, 5};
        std::vector<double> angle(6);
        for (std::size_t s = 0; s < 6; ++s)
            angle[s] = std::atan2(dot(rel[s], e2), dot(rel[s], rel[0]));
        std::sort(order.begin(), order.end(),
                  [&](std::size_t x, std::size_t y) { return angle[x] < angle[y]; });

        HoneycombGraph::Face f;
        f.center = center_i;
        f.cell = cell_k;
        for (std::size_t s = 0; s < 6; ++s) f.corners[s] = vertex_index.at(keys[order[s]]);
        g.faces.push_back(f);
    }
    std::sort(g.faces.begin(), g.faces.end(), [](const auto& x, const auto& y) {
        return std::tie(x.center, x.cell) < std::tie(y.center, y.cell);
    });
    return g;
}

bool IncidenceReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass()) return false;
    return true;
}

IncidenceReport verify_incidence(std::int64_t T) {
    Assembly a = assemble(T);
    IncidenceReport rep;
    rep.trace_bound = T;
    rep.margin = T / 3;
    const std::int64_t M = rep.margin;

    auto fail = [](IncidenceCheck& c, const std::string& ex) {
        ++c.failures;
        if (c.counterexample.empty()) c.counterexample = ex;
    };

    auto make_check = [](const char* name, std::int64_t expected) {
        IncidenceCheck c;
        c.name = name;
        c.expected = expected;
        return c;
    };
    IncidenceCheck a_chk = make_check("in-cell neighbors per hexagon per cell", 6);
    IncidenceCheck b_chk = make_check("neighbors per hexagon", 12);
    IncidenceCheck c_chk = make_check("cells per hexagon", 2);
    IncidenceCheck d_chk = make_check("hexagons per vertex per incident cell", 3);
    IncidenceCheck e_cells = make_check("cells per vertex", 4);
    IncidenceCheck e_hex = make_check("hexagons per vertex", 6);
    IncidenceCheck f_chk = make_check("cells per honeycomb edge", 3);

    for (std::size_t i = 0; i < a.centers.size(); ++i) {
        if (trace(a.centers[i]) > M) continue;

        ++b_chk.objects_checked;
        if (static_cast<std::int64_t>(a.neighbors[i].size()) != 12)
            fail(b_chk, to_string(a.centers[i]) + " has " +
                            std::to_string(a.neighbors[i].size()) + " neighbors");

        ++c_chk.objects_checked;
        if (a.center_cells[i].size() != 2)
            fail(c_chk, to_string(a.centers[i]) + " lies in " +
                            std::to_string(a.center_cells[i].size()) + " cells");

        for (std::size_t k : a.center_cells[i]) {
            ++a_chk.objects_checked;
            std::int64_t cnt = 0;
            for (std::size_t j : a.neighbors[i])
                if (a.in_cell(j, k)) ++cnt;
            if (cnt != 6)
                fail(a_chk, to_string(a.centers[i]) + " has " + std::to_string(cnt) +
                                " in-cell neighbors in cell " + to_string(a.cells[k].n));
        }
    }

    // Vertices whose defining corner lies wholly inside the margin.
    std::set<LatticePoint> margin_keys;
    for (const auto& t : a.triples) {
        bool inside = true;
        for (std::size_t h : t.hexagons)
            if (trace(a.centers[h]) > M) inside = false;
        if (inside) margin_keys.insert(t.key);
    }

    // Independent incidence scans against the integer vertex key.
    auto scan_cells = [&](const LatticePoint& key) {
        std::vector<LatticePoint> out;
        for (const LatticePoint& n : enumerate_null(trace(key) / 2 + 1, true))
            if (twice_inner(key, n) == 3) out.push_back(n);
        return out;
    };
    auto scan_hexagons = [&](const LatticePoint& key) {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < a.centers.size(); ++i)
            if (twice_inner(key, a.centers[i]) == 6) out.push_back(i);
        return out;
    };

    for (const LatticePoint& key : margin_keys) {
        auto vcells = scan_cells(key);
        auto vhex = scan_hexagons(key);

        ++e_cells.objects_checked;
        if (vcells.size() != 4)
            fail(e_cells, "vertex " + to_string(key) + " lies in " +
                              std::to_string(vcells.size()) + " cells");
        ++e_hex.objects_checked;
        if (vhex.size() != 6)
            fail(e_hex, "vertex " + to_string(key) + " touches " +
                            std::to_string(vhex.size()) + " hexagons");

        for (const LatticePoint& n : vcells) {
            ++d_chk.objects_checked;
            std::int64_t cnt = 0;
            for (std::size_t h : vhex)
                if (twice_inner(a.centers[h], n) == 1) ++cnt;
            if (cnt != 3)
                fail(d_chk, "vertex " + to_string(key) + " has " + std::to_string(cnt) +
                                " hexagons in cell " + to_string(n));
        }
    }

    // Honeycomb edges: vertex pairs shared by two hexagons of one cell.
    for (std::size_t k = 0; k < a.cells.size(); ++k) {
        const auto& members = a.cell_members[k];
        for (std::size_t mi = 0; mi < members.size(); ++mi) {
            for (std::size_t mj = mi + 1; mj < members.size(); ++mj) {
                std::size_t i = members[mi], j = members[mj];
                if (trace(a.centers[i]) > M || trace(a.centers[j]) > M) continue;
                if (twice_inner(a.centers[i], a.centers[j]) != 3) continue;

                ++f_chk.objects_checked;
                std::string edge_name = to_string(a.centers[i]) + "|" +
                                        to_string(a.centers[j]) + " in cell " +
                                        to_string(a.cells[k].n);

                // The two corner vertices flanking this tiling edge.
                std::vector<std::size_t> flank;
                for (std::size_t m : members) {
                    if (m == i || m == j) continue;
                    if (twice_inner(a.centers[m], a.centers[i]) == 3 &&
                        twice_inner(a.centers[m], a.centers[j]) == 3)
                        flank.push_back(m);
                }
                if (flank.size() != 2) {
                    fail(f_chk, edge_name + " has " + std::to_string(flank.size()) +
                                    " flanking corners");
                    continue;
                }
                LatticePoint s1 = vertex_key(a.centers[i], a.centers[j],
                                             a.centers[flank[0]], a.cells[k]);
                LatticePoint s2 = vertex_key(a.centers[i], a.centers[j],
                                             a.centers[flank[1]], a.cells[k]);
                auto c1 = scan_cells(s1);
                auto c2 = scan_cells(s2);
                std::vector<LatticePoint> common;
                for (const LatticePoint& n : c1)
                    if (std::find(c2.begin(), c2.end(), n) != c2.end()) common.push_back(n);
                if (common.size() != 3)
                    fail(f_chk, edge_name + " lies in " + std::to_string(common.size()) +
                                    " cells");
            }
        }
    }

    rep.checks = {a_chk, b_chk, c_chk, d_chk, e_cells, e_hex, f_chk};
    return rep;
}

Vec4 to_vec4(const RationalPoint& v) {
    Vec4 p = to_vec4(v.num);
    double d = static_cast<double>(v.den);
    return {p.t / d, p.x / d, p.y / d, p.z / d};
}

}  // namespace hex633
