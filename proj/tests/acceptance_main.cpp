// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion.  Exits nonzero if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hex633/enumeration.hpp"
#include "hex633/export.hpp"
#include "hex633/honeycomb.hpp"
#include "hex633/projection.hpp"
#include "hex633/symmetry.hpp"

using namespace hex633;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << detail
              << "\n";
    if (!pass) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Independent oracle: quadruple loop over the raw coefficient box.
std::vector<LatticePoint> oracle_centers(std::int64_t T) {
    std::vector<LatticePoint> out;
    for (std::int64_t d1 = 1; d1 <= T; ++d1)
        for (std::int64_t d2 = 1; d2 <= T; ++d2)
            for (std::int64_t a = -2 * T; a <= 2 * T; ++a)
                for (std::int64_t b = -2 * T; b <= 2 * T; ++b) {
                    LatticePoint A{d1, d2, {a, b}};
                    if (det(A) == 1 && trace(A) > 0 && trace(A) <= T) out.push_back(A);
                }
    std::sort(out.begin(), out.end());
    return out;
}

// 1. Enumeration counts against the oracle; runtime < 1 s.
void criterion_enumeration() {
    auto t0 = Clock::now();
    std::vector<std::vector<LatticePoint>> enumerated;
    for (std::int64_t T = 2; T <= 8; ++T) enumerated.push_back(enumerate_centers(T));
    double enum_time = seconds_since(t0);

    bool ok = true;
    std::string detail;
    std::size_t expected_counts[] = {1, 13, 19};
    for (int i = 0; i < 3; ++i) {
        if (enumerated[i].size() != expected_counts[i]) {
            ok = false;
            detail = "count at T=" + std::to_string(2 + i) + " is " +
                     std::to_string(enumerated[i].size()) + ", expected " +
                     std::to_string(expected_counts[i]);
        }
    }
    for (std::int64_t T = 2; T <= 8 && ok; ++T) {
        if (enumerated[T - 2] != oracle_centers(T)) {
            ok = false;
            detail = "mismatch with quadruple-loop oracle at T=" + std::to_string(T);
        }
    }
    if (ok && enum_time >= 1.0) {
        ok = false;
        detail = "enumeration took " + std::to_string(enum_time) + " s";
    }
    if (ok)
        detail = "counts 1/13/19 at T=2/3/4; oracle equality for T<=8; " +
                 std::to_string(enum_time) + " s";
    report(1, ok, detail);
}

// 2. Orbit of the identity point equals the enumeration for T = 2..8.
void criterion_transitivity() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    int rounds8 = 0;
    for (std::int64_t T = 2; T <= 8; ++T) {
        OrbitResult r = orbit(T, 2 * T + 2);
        if (T == 8) rounds8 = r.rounds;
        if (r.points != enumerate_centers(T)) {
            ok = false;
            detail = "orbit(T=" + std::to_string(T) + ", E=" + std::to_string(2 * T + 2) +
                      ") differs from enumeration";
            break;
        }
    }
    double t = seconds_since(t0);
    if (ok && t >= 60.0) {
        ok = false;
        detail = "orbit sweep took " + std::to_string(t) + " s";
    }
    if (ok)
        detail = "orbit(T,2T+2) = enumerate_centers(T) for T=2..8 (" +
                 std::to_string(rounds8) + " rounds at T=8); " + std::to_string(t) + " s";
    report(2, ok, detail);
}

// 3. Incidence suite at T=9, margin 3, zero counterexamples.
void criterion_incidence() {
    IncidenceReport rep = verify_incidence(9);
    bool ok = rep.margin == 3;
    std::string detail;
    std::int64_t total_objects = 0;
    for (const auto& c : rep.checks) {
        total_objects += c.objects_checked;
        if (!c.pass()) {
            ok = false;
            detail = c.name + ": " + std::to_string(c.failures) + " counterexamples (" +
                     c.counterexample + ")";
            break;
        }
        if (c.objects_checked == 0) {
            ok = false;
            detail = c.name + ": vacuous at T=9";
            break;
        }
    }
    if (ok)
        detail = "all 7 incidence checks pass on " + std::to_string(total_objects) +
                 " objects, zero counterexamples";
    report(3, ok, detail);
}

// 4. Vertex exactness in rational arithmetic, zero tolerance.
void criterion_vertex_exactness() {
    bool ok = true;
    std::string detail;
    std::int64_t corners = 0;
    const std::int64_t T = 9, M = 3;
    for (const LatticePoint& A : enumerate_centers(M)) {
        for (const CellId& cell : cells_through(A)) {
            auto members = cell_members(cell, T);
            for (const RationalPoint& v : hexagon_vertices(A, cell, T)) {
                ++corners;
                if (!rational_det_is(v, 1)) {
                    ok = false;
                    detail = "det(" + to_string(v) + ") != 1";
                }
                if (!rational_twice_inner_is(v, cell.n, 1, 1)) {
                    ok = false;
                    detail = to_string(v) + " is not at level 1 of its cell";
                }
                std::int64_t at_corner = 0;
                for (const LatticePoint& B : members)
                    if (rational_twice_inner_is(v, B, 7, 3)) ++at_corner;
                if (at_corner != 3) {
                    ok = false;
                    detail = to_string(v) + " has " + std::to_string(at_corner) +
                             " centers at twice_inner 7/3";
                }
            }
        }
    }
    if (ok)
        detail = std::to_string(corners) +
                 " corners: det=1, level=1, twice_inner=7/3 to all 3 hexagons, exact";
    report(4, ok, detail);
}

// 5. Ring and form properties.
void criterion_ring_and_form() {
    bool ok = true;
    std::string detail;

    for (std::int64_t a = -20; a <= 20 && ok; ++a)
        for (std::int64_t b = -20; b <= 20 && ok; ++b)
            for (std::int64_t c = -20; c <= 20 && ok; ++c)
                for (std::int64_t d = -20; d <= 20 && ok; ++d) {
                    Eisenstein x{a, b}, y{c, d};
                    if (norm(x * y) != norm(x) * norm(y)) {
                        ok = false;
                        detail = "norm not multiplicative at " + to_string(x) + ", " +
                                 to_string(y);
                    }
                }

    std::mt19937 rng(101);
    std::uniform_int_distribution<std::int64_t> dist(-5, 5);
    auto rnd = [&] { return LatticePoint{dist(rng), dist(rng), {dist(rng), dist(rng)}}; };
    for (int k = 0; k < 20000 && ok; ++k) {
        LatticePoint A = rnd(), B = rnd(), C = rnd();
        if (twice_inner(A, B) != twice_inner(B, A)) {
            ok = false;
            detail = "twice_inner not symmetric";
        }
        if (twice_inner(A + B, C) != twice_inner(A, C) + twice_inner(B, C)) {
            ok = false;
            detail = "twice_inner not bilinear";
        }
        double approx = minkowski_dot(to_vec4(A), to_vec4(B));
        if (std::abs(approx - static_cast<double>(twice_inner(A, B)) / 2.0) >= 1e-9) {
            ok = false;
            detail = "float Minkowski dot disagrees with twice_inner/2";
        }
    }
    if (ok)
        detail = "norm multiplicativity exhaustive on |a|,|b|<=20; bilinearity and float "
                 "agreement within 1e-9";
    report(5, ok, detail);
}

// 6. Classification partitions the [-3,3] box; principal polarizations are
//    exactly the enumerated hyperboloid points in the box.
void criterion_classification() {
    bool ok = true;
    std::string detail;
    std::set<LatticePoint> principal;
    std::int64_t points = 0;
    for (std::int64_t d1 = -3; d1 <= 3; ++d1)
        for (std::int64_t d2 = -3; d2 <= 3; ++d2)
            for (std::int64_t a = -3; a <= 3; ++a)
                for (std::int64_t b = -3; b <= 3; ++b) {
                    LatticePoint A{d1, d2, {a, b}};
                    ++points;
                    NsClass k = classify(A);
                    std::int64_t dt = det(A), tr = trace(A);
                    bool consistent = false;
                    switch (k) {
                        case NsClass::Degenerate: consistent = A.is_zero(); break;
                        case NsClass::Indefinite: consistent = dt < 0; break;
                        case NsClass::PastDirected:
                            consistent = dt >= 0 && tr < 0 && !A.is_zero();
                            break;
                        case NsClass::NullFutureDirected:
                            consistent = dt == 0 && tr > 0 && !A.is_zero();
                            break;
                        case NsClass::Ample: consistent = dt > 0 && dt != 1 && tr > 0; break;
                        case NsClass::PrincipalPolarization:
                            consistent = dt == 1 && tr > 0;
                            principal.insert(A);
                            break;
                    }
                    if (!consistent) {
                        ok = false;
                        detail = "class predicate fails at " + to_string(A);
                    }
                }

    std::set<LatticePoint> from_enum;
    for (const auto& A : enumerate_centers(6))
        if (std::abs(A.d1) <= 3 && std::abs(A.d2) <= 3 && std::abs(A.c.a) <= 3 &&
            std::abs(A.c.b) <= 3)
            from_enum.insert(A);
    if (ok && principal != from_enum) {
        ok = false;
        detail = "principal polarizations differ from enumerated centers in the box";
    }
    if (ok)
        detail = "partition consistent on " + std::to_string(points) +
                 " box points; principal set = centers in box (" +
                 std::to_string(principal.size()) + " points)";
    report(6, ok, detail);
}

// 7. Projection and export.
void criterion_projection_export() {
    bool ok = true;
    std::string detail;

    auto centers = enumerate_centers(8);
    for (const auto& A : centers) {
        Vec4 p = to_vec4(A);
        if (to_klein(p).radius() >= 1.0 || to_poincare(p).radius() >= 1.0) {
            ok = false;
            detail = "ball radius >= 1 at " + to_string(A);
        }
    }
    const double step = std::acosh(1.5);
    for (auto [i, j] : build_adjacency(centers)) {
        double d = hyperbolic_distance(to_vec4(centers[i]), to_vec4(centers[j]));
        if (std::abs(d - step) >= 1e-9) {
            ok = false;
            detail = "adjacent distance differs from acosh(3/2)";
        }
    }

    HoneycombGraph g1 = build_graph(6);
    HoneycombGraph g2 = build_graph(6);
    for (BallModel m : {BallModel::Klein, BallModel::Poincare}) {
        std::ostringstream j1, j2, o1, o2, c1, c2;
        export_json(g1, m, j1);
        export_json(g2, m, j2);
        export_obj(g1, m, o1);
        export_obj(g2, m, o2);
        export_csv(g1.centers, m, c1);
        export_csv(g2.centers, m, c2);
        if (j1.str() != j2.str() || o1.str() != o2.str() || c1.str() != c2.str()) {
            ok = false;
            detail = "export bytes differ between runs";
        }
        // Every OBJ face line has exactly 6 indices.
        std::istringstream in(o1.str());
        std::string line;
        while (std::getline(in, line)) {
            if (line.rfind("f ", 0) != 0) continue;
            std::istringstream ls(line.substr(2));
            int n = 0;
            long long v;
            while (ls >> v) ++n;
            if (n != 6) {
                ok = false;
                detail = "OBJ face with " + std::to_string(n) + " vertices";
            }
        }
    }
    if (ok)
        detail = "radii < 1 at T=8; adjacent distances = acosh(3/2) within 1e-9; exports "
                 "byte-identical; OBJ faces 6-sided";
    report(7, ok, detail);
}

}  // namespace

int main() {
    criterion_enumeration();
    criterion_transitivity();
    criterion_incidence();
    criterion_vertex_exactness();
    criterion_ring_and_form();
    criterion_classification();
    criterion_projection_export();
    if (g_failures == 0) {
        std::cout << "acceptance: all criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << g_failures << " criteria failed\n";
    return 1;
}
