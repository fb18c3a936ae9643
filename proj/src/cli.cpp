#include "hex633/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "hex633/enumeration.hpp"
#include "hex633/export.hpp"
#include "hex633/honeycomb.hpp"
#include "hex633/symmetry.hpp"

namespace hex633 {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

int write_file(const std::string& path, const std::string& bytes, std::ostream& err) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        err << "error: cannot open " << path << " for writing\n";
        return kExitIo;
    }
    f << bytes;
    f.flush();
    if (!f) {
        err << "error: write failed for " << path << "\n";
        return kExitIo;
    }
    return kExitOk;
}

void print_histogram(const std::map<std::int64_t, std::int64_t>& hist, std::ostream& out) {
    for (const auto& [t, k] : hist) out << "trace " << t << ": " << k << "\n";
}

int cmd_enumerate(std::int64_t T, const std::string& format, const std::string& out_path,
                  std::ostream& out, std::ostream& err) {
    auto centers = enumerate_centers(T);
    out << centers.size() << (centers.size() == 1 ? " point" : " points") << "\n";
    print_histogram(count_by_trace(T), out);

    if (!out_path.empty()) {
        std::ostringstream buf;
        if (format == "csv")
            export_csv(centers, BallModel::Klein, buf);
        else
            export_centers_json(centers, T, BallModel::Klein, buf);
        return write_file(out_path, buf.str(), err);
    }
    return kExitOk;
}

struct VerifyRow {
    std::string name;
    bool pass = true;
    std::string detail;
};

int cmd_verify(std::int64_t T, std::int64_t E, bool perturb, std::ostream& out,
               std::ostream& err) {
    std::vector<VerifyRow> rows;

    // 1. Orbit of the identity point equals the enumerated hyperboloid points.
    auto enumerated = enumerate_centers(T);
    if (perturb && !enumerated.empty()) enumerated.pop_back();  // test hook
    OrbitResult orb = orbit(T, E);
    {
        VerifyRow r;
        r.name = "orbit equality (E=" + std::to_string(E) + ")";
        r.pass = orb.points == enumerated;
        r.detail = std::to_string(orb.points.size()) + " orbit points, " +
                   std::to_string(enumerated.size()) + " enumerated, " +
                   std::to_string(orb.rounds) + " rounds";
        if (!r.pass) {
            for (const auto& A : orb.points) {
                if (!std::binary_search(enumerated.begin(), enumerated.end(), A)) {
                    r.detail += "; orbit-only point " + to_string(A);
                    break;
                }
            }
            for (const auto& A : enumerated) {
                if (!std::binary_search(orb.points.begin(), orb.points.end(), A)) {
                    r.detail += "; enumeration-only point " + to_string(A);
                    break;
                }
            }
        }
        rows.push_back(r);
    }

    // 2. Incidence counts.
    IncidenceReport rep = verify_incidence(T);
    for (const auto& c : rep.checks) {
        VerifyRow r;
        r.name = "incidence: " + c.name + " = " + std::to_string(c.expected);
        r.pass = c.pass();
        r.detail = std::to_string(c.objects_checked) + " checked";
        if (!c.pass()) r.detail += "; " + c.counterexample;
        rows.push_back(r);
    }

    // 3. Corner-point exactness for every hexagon inside the margin.
    {
        VerifyRow r;
        r.name = "vertex exactness (det=1, level=1, twice_inner=7/3)";
        std::int64_t corners_checked = 0;
        const std::int64_t M = T / 3;
        for (const LatticePoint& A : enumerate_centers(M)) {
            for (const CellId& cell : cells_through(A)) {
                std::vector<LatticePoint> members = cell_members(cell, T);
                for (const RationalPoint& v : hexagon_vertices(A, cell, T)) {
                    ++corners_checked;
                    if (!rational_det_is(v, 1)) {
                        r.pass = false;
                        r.detail = "det(" + to_string(v) + ") != 1";
                        break;
                    }
                    if (!rational_twice_inner_is(v, cell.n, 1, 1)) {
                        r.pass = false;
                        r.detail = to_string(v) + " not at level 1";
                        break;
                    }
                    std::int64_t at_corner = 0;
                    for (const LatticePoint& B : members)
                        if (rational_twice_inner_is(v, B, 7, 3)) ++at_corner;
                    if (at_corner != 3) {
                        r.pass = false;
                        r.detail = to_string(v) + " has " + std::to_string(at_corner) +
                                   " hexagons at twice_inner 7/3";
                        break;
                    }
                }
                if (!r.pass) break;
            }
            if (!r.pass) break;
        }
        if (r.pass) r.detail = std::to_string(corners_checked) + " corners checked";
        rows.push_back(r);
    }

    bool all = true;
    std::size_t width = 0;
    for (const auto& r : rows) width = std::max(width, r.name.size());
    for (const auto& r : rows) {
        all = all && r.pass;
        out << std::left << std::setw(static_cast<int>(width) + 2) << r.name
            << (r.pass ? "PASS" : "FAIL") << "  " << r.detail << "\n";
    }
    out << (all ? "all checks passed" : "verification failed") << "\n";
    if (!all) {
        for (const auto& r : rows)
            if (!r.pass) {
                err << "failed: " << r.name << " (" << r.detail << ")\n";
                break;
            }
        return kExitVerifyFail;
    }
    return kExitOk;
}

int cmd_export(std::int64_t T, const std::string& model_name, const std::string& format,
               const std::string& out_path, std::ostream& out, std::ostream& err) {
    BallModel model = model_name == "poincare" ? BallModel::Poincare : BallModel::Klein;
    std::ostringstream buf;
    if (format == "csv") {
        auto centers = enumerate_centers(T);
        export_csv(centers, model, buf);
        out << centers.size() << " centers\n";
    } else {
        HoneycombGraph g = build_graph(T);
        if (format == "json")
            export_json(g, model, buf);
        else
            export_obj(g, model, buf);
        out << g.centers.size() << " centers, " << g.adjacency.size() << " adjacency edges, "
            << g.cells.size() << " cells, " << g.vertices.size() << " vertices, "
            << g.faces.size() << " faces\n";
    }
    return write_file(out_path, buf.str(), err);
}

int cmd_cells(const std::string& n_arg, std::int64_t T, std::ostream& out,
              std::ostream& err) {
    std::int64_t vals[4];
    {
        std::istringstream is(n_arg);
        for (int i = 0; i < 4; ++i) {
            char sep = ',';
            if (!(is >> vals[i])) {
                err << "error: --n expects \"d1,d2,ca,cb\"\n";
                return kExitUsage;
            }
            if (i < 3 && (!(is >> sep) || sep != ',')) {
                err << "error: --n expects \"d1,d2,ca,cb\"\n";
                return kExitUsage;
            }
        }
    }
    LatticePoint n{vals[0], vals[1], {vals[2], vals[3]}};
    if (n.is_zero()) {
        err << "error: zero vector\n";
        return kExitUsage;
    }
    if (det(n) != 0) {
        err << "error: not null (det " << det(n) << ")\n";
        return kExitUsage;
    }
    if (trace(n) <= 0) {
        err << "error: not future-directed (trace " << trace(n) << ")\n";
        return kExitUsage;
    }
    if (!is_primitive(n)) {
        err << "error: not primitive\n";
        return kExitUsage;
    }

    CellId cell{n, 1};
    auto members = cell_members(cell, T);
    out << members.size() << (members.size() == 1 ? " member" : " members") << "\n";
    for (const auto& A : members) out << to_string(A) << "\n";

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (twice_inner(members[i], members[j]) == 3) pairs.emplace_back(i, j);
    out << pairs.size() << " in-cell adjacency pairs\n";
    for (auto [i, j] : pairs)
        out << to_string(members[i]) << " -- " << to_string(members[j]) << "\n";
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact-arithmetic construction of the hexagonal tiling honeycomb"};
    app.name("hex633");
    app.require_subcommand(1);

    std::int64_t T = 0;
    std::int64_t E = -1;
    std::string format_enum = "csv", format_exp = "json";
    std::string model = "klein";
    std::string out_path;
    std::string n_arg;
    bool perturb = false;

    auto* enumerate = app.add_subcommand("enumerate", "enumerate hyperboloid lattice points");
    enumerate->add_option("--trace-bound", T, "maximum trace")->required();
    enumerate->add_option("--format", format_enum, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    enumerate->add_option("--out", out_path, "output file");

    auto* verify = app.add_subcommand("verify", "run transitivity, incidence, and vertex checks");
    verify->add_option("--trace-bound", T, "maximum trace")->required();
    verify->add_option("--explore-bound", E, "orbit exploration trace bound (default 2T+2)");
    verify->add_flag("--perturb-centers", perturb)->group("");  // test hook

    auto* exportc = app.add_subcommand("export", "build the honeycomb graph and write a file");
    exportc->add_option("--trace-bound", T, "maximum trace")->required();
    exportc->add_option("--model", model, "ball model")
        ->check(CLI::IsMember({"klein", "poincare"}));
    exportc->add_option("--format", format_exp, "output format")
        ->check(CLI::IsMember({"json", "obj", "csv"}));
    exportc->add_option("--out", out_path, "output file")->required();

    auto* cells = app.add_subcommand("cells", "list the members of one cell");
    cells->add_option("--n", n_arg, "cell vector \"d1,d2,ca,cb\"")->required();
    cells->add_option("--trace-bound", T, "maximum trace")->required();

    std::vector<std::string> argv(args);
    std::vector<const char*> ptrs;
    ptrs.push_back("hex633");
    for (const auto& s : argv) ptrs.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(ptrs.size()), ptrs.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        if (T < 2) {
            err << "error: --trace-bound must be at least 2\n";
            return kExitUsage;
        }
        if (enumerate->parsed())
            return cmd_enumerate(T, format_enum, out_path, out, err);
        if (verify->parsed()) {
            if (E < 0) E = 2 * T + 2;
            if (E < T) {
                err << "error: --explore-bound must be >= --trace-bound\n";
                return kExitUsage;
            }
            return cmd_verify(T, E, perturb, out, err);
        }
        if (exportc->parsed())
            return cmd_export(T, model, format_exp, out_path, out, err);
        if (cells->parsed()) return cmd_cells(n_arg, T, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
    return kExitUsage;
}

}  // namespace hex633
