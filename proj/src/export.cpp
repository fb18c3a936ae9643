#include "hex633/export.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <string>

namespace hex633 {

namespace {

std::string fmt_float(double x) {
    if (x == 0.0) x = 0.0;  // collapse negative zero
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fmt_ints(const LatticePoint& A) {
    return "[" + std::to_string(A.d1) + "," + std::to_string(A.d2) + "," +
           std::to_string(A.c.a) + "," + std::to_string(A.c.b) + "]";
}

std::string fmt_ball(const BallPoint& b) {
    return "[" + fmt_float(b.x) + "," + fmt_float(b.y) + "," + fmt_float(b.z) + "]";
}

std::string fmt_indices(const std::vector<std::size_t>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

BallPoint ball_of(const LatticePoint& A, BallModel m) { return to_ball(to_vec4(A), m); }
BallPoint ball_of(const RationalPoint& v, BallModel m) { return to_ball(to_vec4(v), m); }

}  // namespace

void export_json(const HoneycombGraph& g, BallModel model, std::ostream& out) {
    out << "{\n";
    out << "\"metadata\":{\"trace_bound\":" << g.trace_bound << ",\"model\":\""
        << to_string(model) << "\",\"counts\":{\"centers\":" << g.centers.size()
        << ",\"adjacency\":" << g.adjacency.size() << ",\"cells\":" << g.cells.size()
        << ",\"vertices\":" << g.vertices.size() << "}},\n";

    out << "\"centers\":[";
    for (std::size_t i = 0; i < g.centers.size(); ++i) {
        const LatticePoint& A = g.centers[i];
        out << (i ? ",\n" : "\n");
        out << "{\"index\":" << i << ",\"matrix\":" << fmt_ints(A)
            << ",\"ball\":" << fmt_ball(ball_of(A, model)) << ",\"trace\":" << trace(A)
            << "}";
    }
    out << "],\n";

    out << "\"adjacency\":[";
    for (std::size_t i = 0; i < g.adjacency.size(); ++i) {
        out << (i ? ",\n" : "\n");
        out << "[" << g.adjacency[i].first << "," << g.adjacency[i].second << "]";
    }
    out << "],\n";

    out << "\"cells\":[";
    for (std::size_t k = 0; k < g.cells.size(); ++k) {
        out << (k ? ",\n" : "\n");
        out << "{\"n\":" << fmt_ints(g.cells[k].id.n)
            << ",\"members\":" << fmt_indices(g.cells[k].members) << "}";
    }
    out << "],\n";

    out << "\"vertices\":[";
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        const auto& vx = g.vertices[v];
        out << (v ? ",\n" : "\n");
        out << "{\"num\":" << fmt_ints(vx.rep.num) << ",\"den\":" << vx.rep.den
            << ",\"ball\":" << fmt_ball(ball_of(vx.rep, model))
            << ",\"hexagons\":" << fmt_indices(vx.hexagons)
            << ",\"cells\":" << fmt_indices(vx.cells) << "}";
    }
    out << "]\n";
    out << "}\n";
}

void export_obj(const HoneycombGraph& g, BallModel model, std::ostream& out) {
    // Corner points per face live in that face's cell plane; collect the
    // distinct rational points first so faces can share indices.
    std::map<RationalPoint, std::size_t> point_index;
    std::vector<RationalPoint> points;
    std::vector<std::array<std::size_t, 6>> face_pts(g.faces.size());
    for (std::size_t f = 0; f < g.faces.size(); ++f) {
        const auto& face = g.faces[f];
        const CellId& cell = g.cells[face.cell].id;
        for (std::size_t s = 0; s < 6; ++s) {
            RationalPoint p = vertex_shadow(g.vertices[face.corners[s]].key, cell);
            auto [it, inserted] = point_index.try_emplace(p, 0);
            if (inserted) points.push_back(p);
            face_pts[f][s] = 0;  // filled after reindexing
        }
    }
    std::sort(points.begin(), points.end());
    for (std::size_t i = 0; i < points.size(); ++i) point_index[points[i]] = i;
    for (std::size_t f = 0; f < g.faces.size(); ++f) {
        const CellId& cell = g.cells[g.faces[f].cell].id;
        for (std::size_t s = 0; s < 6; ++s)
            face_pts[f][s] =
                point_index.at(vertex_shadow(g.vertices[g.faces[f].corners[s]].key, cell));
    }

    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& fp : face_pts) {
        for (std::size_t s = 0; s < 6; ++s) {
            std::size_t u = fp[s], v = fp[(s + 1) % 6];
            edges.insert({std::min(u, v), std::max(u, v)});
        }
    }

    out << "# hexagonal tiling honeycomb wireframe\n";
    out << "# trace_bound=" << g.trace_bound << " model=" << to_string(model) << "\n";
    out << "# vertices=" << points.size() << " lines=" << edges.size()
        << " faces=" << face_pts.size() << "\n";
    for (const RationalPoint& p : points) {
        BallPoint b = ball_of(p, model);
        out << "v " << fmt_float(b.x) << " " << fmt_float(b.y) << " " << fmt_float(b.z)
            << "\n";
    }
    for (const auto& [u, v] : edges) out << "l " << u + 1 << " " << v + 1 << "\n";
    for (const auto& fp : face_pts) {
        out << "f";
        for (std::size_t s = 0; s < 6; ++s) out << " " << fp[s] + 1;
        out << "\n";
    }
}

void export_centers_json(const std::vector<LatticePoint>& centers, std::int64_t trace_bound,
                         BallModel model, std::ostream& out) {
    out << "{\n";
    out << "\"metadata\":{\"trace_bound\":" << trace_bound << ",\"model\":\""
        << to_string(model) << "\",\"counts\":{\"centers\":" << centers.size() << "}},\n";
    out << "\"centers\":[";
    for (std::size_t i = 0; i < centers.size(); ++i) {
        const LatticePoint& A = centers[i];
        out << (i ? ",\n" : "\n");
        out << "{\"index\":" << i << ",\"matrix\":" << fmt_ints(A)
            << ",\"ball\":" << fmt_ball(ball_of(A, model)) << ",\"trace\":" << trace(A)
            << "}";
    }
    out << "]\n";
    out << "}\n";
}

void export_csv(const std::vector<LatticePoint>& centers, BallModel model,
                std::ostream& out) {
    out << "index,d1,d2,ca,cb,trace,det,x,y,z\n";
    for (std::size_t i = 0; i < centers.size(); ++i) {
        const LatticePoint& A = centers[i];
        BallPoint b = ball_of(A, model);
        out << i << "," << A.d1 << "," << A.d2 << "," << A.c.a << "," << A.c.b << ","
            << trace(A) << "," << det(A) << "," << fmt_float(b.x) << "," << fmt_float(b.y)
            << "," << fmt_float(b.z) << "\n";
    }
}

}  // namespace hex633
