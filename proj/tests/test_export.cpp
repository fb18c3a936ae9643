#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hex633/enumeration.hpp"
#include "hex633/export.hpp"

using namespace hex633;

namespace {

std::string dump_json(const HoneycombGraph& g, BallModel m) {
    std::ostringstream os;
    export_json(g, m, os);
    return os.str();
}

std::string dump_obj(const HoneycombGraph& g, BallModel m) {
    std::ostringstream os;
    export_obj(g, m, os);
    return os.str();
}

}  // namespace

TEST_CASE("exports are byte-identical across runs") {
    HoneycombGraph g1 = build_graph(6);
    HoneycombGraph g2 = build_graph(6);
    CHECK(dump_json(g1, BallModel::Klein) == dump_json(g2, BallModel::Klein));
    CHECK(dump_obj(g1, BallModel::Poincare) == dump_obj(g2, BallModel::Poincare));

    std::ostringstream c1, c2;
    export_csv(g1.centers, BallModel::Klein, c1);
    export_csv(g2.centers, BallModel::Klein, c2);
    CHECK(c1.str() == c2.str());
}

TEST_CASE("JSON parses and is self-consistent") {
    HoneycombGraph g = build_graph(6);
    auto doc = nlohmann::json::parse(dump_json(g, BallModel::Poincare));

    CHECK(doc["metadata"]["trace_bound"] == 6);
    CHECK(doc["metadata"]["model"] == "poincare");
    auto counts = doc["metadata"]["counts"];
    CHECK(counts["centers"].get<std::size_t>() == doc["centers"].size());
    CHECK(counts["adjacency"].get<std::size_t>() == doc["adjacency"].size());
    CHECK(counts["cells"].get<std::size_t>() == doc["cells"].size());
    CHECK(counts["vertices"].get<std::size_t>() == doc["vertices"].size());

    for (const auto& c : doc["centers"]) {
        CHECK(c["matrix"].size() == 4);
        CHECK(c["matrix"][0].is_number_integer());
        CHECK(c["ball"].size() == 3);
        double r2 = 0;
        for (double x : c["ball"]) r2 += x * x;
        CHECK(r2 < 1.0);
    }
    for (const auto& v : doc["vertices"]) {
        CHECK(v["num"].size() == 4);
        CHECK(v["num"][0].is_number_integer());
        CHECK(v["den"].is_number_integer());
        CHECK(v["den"] == 3);
        for (const auto& i : v["hexagons"]) CHECK(i.get<std::size_t>() < doc["centers"].size());
        for (const auto& k : v["cells"]) CHECK(k.get<std::size_t>() < doc["cells"].size());
    }
    for (const auto& e : doc["adjacency"]) {
        CHECK(e.size() == 2);
        CHECK(e[0].get<std::size_t>() < doc["centers"].size());
        CHECK(e[1].get<std::size_t>() < doc["centers"].size());
    }
}

TEST_CASE("JSON at T=2: one center, no edges, two cells") {
    HoneycombGraph g = build_graph(2);
    auto doc = nlohmann::json::parse(dump_json(g, BallModel::Klein));
    CHECK(doc["centers"].size() == 1);
    CHECK(doc["adjacency"].size() == 0);
    CHECK(doc["cells"].size() == 2);
    for (const auto& cell : doc["cells"]) {
        CHECK(cell["members"].size() == 1);
        CHECK(cell["members"][0] == 0);
    }
    CHECK(doc["centers"][0]["matrix"] == nlohmann::json::array({1, 1, 0, 0}));
    CHECK(doc["centers"][0]["ball"] == nlohmann::json::array({0.0, 0.0, 0.0}));
}

TEST_CASE("OBJ validates: indices in range, faces 6-sided, no NaN") {
    HoneycombGraph g = build_graph(6);
    std::istringstream in(dump_obj(g, BallModel::Poincare));

    std::size_t n_vertices = 0, n_lines = 0, n_faces = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "#") continue;
        if (tag == "v") {
            double x, y, z;
            REQUIRE(static_cast<bool>(ls >> x >> y >> z));
            CHECK(std::isfinite(x));
            CHECK(std::isfinite(y));
            CHECK(std::isfinite(z));
            CHECK(x * x + y * y + z * z < 1.0);
            ++n_vertices;
        } else if (tag == "l") {
            long long i, j;
            REQUIRE(static_cast<bool>(ls >> i >> j));
            CHECK(i >= 1);
            CHECK(j >= 1);
            CHECK(i <= static_cast<long long>(n_vertices));
            CHECK(j <= static_cast<long long>(n_vertices));
            ++n_lines;
        } else if (tag == "f") {
            std::vector<long long> idx;
            long long k;
            while (ls >> k) idx.push_back(k);
            CHECK(idx.size() == 6);
            for (long long v : idx) {
                CHECK(v >= 1);
                CHECK(v <= static_cast<long long>(n_vertices));
            }
            ++n_faces;
        } else {
            FAIL("unexpected OBJ record: ", line);
        }
    }
    CHECK(n_vertices > 0);
    CHECK(n_lines > 0);
    CHECK(n_faces == g.faces.size());
}

TEST_CASE("CSV format") {
    auto centers = enumerate_centers(4);
    std::ostringstream os;
    export_csv(centers, BallModel::Klein, os);
    std::istringstream in(os.str());
    std::string line;
    REQUIRE(static_cast<bool>(std::getline(in, line)));
    CHECK(line == "index,d1,d2,ca,cb,trace,det,x,y,z");
    REQUIRE(static_cast<bool>(std::getline(in, line)));
    CHECK(line == "0,1,1,0,0,2,1,0,0,0");

    std::size_t rows = 1;
    while (std::getline(in, line)) {
        ++rows;
        // det column is constantly 1
        std::size_t p = 0;
        for (int comma = 0; comma < 6; ++comma) p = line.find(',', p) + 1;
        CHECK(line.substr(p, line.find(',', p) - p) == "1");
    }
    CHECK(rows == centers.size());
}
