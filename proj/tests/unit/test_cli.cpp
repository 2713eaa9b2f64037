#include <cstdio>
#include <filesystem>

#include "cli_io.hpp"
#include "commands.hpp"
#include "doctest.h"

using namespace reachtopo;
using namespace reachtopo::cli;

TEST_CASE("lemma aliases") {
    CHECK(resolve_lemma("a1") == "convex-combination-identity");
    CHECK(resolve_lemma("A2") == "segment-projection");
    CHECK(resolve_lemma("federer") == "federer-inner-product");
    CHECK(resolve_lemma("a4") == "projection-point");
    CHECK(resolve_lemma("a5") == "close-projection");
    CHECK(resolve_lemma("a6") == "center-projection");
    CHECK(resolve_lemma("d3") == "simplex-cover");
    CHECK(resolve_lemma("simplex-cover") == "simplex-cover");
    CHECK_THROWS_AS(resolve_lemma("a3"), InvalidArgument);
}

TEST_CASE("point file parsing") {
    auto c = parse_point_text("# header\n0 1 0.5\n\n1 2 0.25\n", true);
    REQUIRE(c.points.size() == 2);
    CHECK(c.points[1][1] == 2.0);
    CHECK(c.radii == std::vector<double>{0.5, 0.25});
    CHECK(parse_point_text("1 2 3\n", false).points[0].size() == 3);
    CHECK_THROWS_AS(parse_point_text("1 2\n3\n", false), InvalidArgument);
    CHECK_THROWS_AS(parse_point_text("1 x\n", false), InvalidArgument);
    CHECK_THROWS_AS(parse_point_text("# nothing\n", false), InvalidArgument);
}

TEST_CASE("hash helpers") {
    CHECK(hex64(fnv1a("")) == "cbf29ce484222325");
    CHECK(hex64(fnv1a("a")) == "af63dc4c8601ec8c");
}

TEST_CASE("reconstruct reports are deterministic and match on a dense circle") {
    ReconstructOptions o;
    o.n = 120;
    o.eps = 0.02;
    o.radius = 0.3;
    o.seed = 4;
    o.reference_n = 2000;
    auto a = run_reconstruct(o), b = run_reconstruct(o);
    CHECK(a.text == b.text);
    auto j = Json::parse(a.text);
    CHECK(j["match"] == true);
    CHECK(j["seed"] == 4);
    CHECK(j["samples"]["points"].size() == 120);
    o.seed = 5;
    CHECK(Json::parse(run_reconstruct(o).text)["input_hash"] != j["input_hash"]);
}

TEST_CASE("reconstruct scenarios") {
    ReconstructOptions o;
    o.scenario = "lens";
    auto lens = Json::parse(run_reconstruct(o).text);
    CHECK(lens["betti_computed"] == Json::array({1, 1}));
    CHECK(lens["betti_expected"] == Json::array({1, 0}));
    CHECK(lens["match"] == false);
    o.scenario = "tightness";
    auto t = Json::parse(run_reconstruct(o).text);
    CHECK(t["betti_computed"] == Json::array({1, 0}));
    CHECK(t["scenario"]["restricted_balls_cover"] == true);
}

TEST_CASE("reconstruct reads point and radii files") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto pts = (dir / "reachtopo_test_points.txt").string();
    const auto rad = (dir / "reachtopo_test_radii.txt").string();
    std::string text, radii;
    for (int i = 0; i < 12; ++i) {
        const double t = 2 * 3.141592653589793 * i / 12;
        text += std::to_string(std::cos(t)) + " " + std::to_string(std::sin(t)) + "\n";
        radii += "0.4\n";
    }
    write_file(pts, text);
    write_file(rad, radii);
    ReconstructOptions o;
    o.points_file = pts;
    o.radii_file = rad;
    o.reference_n = 1000;
    auto j = Json::parse(run_reconstruct(o).text);
    CHECK(j["betti_computed"] == Json::array({1, 1}));
    std::filesystem::remove(pts);
    std::filesystem::remove(rad);
}

TEST_CASE("constants command") {
    ConstantsOptions o;
    o.kind = "rips";
    auto j = Json::parse(run_constants(o).text);
    CHECK(j["value"].get<double>() == doctest::Approx(0.03982).epsilon(0.02));
    CHECK(j["convention"] == "d->infinity");
    o.dim = "0";
    CHECK_THROWS_AS(run_constants(o), InvalidArgument);
}

TEST_CASE("offsets precondition surfaces as an exception") {
    OffsetsOptions o;
    o.r = 0.6;
    o.resolution = 128;
    CHECK_THROWS_AS(run_offsets(o), PreconditionError);
    o.r = 0.2;
    o.s = "0.1";
    o.resolution = 256;
    CHECK(Json::parse(run_offsets(o).text)["match"] == true);
}

TEST_CASE("verify and covering commands") {
    VerifyOptions v;
    v.lemma = "a6";
    v.cases = 300;
    auto j = Json::parse(run_verify(v).text);
    CHECK(j["violations"] == 0);
    CHECK(j["oracle"] == "center-projection");
    CoveringOptions c;
    c.trials = 10;
    c.format = "csv";
    auto csv = run_covering(c).text;
    CHECK(csv.rfind("trial,covered,r_min,n\n", 0) == 0);
}

TEST_CASE("complex and betti commands round trip") {
    const auto path = (std::filesystem::temp_directory_path() / "reachtopo_test_complex.txt").string();
    ComplexOptions o;
    o.n = 40;
    o.radius = 0.3;
    write_file(path, run_complex(o).text);
    BettiOptions b;
    b.complex_file = path;
    CHECK(Json::parse(run_betti(b).text)["betti"] == Json::array({1, 1}));
    std::filesystem::remove(path);
}
