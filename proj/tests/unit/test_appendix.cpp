#include <cmath>

#include "doctest.h"
#include "reachtopo/appendix_oracles.hpp"

using namespace reachtopo;

TEST_CASE("chord projection is an equality") {
    auto circle = make_circle(1.0);
    for (double theta : {0.2, 0.9}) {
        PointList pts{make_point({std::cos(theta), std::sin(theta)}), make_point({std::cos(theta), -std::sin(theta)})};
        auto c = segment_projection_bound(*circle, pts, {{0.5, 0.5}});
        REQUIRE(c.admissible);
        CHECK(c.checks[0].lhs == doctest::Approx(1 - std::cos(theta)));
        CHECK(c.checks[0].rhs == doctest::Approx(1 - std::cos(theta)));
    }
}

TEST_CASE("coincident points on the set") {
    auto circle = make_circle(1.0);
    Point p = make_point({0, 1});
    auto c = segment_projection_bound(*circle, {p, p}, {{0.3, 0.7}});
    REQUIRE(c.admissible);
    CHECK(c.checks[0].lhs == doctest::Approx(0.0));
    CHECK(c.checks[0].rhs == doctest::Approx(0.0));
}

TEST_CASE("inner product bound worked example") {
    auto circle = make_circle(1.0);
    auto c = federer_inner_product_bound(*circle, make_point({0, 1}), make_point({1.5, 0}));
    REQUIRE(c.admissible);
    CHECK(c.checks[0].rhs == doctest::Approx(0.5));
    CHECK(c.checks[0].lhs == doctest::Approx(-0.5));
    auto on_set = federer_inner_product_bound(*circle, make_point({0.5, 0}), make_point({0, 1}));
    CHECK(on_set.checks[0].rhs == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("projection point bound reduces to the distance on the set") {
    auto circle = make_circle(1.0);
    Point x = make_point({0, 1}), y = make_point({1, 0});
    auto c = projection_point_bound(*circle, x, y);
    REQUIRE(c.admissible);
    CHECK(c.checks[0].lhs == doctest::Approx(std::sqrt(2.0)));
    CHECK(c.checks[0].rhs == doctest::Approx(std::sqrt(2.0)));
    auto same = projection_point_bound(*circle, x, x);
    CHECK(same.checks[0].margin() == doctest::Approx(0.0));
}

TEST_CASE("close projection with u = x on the set") {
    auto sphere = make_sphere(3, 1.0);
    Point x = make_point({0, 0, 1});
    auto c = close_projection_bound(*sphere, x, x);
    REQUIRE(c.admissible);
    for (auto& chk : c.checks) CHECK(chk.margin() >= -1e-12);
}

TEST_CASE("center projection of a midpoint of nearby circle points") {
    auto circle = make_circle(1.0);
    Point x = make_point({1, 0});
    PointList pts{make_point({std::cos(0.2), std::sin(0.2)}), make_point({std::cos(0.3), std::sin(0.3)})};
    auto c = center_projection_bound(*circle, x, pts, {{0.5, 0.5}});
    REQUIRE(c.admissible);
    for (auto& chk : c.checks) CHECK(chk.margin() >= -1e-12);
    auto all_x = center_projection_bound(*circle, x, {x, x}, {{0.5, 0.5}});
    REQUIRE(all_x.admissible);
    CHECK(all_x.checks[0].lhs == doctest::Approx(0.0));
}

TEST_CASE("simplex cover for a singleton on the set") {
    auto circle = make_circle(1.0);
    PointList cloud{make_point({1, 0}), make_point({0, 1}), make_point({-1, 0})};
    auto c = simplex_cover_bounds(*circle, cloud, {0}, {0});
    REQUIRE(c.admissible);
    for (auto& chk : c.checks) CHECK(chk.margin() >= -1e-12);
}

TEST_CASE("inadmissible inputs are rejected, not counted") {
    auto circle = make_circle(1.0);
    CHECK_FALSE(federer_inner_product_bound(*circle, make_point({0, 0}), make_point({1, 0})).admissible);
    CHECK_FALSE(projection_point_bound(*circle, make_point({0.5, 0}), make_point({0, 0})).admissible);
}

TEST_CASE("oracles hold on moderate random batches") {
    auto circle = make_circle(1.0);
    auto sphere = make_sphere(3, 1.0);
    for (auto kind : all_oracles())
        for (const Shape* s : {circle.get(), sphere.get()}) {
            auto sum = run_oracle(kind, *s, 2000, 77);
            CHECK(sum.cases == 2000);
            CHECK(sum.violations == 0);
        }
    CHECK(oracle_from_string(to_string(OracleKind::CloseProjection)) == OracleKind::CloseProjection);
}

TEST_CASE("oracle runs are reproducible") {
    auto circle = make_circle(1.0);
    auto a = run_oracle(OracleKind::CenterProjection, *circle, 500, 5);
    auto b = run_oracle(OracleKind::CenterProjection, *circle, 500, 5);
    CHECK(a.attempts == b.attempts);
    CHECK(a.worst_margin == b.worst_margin);
}

TEST_CASE("equality configurations are tight") {
    auto eq = equality_configurations();
    CHECK(eq.size() >= 5);
    for (auto& chk : eq) CHECK(std::abs(chk.margin()) <= 1e-9);
}
