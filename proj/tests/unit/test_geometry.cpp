#include <cmath>
#include <random>

#include "doctest.h"
#include "reachtopo/geometry.hpp"

using namespace reachtopo;

TEST_CASE("convex combination identity on a symmetric pair") {
    auto s = convex_combination_identity(make_point({0, 1}), {make_point({-1, 0}), make_point({1, 0})}, {{0.5, 0.5}});
    CHECK(s.lhs == doctest::Approx(1.0));
    CHECK(s.rhs == doctest::Approx(1.0));
}

TEST_CASE("convex combination identity with one point") {
    auto s = convex_combination_identity(make_point({3, -1}), {make_point({0, 3})}, {{1.0}});
    CHECK(s.lhs == doctest::Approx(5.0));
    CHECK(s.rhs == doctest::Approx(5.0));
}

TEST_CASE("convex combination identity matches direct evaluation in R^3") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> U(-2, 2), W(0.1, 1);
    for (int t = 0; t < 200; ++t) {
        PointList pts;
        std::vector<double> w;
        double total = 0;
        for (int i = 0; i < 4; ++i) {
            pts.push_back(make_point({U(rng), U(rng), U(rng)}));
            w.push_back(W(rng));
            total += w.back();
        }
        for (auto& x : w) x /= total;
        const Point x = make_point({U(rng), U(rng), U(rng)});
        Point u = Point::Zero(3);
        for (int i = 0; i < 4; ++i) u += w[i] * pts[i];
        auto s = convex_combination_identity(x, pts, {w});
        CHECK(s.lhs == doctest::Approx((u - x).norm()).epsilon(1e-9));
        CHECK(s.rhs == doctest::Approx((u - x).norm()).epsilon(1e-9));
    }
}

TEST_CASE("convex combination rejects bad weights") {
    const ConvexCombination heavy{{0.7, 0.7}}, negative{{1.2, -0.2}}, short_list{{1.0}};
    CHECK_THROWS_AS(heavy.validate(2), InvalidArgument);
    CHECK_THROWS_AS(negative.validate(2), InvalidArgument);
    CHECK_THROWS_AS(short_list.validate(2), InvalidArgument);
}

TEST_CASE("min scaled ball known values") {
    auto a = min_scaled_ball({make_point({-1}), make_point({1})}, {1, 1});
    CHECK(a.center[0] == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(a.value == doctest::Approx(1.0));

    const double h = std::sqrt(3.0) / 2;
    auto b = min_scaled_ball({make_point({0, 0}), make_point({1, 0}), make_point({0.5, h})}, {1, 1, 1});
    CHECK(b.value == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-9));
    CHECK(b.certified_tol <= 1e-9);

    auto c = min_scaled_ball({make_point({2, 3})}, {5});
    CHECK(c.value == doctest::Approx(0.0));
    CHECK((c.center - make_point({2, 3})).norm() < 1e-12);
}

TEST_CASE("min scaled ball with unequal radii divides the segment by the radius ratio") {
    auto m = min_scaled_ball({make_point({0, 0}), make_point({3, 0})}, {1, 2});
    CHECK(m.value == doctest::Approx(1.0));
    CHECK(m.center[0] == doctest::Approx(1.0));
}

TEST_CASE("min scaled ball beats random probes") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> U(-1, 1), R(0.2, 2);
    std::normal_distribution<double> N;
    for (int t = 0; t < 100; ++t) {
        PointList pts;
        std::vector<double> rs;
        for (int i = 0; i < 7; ++i) {
            pts.push_back(make_point({U(rng), U(rng)}));
            rs.push_back(R(rng));
        }
        auto m = min_scaled_ball(pts, rs);
        for (int k = 0; k < 200; ++k) {
            Point y = m.center + 0.05 * make_point({N(rng), N(rng)});
            CHECK(max_scaled_distance(pts, rs, y) >= m.value - 1e-9);
        }
    }
}

TEST_CASE("common point uses open balls") {
    CHECK(balls_have_common_point({make_point({0}), make_point({1.9})}, {1, 1}));
    CHECK_FALSE(balls_have_common_point({make_point({0}), make_point({2.0})}, {1, 1}));
}

TEST_CASE("pairwise intersecting balls meet after the Jung scaling") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> U(0, 2), R(0.5, 1.5);
    for (int t = 0; t < 300; ++t) {
        PointList pts;
        std::vector<double> rs;
        for (int i = 0; i < 3; ++i) {
            pts.push_back(make_point({U(rng), U(rng)}));
            rs.push_back(R(rng));
        }
        bool pairwise = true;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) pairwise = pairwise && (pts[i] - pts[j]).norm() < rs[i] + rs[j];
        if (!pairwise) continue;
        for (auto& r : rs) r *= std::sqrt(4.0 / 3.0);
        CHECK(balls_have_common_point(pts, rs, 0.0));
    }
}

TEST_CASE("common point is monotone in the radii") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> U(0, 2), R(0.3, 1.5), G(1.0, 1.5);
    for (int t = 0; t < 300; ++t) {
        PointList pts;
        std::vector<double> rs;
        for (int i = 0; i < 4; ++i) {
            pts.push_back(make_point({U(rng), U(rng), U(rng)}));
            rs.push_back(R(rng));
        }
        if (!balls_have_common_point(pts, rs)) continue;
        rs[t % 4] *= G(rng);
        CHECK(balls_have_common_point(pts, rs));
    }
}

TEST_CASE("geometry input validation") {
    CHECK_THROWS_AS(min_scaled_ball({}, {}), InvalidArgument);
    CHECK_THROWS_AS(min_scaled_ball({make_point({0})}, {0.0}), InvalidArgument);
    CHECK_THROWS_AS(min_scaled_ball({make_point({0}), make_point({0, 1})}, {1, 1}), InvalidArgument);
}
