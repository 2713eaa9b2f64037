#include <cmath>
#include <numbers>

#include "doctest.h"
#include "reachtopo/sampling.hpp"

using namespace reachtopo;

TEST_CASE("standard models lower-bound the exact ball mass") {
    for (auto shape : {make_circle(1.0), make_sphere(3, 1.0), make_circle(2.0)}) {
        auto m = standard_model(shape);
        for (double e = 0.01; e < m.eps0; e += 0.01)
            CHECK(m.a * std::pow(e, m.b) <= sphere_ball_mass(shape->ambient_dim(), shape->reach(), e) + 1e-12);
    }
    CHECK_THROWS_AS(standard_model(make_square_boundary(2.0)), InvalidArgument);
}

TEST_CASE("Hausdorff distance") {
    auto c = make_circle(1.0);
    auto one = PointCloud{{make_point({1, 0})}, {}};
    auto h = hausdorff_distance(one, *c, 20000, 3);
    CHECK(h.eps == doctest::Approx(0.0));
    CHECK(h.delta == doctest::Approx(2.0).epsilon(1e-3));
    auto noisy = sample_with_noise(*c, 500, 0.05, 8);
    CHECK(hausdorff_distance(noisy, *c, 1000).eps <= 0.05 + 1e-12);
    CHECK_THROWS_AS(hausdorff_distance(one, *c, 10), InvalidArgument);
}

TEST_CASE("covering probability bound") {
    auto m = standard_model(make_circle(1.0));
    CHECK(covering_probability_bound(m, 1000) == doctest::Approx(1 - 1 / (2 * std::log(1000.0))));
    CHECK(covering_radius_lower_limit(m, 1000) == doctest::Approx(2 * std::numbers::pi * std::log(1000.0) / 1000));
}

TEST_CASE("covering simulation") {
    auto m = standard_model(make_circle(1.0));
    auto full = covering_probability_sim(m, 10, 2.0, 20, 1);
    CHECK(full.empirical == 1.0);
    CHECK(full.passes);
    auto low = covering_probability_sim(m, 10, covering_radius_lower_limit(m, 10), 200, 2);
    CHECK(low.passes);
    CHECK_THROWS_AS(covering_probability_sim(m, 1000, 0.01, 10, 1), PreconditionError);
    auto again = covering_probability_sim(m, 10, covering_radius_lower_limit(m, 10), 200, 2);
    CHECK(again.per_trial == low.per_trial);
}

TEST_CASE("covering number bound dominates greedy nets") {
    auto circle = make_circle(1.0);
    auto m = standard_model(circle);
    CHECK(covering_number_bound(m, 0.1) == doctest::Approx(10 * std::numbers::pi));
    const int net = greedy_net_size(*circle, 0.1);
    CHECK(net <= covering_number_bound(m, 0.1));
    CHECK(net >= 15);
    auto sphere = make_sphere(3, 1.0);
    CHECK(greedy_net_size(*sphere, 0.2) <= covering_number_bound(standard_model(sphere), 0.2));
    CHECK(covering_number_bound(m, 1.9) < covering_number_bound(m, 0.5));
}

TEST_CASE("point coverage query") {
    PointList centers{make_point({0, 0}), make_point({1, 0})};
    CHECK(all_points_covered({make_point({0.5, 0})}, centers, 0.6));
    CHECK_FALSE(all_points_covered({make_point({0.5, 0.7})}, centers, 0.6));
    PointList high{make_point({0, 0, 0, 0})};
    CHECK(all_points_covered({make_point({0.1, 0, 0, 0})}, high, 0.2));
}
