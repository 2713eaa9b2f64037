#include <cmath>
#include <numbers>

#include "doctest.h"
#include "reachtopo/complexes.hpp"
#include "reachtopo/homology.hpp"
#include "reachtopo/scenarios.hpp"

using namespace reachtopo;

namespace {

PointCloud triangle(double r) {
    const double h = std::sqrt(3.0) / 2;
    return {{make_point({0, 0}), make_point({1, 0}), make_point({0.5, h})}, {r, r, r}};
}

// d+1 points at distance 1 - eps from the origin forming a regular simplex.
PointCloud regular_simplex(int d, double eps, double r) {
    PointCloud c;
    Eigen::MatrixXd v = Eigen::MatrixXd::Identity(d + 1, d + 1);
    v.rowwise() -= v.colwise().mean();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(v, Eigen::ComputeThinU);
    Eigen::MatrixXd coords = svd.matrixU().leftCols(d) * svd.singularValues().head(d).asDiagonal();
    for (int i = 0; i <= d; ++i) {
        Point p = coords.row(i).transpose();
        c.points.push_back(p / p.norm() * (1.0 - eps));
        c.radii.push_back(r);
    }
    return c;
}

}  // namespace

TEST_CASE("Rips on an equilateral triangle") {
    auto full = build_rips(triangle(0.6), 2);
    CHECK(full.contains({0, 1, 2}));
    CHECK(full.simplices.size() == 7);
    // |x0 - x1| = 1 exactly, so radii 0.5 make the open balls tangent
    auto bare = build_rips(triangle(0.5), 2);
    CHECK_FALSE(bare.contains({0, 1}));
    CHECK_FALSE(bare.contains({0, 1, 2}));
}

TEST_CASE("Cech triangle needs the circumradius") {
    CHECK_FALSE(build_cech_ambient(triangle(0.55), 2).contains({0, 1, 2}));
    CHECK(build_cech_ambient(triangle(0.55), 2).contains({0, 1}));
    CHECK(build_cech_ambient(triangle(0.58), 2).contains({0, 1, 2}));
}

TEST_CASE("collinear Cech") {
    PointCloud c{{make_point({0}), make_point({1}), make_point({2})}, {0.6, 0.6, 0.6}};
    auto k = build_cech_ambient(c, 2);
    CHECK(k.contains({0, 1}));
    CHECK(k.contains({1, 2}));
    CHECK_FALSE(k.contains({0, 2}));
    CHECK_FALSE(k.contains({0, 1, 2}));
    PointCloud one{{make_point({4, 4})}, {1.0}};
    CHECK(build_cech_ambient(one, 2).simplices.size() == 1);
}

TEST_CASE("regular simplex above the Rips radius bound is a full simplex") {
    for (int d : {2, 3, 4}) {
        const double eps = 0.1;
        const double r = std::sqrt((d + 1.0) / (2.0 * d)) * (1.0 - eps) * 1.01;
        auto rips = build_rips(regular_simplex(d, eps, r), d);
        CHECK(rips.count(d) == 1);
        auto cech = build_cech_ambient(regular_simplex(d, eps, (1.0 - eps) * 1.01), d);
        CHECK(cech.count(d) == 1);
        CHECK(betti_simplicial(cech, d - 1)[0] == 1);
    }
}

TEST_CASE("restricted Cech on a circle") {
    auto circle = make_circle(1.0);
    PointCloud c{{make_point({1, 0}), make_point({0, 1})}, {1.0, 1.0}};
    CHECK(build_cech_restricted(c, *circle, 1).contains({0, 1}));
    PointCloud far{{make_point({1, 0}), make_point({-1, 0})}, {1.0, 1.0}};
    CHECK_FALSE(build_cech_restricted(far, *circle, 1).contains({0, 1}));
    PointCloud empty{{make_point({0.2, 0}), make_point({1, 0})}, {0.5, 0.5}};
    CHECK_THROWS_AS(build_cech_restricted(empty, *circle, 1), PreconditionError);
}

TEST_CASE("restricted methods agree on the sphere") {
    auto sphere = make_sphere(3, 1.0);
    auto cloud = sample_with_noise(*sphere, 12, 0.1, 4);
    for (auto& p : cloud.points) cloud.radii.push_back(0.7);
    auto caps = build_cech_restricted(cloud, *sphere, 3, RestrictedMethod::ExactCaps);
    RestrictedBuildStats st;
    auto opt = build_cech_restricted(cloud, *sphere, 3, RestrictedMethod::ConstrainedOpt, &st);
    if (st.indeterminate == 0) CHECK(caps.simplices == opt.simplices);
    CHECK(is_subcomplex(opt, caps));
}

TEST_CASE("inclusions on random clouds") {
    for (int s = 0; s < 20; ++s) {
        auto cloud = sample_with_noise(*make_circle(1.0), 15, 0.2, 100 + s);
        cloud.radii.assign(15, 0.35);
        auto cech = build_cech_ambient(cloud, 3);
        auto rips = build_rips(cloud, 3);
        CHECK(is_subcomplex(cech, rips));
        auto big = cloud;
        big.radii.assign(15, 0.35 * std::sqrt(4.0 / 3.0));
        CHECK(is_subcomplex(rips, build_cech_ambient(big, 3)));
        CHECK(is_subcomplex(rips, rips));
    }
}

TEST_CASE("complex serialization round trip and validation") {
    auto k = build_rips(triangle(0.6), 2);
    auto back = parse_complex(serialize_complex(k));
    CHECK(back.simplices == k.simplices);
    CHECK(back.n_vertices == 3);
    CHECK_THROWS_AS(make_complex(3, 2, {{0}, {1}, {0, 1, 2}}), InvalidArgument);
    CHECK_THROWS_AS(parse_complex("nonsense"), InvalidArgument);
}

TEST_CASE("semicircle lens counterexample") {
    auto ex = semicircle_lens_counterexample();
    CHECK(ex.lens_distance > 0);
    auto b = betti_simplicial(build_cech_ambient(ex.cloud, 3), 2);
    CHECK(b[0] == 1);
    CHECK(b[1] == 1);
}

TEST_CASE("antipodal tightness") {
    auto t = antipodal_tightness();
    CHECK(t.bound == doctest::Approx(std::sqrt(1 + 0.81)));
    auto circle = make_circle(1.0);
    CHECK(betti_simplicial(build_cech_restricted(t.above, *circle, 2), 1) == std::vector<int>{1, 0});
    CHECK(restricted_balls_cover_circle(1.0, t.above));
    CHECK(betti_simplicial(build_cech_restricted(t.below, *circle, 2), 1) == std::vector<int>{1, 1});
    CHECK(restricted_balls_cover_circle(1.0, t.below));
    PointCloud sparse{{make_point({1, 0}), make_point({-1, 0})}, {0.5, 0.5}};
    CHECK_FALSE(restricted_balls_cover_circle(1.0, sparse));
}
