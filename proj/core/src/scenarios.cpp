#include "reachtopo/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "reachtopo/conditions.hpp"

namespace reachtopo {

namespace {
constexpr double kPi = std::numbers::pi;
}

LensCounterexample semicircle_lens_counterexample(double eps, double chord) {
    if (!(eps > 0 && eps < 1)) throw InvalidArgument("lens construction needs eps in (0, 1)");
    if (!(chord > eps * std::sqrt(4.0 - eps * eps) && chord < 2.0 * eps))
        throw PreconditionError("chord must lie in (eps sqrt(4 - eps^2), 2 eps)");
    LensCounterexample ex;
    ex.eps = eps;
    ex.chord = chord;
    const double half = chord / 2.0;
    const double h = std::sqrt(1.0 - half * half);
    const Point x1 = make_point({-half, h}), x2 = make_point({half, h});
    auto semi = make_semicircle(1.0);

    // Distance from the semicircle to the lens; 1 - |p| is concave on the unit disk, so the
    // minimum over the lens is attained on its boundary arcs.
    const double w = std::acos(half / eps);
    double dmin = std::numeric_limits<double>::infinity();
    const int steps = 200000;
    for (int s = 0; s <= steps; ++s) {
        const double t = -w + 2.0 * w * s / steps;
        const Point p1 = x2 + eps * make_point({-std::cos(t), std::sin(t)});
        const Point p2 = x1 + eps * make_point({std::cos(t), std::sin(t)});
        dmin = std::min({dmin, semi->distance_to(p1), semi->distance_to(p2)});
    }
    ex.lens_distance = dmin;
    ex.rho = 0.45 * dmin;

    ex.cloud.points = {x1, x2};
    ex.cloud.radii = {eps, eps};
    const int m = static_cast<int>(std::ceil(kPi / ex.rho)) + 1;
    for (int i = 0; i < m; ++i) {
        const double t = kPi * i / (m - 1);
        ex.cloud.points.push_back(make_point({std::cos(t), std::sin(t)}));
        ex.cloud.radii.push_back(ex.rho);
    }
    ex.dense_count = m;
    return ex;
}

AntipodalTightness antipodal_tightness(double eps, double above_factor, double below_radius) {
    if (!(eps > 0 && eps < 1)) throw InvalidArgument("need eps in (0, 1)");
    AntipodalTightness t;
    t.eps = eps;
    t.bound = nerve_radius_bound(1.0, eps);
    const double a = 1.0 - eps;
    t.above.points = {make_point({a, 0.0}), make_point({-a, 0.0})};
    t.above.radii = {above_factor * t.bound, above_factor * t.bound};
    t.below.points = {make_point({a, 0.0}), make_point({0.0, a}), make_point({-a, 0.0}), make_point({0.0, -a})};
    t.below.radii.assign(4, below_radius);
    return t;
}

bool restricted_balls_cover_circle(double R, const PointCloud& cloud) {
    cloud.validate();
    // (center angle, half width) of each open arc.
    std::vector<std::pair<double, double>> arcs;
    for (std::size_t i = 0; i < cloud.points.size(); ++i) {
        const Point& x = cloud.points[i];
        const double r = cloud.radii.at(i);
        const double rho = x.norm();
        if (rho < 1e-300) {
            if (r > R) return true;
            continue;
        }
        const double kappa = (R * R + rho * rho - r * r) / (2.0 * R * rho);
        if (kappa < -1.0) return true;
        if (kappa >= 1.0) continue;
        arcs.push_back({std::atan2(x[1], x[0]), std::acos(kappa)});
    }
    if (arcs.empty()) return false;
    auto inside = [&](double theta) {
        for (auto& [phi, w] : arcs) {
            const double diff = std::remainder(theta - phi, 2.0 * kPi);
            if (std::abs(diff) < w) return true;
        }
        return false;
    };
    // The uncovered set is closed; if nonempty it contains an endpoint of some arc.
    for (auto& [phi, w] : arcs)
        if (!inside(phi - w) || !inside(phi + w)) return false;
    return true;
}

}  // namespace reachtopo
