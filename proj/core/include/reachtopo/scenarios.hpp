#pragma once

#include "reachtopo/complexes.hpp"
#include "reachtopo/shapes.hpp"

namespace reachtopo {

// Two points on the upper semicircle whose eps-balls meet in a lens missing the semicircle,
// plus a dense subset covering the semicircle with balls too small to reach the lens.
struct LensCounterexample {
    PointCloud cloud;
    double eps = 0.0;
    double chord = 0.0;
    double lens_distance = 0.0;
    double rho = 0.0;
    int dense_count = 0;
};

LensCounterexample semicircle_lens_counterexample(double eps = 0.5, double chord = 0.984);

// Two points at distance eps inside a unit circle on a diameter, with radius above the nerve
// bound, and a four point cloud with radius below it that still covers the circle.
struct AntipodalTightness {
    double eps = 0.0;
    double bound = 0.0;
    PointCloud above;
    PointCloud below;
};

AntipodalTightness antipodal_tightness(double eps = 0.1, double above_factor = 1.05, double below_radius = 1.3);

// Exact test that the restricted balls B(x_i, r_i) cover the circle of radius R (open arcs).
bool restricted_balls_cover_circle(double R, const PointCloud& cloud);

}  // namespace reachtopo
