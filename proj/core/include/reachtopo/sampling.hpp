#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "reachtopo/shapes.hpp"

namespace reachtopo {

// Lower bound P(B(x, e)) >= a e^b for the uniform distribution on the shape, e in (0, eps0).
struct SamplingModel {
    ShapePtr shape;
    double a = 0.0;
    double b = 0.0;
    double eps0 = 0.0;

    void validate() const;
};

// Circle of radius R: a = 1/(pi R), b = 1. Sphere S^2 of radius R: a = 1/(4 R^2), b = 2.
// Both with eps0 = 2R (the diameter).
SamplingModel standard_model(const ShapePtr& shape);

// Exact uniform mass of B(x, e) for x on a circle or S^2 of radius R.
double sphere_ball_mass(int ambient_dim, double R, double e);

struct HausdorffReport {
    double eps = 0.0;    // max over samples of the distance to the shape
    double delta = 0.0;  // max over reference points of the distance to the samples
    double value = 0.0;
    int reference_n = 0;
};

HausdorffReport hausdorff_distance(const PointCloud& cloud, const Shape& shape, int reference_n,
                                   std::uint64_t seed = 1);

// Deterministic reference points on the shape with spacing about `spacing`
// (regular for circles and spheres, seeded uniform samples otherwise).
PointList reference_points(const Shape& shape, double spacing, std::uint64_t seed = 7);

struct CoveringReport {
    int n = 0;
    int trials = 0;
    double r_min = 0.0;
    double r_lower_limit = 0.0;
    int covered = 0;
    double empirical = 0.0;
    double bound = 0.0;
    double sigma = 0.0;
    bool passes = false;
    int reference_points = 0;
    std::vector<char> per_trial;
};

double covering_radius_lower_limit(const SamplingModel& model, int n);
double covering_probability_bound(const SamplingModel& model, int n);

// Constant radii r_min for every sample; throws PreconditionError outside
// [2 (log n / (a n))^(1/b), 2 eps0].
CoveringReport covering_probability_sim(const SamplingModel& model, int n, double r_min, int trials,
                                        std::uint64_t seed);

double covering_number_bound(const SamplingModel& model, double eps);
// Size of a greedy 2 eps separated net over dense reference points of the shape.
int greedy_net_size(const Shape& shape, double eps);

// True iff every target lies within distance r of some center.
bool all_points_covered(const PointList& targets, const PointList& centers, double r);

}  // namespace reachtopo
