#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "reachtopo/geometry.hpp"
#include "reachtopo/grid.hpp"

namespace reachtopo {

struct NonUniqueProjection : PreconditionError {
    using PreconditionError::PreconditionError;
};

enum class Tri { Empty, NonEmpty, Indeterminate };

enum class RestrictedMethod { Auto, ExactArcs, ExactCaps, ExactSegments, ConstrainedOpt, GridScan };

std::string to_string(RestrictedMethod m);
RestrictedMethod restricted_method_from_string(const std::string& s);

struct Box {
    Point lo;
    Point hi;
};

struct PointCloud {
    PointList points;
    std::vector<double> radii;

    bool has_radii() const { return !radii.empty(); }
    void validate() const;
};

class Shape {
public:
    virtual ~Shape() = default;

    virtual std::string name() const = 0;
    virtual int ambient_dim() const = 0;
    virtual double distance_to(const Point& x) const = 0;
    // All nearest points whose distance is within tol of the minimum (deduplicated).
    virtual PointList nearest_set(const Point& x, double tol) const = 0;
    virtual double reach() const = 0;
    virtual std::vector<int> betti() const = 0;
    virtual Box bounding_box() const = 0;
    virtual double intrinsic_measure() const = 0;
    virtual Point sample_point(std::mt19937_64& rng) const = 0;
    // Unit normal at a point of the shape, used by the noise model.
    virtual Point normal_at(const Point& p, std::mt19937_64& rng) const = 0;
    virtual std::vector<RestrictedMethod> restricted_methods() const = 0;
    virtual Tri restricted_intersection(const PointList& centers, const std::vector<double>& radii,
                                        RestrictedMethod method) const;

    Point project(const Point& x) const;
    bool contains(const Point& x, double tol = 1e-9) const { return distance_to(x) <= tol; }
    void check_dim(const Point& x) const;
    RestrictedMethod resolve(RestrictedMethod m) const;
};

using ShapePtr = std::shared_ptr<const Shape>;

// S^{d-1} of radius R centered at the origin of R^d; d = 2 is reported as "circle".
ShapePtr make_sphere(int d, double R);
ShapePtr make_circle(double R);
// Upper half circle {x : |x| = R, x_2 >= 0} including both endpoints.
ShapePtr make_semicircle(double R);
ShapePtr make_segment(const Point& a, const Point& b);
// Boundary of the axis-aligned square [-side/2, side/2]^2.
ShapePtr make_square_boundary(double side);
// Two unit segments from the origin with directions at angle 0 and alpha.
ShapePtr make_two_segments(double alpha);
ShapePtr make_grid_shape(const GridField& occupancy);

ShapePtr make_shape(const std::string& spec);

struct GradientEstimate {
    Point point;
    PointList nearest_set;
    Point center;
    double distance = 0.0;
    double grad_norm = 0.0;
};

GradientEstimate generalized_gradient(const Shape& shape, const Point& x, double tol = 1e-6);

PointCloud sample_uniform(const Shape& shape, int n, std::uint64_t seed);
PointCloud sample_with_noise(const Shape& shape, int n, double eps, std::uint64_t seed);

// Occupancy of {x : d(x, X) < r} on a grid with `resolution` cells along the longest side.
GridField offset_field(const Shape& shape, double r, int resolution);
// (((X^r)^c)^s)^c on the same grid layout as offset_field(shape, r, resolution).
GridField double_offset_field(const Shape& shape, double r, double s, int resolution);

struct MuReachEstimate {
    double value = 0.0;
    bool unbounded = false;
    bool censored = false;
    double spacing = 0.0;
    Point witness;
};

MuReachEstimate estimate_mu_reach(const Shape& shape, double mu, int resolution, double pad = -1.0);

std::uint64_t derive_seed(std::uint64_t master, const std::string& stream, std::uint64_t index = 0);

}  // namespace reachtopo
