#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace reachtopo {

using Point = Eigen::VectorXd;
using PointList = std::vector<Point>;

struct InvalidArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when a query violates a documented precondition (exit code 2 in the CLI).
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Point make_point(std::initializer_list<double> coords);

struct ConvexCombination {
    std::vector<double> weights;

    void validate(std::size_t expected_size, double tol = 1e-12) const;
};

struct MinScaledBall {
    Point center;
    double value = 0.0;
    double certified_tol = 0.0;
};

struct IdentitySides {
    double lhs = 0.0;
    double rhs = 0.0;
};

// ||sum l_i x_i - x|| computed directly and through the pairwise expansion
// sum l_i ||x_i - x||^2 - sum_{i<j} l_i l_j ||x_i - x_j||^2.
IdentitySides convex_combination_identity(const Point& x, const PointList& points,
                                          const ConvexCombination& comb);

// argmin_y max_i ||x_i - y|| / r_i.
MinScaledBall min_scaled_ball(const PointList& points, const std::vector<double>& radii,
                              double tol = 1e-9);

// Open-ball semantics: true iff the minimax value is below 1 - margin.
bool balls_have_common_point(const PointList& points, const std::vector<double>& radii,
                             double margin = 1e-7);

double max_scaled_distance(const PointList& points, const std::vector<double>& radii,
                           const Point& y);

Point convex_combine(const PointList& points, const std::vector<double>& weights);

void check_same_dimension(const PointList& points);

}  // namespace reachtopo
