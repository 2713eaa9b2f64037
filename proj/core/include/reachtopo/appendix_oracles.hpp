#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "reachtopo/shapes.hpp"

namespace reachtopo {

// One evaluated bound: lhs <= rhs is expected, margin = rhs - lhs.
struct BoundCheck {
    std::string label;
    double lhs = 0.0;
    double rhs = 0.0;

    double margin() const { return rhs - lhs; }
};

struct InequalityCase {
    bool admissible = true;
    std::string reason;
    std::vector<BoundCheck> checks;
    // Evaluated for the record only; never counted as violations.
    std::vector<BoundCheck> logged;

    double worst_margin() const;
};

// Squared-distance identity for convex combinations; the check holds |direct - expansion| <= 0.
InequalityCase convex_combination_identity_case(const Point& x, const PointList& points,
                                                const ConvexCombination& comb);

// Distance from a convex combination of nearby points to its projection.
InequalityCase segment_projection_bound(const Shape& shape, const PointList& points,
                                        const ConvexCombination& comb);

// Lower bound on <y - pi(y), pi(y) - x>; the alternative numerator with d(x) is logged.
InequalityCase federer_inner_product_bound(const Shape& shape, const Point& x, const Point& y);

// Upper bound on ||x - pi(y)|| in terms of ||x - y|| and the distances to the set.
InequalityCase projection_point_bound(const Shape& shape, const Point& x, const Point& y);

// Chained upper bounds on ||x - pi(u)|| when ||x - u|| <= tau - d(x).
InequalityCase close_projection_bound(const Shape& shape, const Point& x, const Point& u);

// Bounds on ||x - pi(u)|| for u a convex combination of points close to x.
InequalityCase center_projection_bound(const Shape& shape, const Point& x, const PointList& points,
                                       const ConvexCombination& comb);

// Distance bounds for the sample nearest to the projected enclosing-ball center of a simplex,
// and for a face of it. `face` lists positions inside `simplex`.
InequalityCase simplex_cover_bounds(const Shape& shape, const PointList& cloud, const std::vector<int>& simplex,
                                    const std::vector<int>& face);

enum class OracleKind {
    ConvexCombinationIdentity,
    SegmentProjection,
    FedererInnerProduct,
    ProjectionPoint,
    CloseProjection,
    CenterProjection,
    SimplexCover,
};

std::string to_string(OracleKind k);
OracleKind oracle_from_string(const std::string& s);
std::vector<OracleKind> all_oracles();

struct OracleSummary {
    std::string oracle;
    std::string shape;
    long cases = 0;
    long attempts = 0;
    long violations = 0;
    double worst_margin = 0.0;
    std::map<std::string, long> logged_violations;
    std::map<std::string, double> logged_worst;
    std::map<std::string, long> checks_evaluated;
};

// Rejection-samples `cases` admissible random configurations near the shape (a sphere or circle
// centered at the origin) and counts checks with margin < -tolerance.
OracleSummary run_oracle(OracleKind kind, const Shape& shape, long cases, std::uint64_t seed,
                         double tolerance = 1e-9);

// Configurations where the bounds are attained; each check should have |margin| <= 1e-9.
std::vector<BoundCheck> equality_configurations();

}  // namespace reachtopo
