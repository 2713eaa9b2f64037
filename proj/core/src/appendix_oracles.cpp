#include "reachtopo/appendix_oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace reachtopo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double tau_of(const Shape& shape) {
    const double t = shape.reach();
    if (!(t > 0) || !std::isfinite(t)) throw InvalidArgument(shape.name() + ": oracle needs finite positive reach");
    return t;
}

InequalityCase reject(std::string why) {
    InequalityCase c;
    c.admissible = false;
    c.reason = std::move(why);
    return c;
}

bool unique_projection(const Shape& shape, const Point& p, Point& out) {
    try {
        out = shape.project(p);
        return true;
    } catch (const NonUniqueProjection&) {
        return false;
    }
}

}  // namespace

double InequalityCase::worst_margin() const {
    double m = kInf;
    for (auto& c : checks) m = std::min(m, c.margin());
    return m;
}

InequalityCase convex_combination_identity_case(const Point& x, const PointList& points,
                                                const ConvexCombination& comb) {
    auto sides = convex_combination_identity(x, points, comb);
    InequalityCase c;
    c.checks.push_back({"identity", std::abs(sides.lhs - sides.rhs), 0.0});
    return c;
}

InequalityCase segment_projection_bound(const Shape& shape, const PointList& points,
                                        const ConvexCombination& comb) {
    const double tau = tau_of(shape);
    comb.validate(points.size());
    std::vector<double> d(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        d[i] = shape.distance_to(points[i]);
        if (!(d[i] < tau)) return reject("d(x_i) >= tau");
    }
    const Point u = convex_combine(points, comb.weights);
    const double du = shape.distance_to(u);
    if (!(du < tau)) return reject("d(u) >= tau");
    Point pu;
    if (!unique_projection(shape, u, pu)) return reject("u has no unique projection");
    double s = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) s += comb.weights[i] * (tau - d[i]) * (tau - d[i]);
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            s -= comb.weights[i] * comb.weights[j] * (points[i] - points[j]).squaredNorm();
    InequalityCase c;
    c.checks.push_back({"projection_distance", (u - pu).norm(), tau - std::sqrt(std::max(s, 0.0))});
    return c;
}

InequalityCase federer_inner_product_bound(const Shape& shape, const Point& x, const Point& y) {
    const double tau = tau_of(shape);
    const double dx = shape.distance_to(x), dy = shape.distance_to(y);
    if (!(dx < tau)) return reject("d(x) >= tau");
    Point px, py;
    if (!unique_projection(shape, x, px) || !unique_projection(shape, y, py))
        return reject("non-unique projection");
    const double inner = (y - py).dot(py - x);
    const double q = (py - x).squaredNorm();
    const double tail = dx * dy * (1.0 - dx / (2.0 * tau));
    InequalityCase c;
    c.checks.push_back({"inner_product", -q * dy / (2.0 * tau) - tail, inner});
    c.logged.push_back({"inner_product_distance_of_x", -q * dx / (2.0 * tau) - tail, inner});
    return c;
}

InequalityCase projection_point_bound(const Shape& shape, const Point& x, const Point& y) {
    const double tau = tau_of(shape);
    const double dx = shape.distance_to(x), dy = shape.distance_to(y);
    if (!(dx < tau) || !(dy < tau)) return reject("distance to the set >= tau");
    Point px, py;
    if (!unique_projection(shape, x, px) || !unique_projection(shape, y, py))
        return reject("non-unique projection");
    const double arg = tau / (tau - dy) * ((x - y).squaredNorm() - dy * (dy - 2.0 * dx + dx * dx / tau));
    InequalityCase c;
    c.checks.push_back({"projection_distance", (x - py).norm(), std::sqrt(std::max(arg, 0.0))});
    if (arg < 0) c.checks.push_back({"bound_argument_nonnegative", 0.0, arg});
    return c;
}

InequalityCase close_projection_bound(const Shape& shape, const Point& x, const Point& u) {
    const double tau = tau_of(shape);
    const double dx = shape.distance_to(x);
    if (!(dx < tau)) return reject("d(x) >= tau");
    if (!((x - u).norm() <= tau - dx)) return reject("||x - u|| > tau - d(x)");
    Point px, pu;
    if (!unique_projection(shape, x, px) || !unique_projection(shape, u, pu))
        return reject("non-unique projection");
    const double E = dx * (2.0 * tau - dx);
    const double r2 = (u - x).squaredNorm();
    const double S = r2 + E;
    const double root = std::sqrt(std::max(tau * tau - S, 0.0));
    const double b1 = std::sqrt(std::max(2.0 * tau * S / (tau + root) - E, 0.0));
    const double b2 = std::sqrt(tau * (2.0 * r2 + E) / (tau + root));
    const double g = std::sqrt(S) + (std::sqrt(2.0) - 1.0) / tau * S;
    const double b3 = std::sqrt(std::max(g * g - E, 0.0));
    const double lhs = (x - pu).norm();
    InequalityCase c;
    c.checks.push_back({"first_bound", lhs, b1});
    c.checks.push_back({"first_below_second", b1, b2});
    c.checks.push_back({"first_below_third", b1, b3});
    return c;
}

InequalityCase center_projection_bound(const Shape& shape, const Point& x, const PointList& points,
                                       const ConvexCombination& comb) {
    const double tau = tau_of(shape);
    comb.validate(points.size());
    const double dx = shape.distance_to(x);
    if (!(dx < tau)) return reject("d(x) >= tau");
    std::vector<double> d(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        d[i] = shape.distance_to(points[i]);
        if (!(d[i] < tau)) return reject("d(x_i) >= tau");
        const double lim = std::sqrt((tau - dx) * (tau - dx) + (tau - d[i]) * (tau - d[i]));
        if (!((x - points[i]).norm() < lim)) return reject("||x - x_i|| above the pairwise limit");
    }
    const Point u = convex_combine(points, comb.weights);
    Point pu;
    if (!unique_projection(shape, u, pu)) return reject("u has no unique projection");
    const auto& w = comb.weights;
    const double Ex = dx * (2.0 * tau - dx);
    double A = 0.0, sum_tau = 0.0, sum_u = 0.0, sum_tx = 0.0, sum_E = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double Ei = d[i] * (2.0 * tau - d[i]);
        A += w[i] * ((points[i] - x).squaredNorm() + Ei);
        sum_tau += w[i] * (tau - d[i]) * (tau - d[i]);
        sum_u += w[i] * (points[i] - u).squaredNorm();
        sum_tx += w[i] * ((tau - d[i]) * (tau - d[i]) - (points[i] - x).squaredNorm());
        sum_E += w[i] * Ei;
    }
    const double lhs = (x - pu).norm();
    const double ru2 = (x - u).squaredNorm();
    InequalityCase c;
    c.checks.push_back({"weighted_bound", lhs, std::sqrt(A)});
    c.checks.push_back({"midpoint_bound", lhs, std::sqrt(2.0 * ru2 + Ex)});
    const bool further = sum_u + sum_E <= ru2 + Ex;
    const double den = sum_tau - sum_u;
    if (further && den > 0) {
        const double v = A - ((tau - dx) * (tau - dx) + sum_tx) * (tau / std::sqrt(den) - 1.0);
        c.checks.push_back({"refined_bound", lhs, std::sqrt(std::max(v, 0.0))});
        if (v < 0) c.checks.push_back({"refined_argument_nonnegative", 0.0, v});
        const double ryz2 = sum_E + sum_u;
        if (ryz2 < tau * tau) {
            const double iv = ru2 + ryz2 - (tau * tau - ru2 - ryz2) * (tau / std::sqrt(tau * tau - ryz2) - 1.0);
            c.logged.push_back({"refined_intermediate", lhs, std::sqrt(std::max(iv, 0.0))});
        }
    }
    return c;
}

InequalityCase simplex_cover_bounds(const Shape& shape, const PointList& cloud, const std::vector<int>& simplex,
                                    const std::vector<int>& face) {
    const double tau = tau_of(shape);
    if (simplex.empty() || face.empty()) throw InvalidArgument("simplex and face must be nonempty");
    struct Center {
        double r = 0.0;
        double eps = 0.0;
        Point proj;
        int nearest = -1;
        double gap = 0.0;
    };
    auto locate = [&](const std::vector<int>& idx, Center& out) {
        PointList pts;
        for (int i : idx) {
            if (i < 0 || i >= static_cast<int>(cloud.size())) throw InvalidArgument("simplex index out of range");
            pts.push_back(cloud[i]);
            out.eps = std::max(out.eps, shape.distance_to(cloud[i]));
        }
        auto ball = min_scaled_ball(pts, std::vector<double>(pts.size(), 1.0));
        out.r = ball.value;
        if (!unique_projection(shape, ball.center, out.proj)) return false;
        double best = kInf;
        for (std::size_t j = 0; j < cloud.size(); ++j) {
            const double dj = (cloud[j] - out.proj).norm();
            if (dj < best) {
                best = dj;
                out.nearest = static_cast<int>(j);
            }
        }
        out.gap = best;
        return true;
    };
    Center s;
    if (!locate(simplex, s)) return reject("enclosing-ball center has no unique projection");
    if (!(s.r < tau - s.eps)) return reject("simplex radius >= tau - eps");
    std::vector<int> fidx;
    for (int p : face) {
        if (p < 0 || p >= static_cast<int>(simplex.size())) throw InvalidArgument("face position out of range");
        fidx.push_back(simplex[p]);
    }
    Center f;
    if (!locate(fidx, f)) return reject("face center has no unique projection");
    const double E = s.eps * (2.0 * tau - s.eps);
    const double R = s.r * s.r + E;
    const double root = std::sqrt(std::max(tau * tau - R, 0.0));
    const double core = 2.0 * tau * R / (tau + root);
    const double g = std::sqrt(R) + (std::sqrt(2.0) - 1.0) / tau * R;
    const Point& ys = cloud[s.nearest];
    double far = 0.0;
    for (int i : simplex) far = std::max(far, (cloud[i] - ys).norm());
    const double item1 = std::sqrt(std::max(core - E, 0.0)) + s.gap;
    const double eps2 = std::max(s.gap, f.gap);
    const double item2 = std::sqrt(core) + 2.0 * eps2;
    InequalityCase c;
    c.checks.push_back({"vertex_to_center_sample", far, item1});
    c.checks.push_back({"vertex_bound_chain", item1, std::sqrt(std::max(g * g - E, 0.0)) + s.gap});
    c.checks.push_back({"face_to_center_sample", (cloud[f.nearest] - ys).norm(), item2});
    c.logged.push_back({"face_bound_chain", item2, g + eps2});
    return c;
}

std::string to_string(OracleKind k) {
    switch (k) {
        case OracleKind::ConvexCombinationIdentity: return "convex-combination-identity";
        case OracleKind::SegmentProjection: return "segment-projection";
        case OracleKind::FedererInnerProduct: return "federer-inner-product";
        case OracleKind::ProjectionPoint: return "projection-point";
        case OracleKind::CloseProjection: return "close-projection";
        case OracleKind::CenterProjection: return "center-projection";
        case OracleKind::SimplexCover: return "simplex-cover";
    }
    return "unknown";
}

std::vector<OracleKind> all_oracles() {
    return {OracleKind::ConvexCombinationIdentity, OracleKind::SegmentProjection, OracleKind::FedererInnerProduct,
            OracleKind::ProjectionPoint,           OracleKind::CloseProjection,   OracleKind::CenterProjection,
            OracleKind::SimplexCover};
}

OracleKind oracle_from_string(const std::string& s) {
    for (auto k : all_oracles())
        if (to_string(k) == s) return k;
    throw InvalidArgument("unknown oracle: " + s);
}

namespace {

struct Sampler {
    const Shape& shape;
    double tau;
    int dim;
    std::mt19937_64 rng;

    double unif(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }
    int pick(int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng); }

    Point gaussian(double scale) {
        std::normal_distribution<double> N(0.0, scale);
        Point p(dim);
        for (int i = 0; i < dim; ++i) p[i] = N(rng);
        return p;
    }
    // A point at distance < maxd * tau from the sphere of radius tau.
    Point near(double maxd) {
        Point s = shape.sample_point(rng);
        return s * (1.0 + unif(-maxd, maxd));
    }
    ConvexCombination weights(int k) {
        std::gamma_distribution<double> G(1.0, 1.0);
        ConvexCombination c;
        double z = 0.0;
        for (int i = 0; i < k; ++i) {
            c.weights.push_back(G(rng) + 1e-12);
            z += c.weights.back();
        }
        for (auto& w : c.weights) w /= z;
        return c;
    }
};

InequalityCase draw(OracleKind kind, Sampler& S) {
    const double tau = S.tau;
    switch (kind) {
        case OracleKind::ConvexCombinationIdentity: {
            const int k = S.pick(1, 5);
            PointList pts;
            for (int i = 0; i < k; ++i) pts.push_back(S.gaussian(tau));
            return convex_combination_identity_case(S.gaussian(tau), pts, S.weights(k));
        }
        case OracleKind::SegmentProjection: {
            const int k = S.pick(1, 4);
            const Point base = S.near(S.unif(0.0, 0.99));
            const double spread = S.unif(0.01, 1.0) * tau;
            PointList pts;
            for (int i = 0; i < k; ++i) pts.push_back(base + S.gaussian(spread));
            return segment_projection_bound(S.shape, pts, S.weights(k));
        }
        case OracleKind::FedererInnerProduct:
            return federer_inner_product_bound(S.shape, S.near(S.unif(0.0, 0.99)), S.near(S.unif(0.0, 0.99)));
        case OracleKind::ProjectionPoint:
            return projection_point_bound(S.shape, S.near(S.unif(0.0, 0.99)), S.near(S.unif(0.0, 0.99)));
        case OracleKind::CloseProjection: {
            const Point x = S.near(S.unif(0.0, 0.99));
            Point dir = S.gaussian(1.0);
            dir /= dir.norm();
            const double reach = tau - S.shape.distance_to(x);
            return close_projection_bound(S.shape, x, x + dir * (S.unif(0.0, 1.0) * reach));
        }
        case OracleKind::CenterProjection: {
            const int k = S.pick(1, 4);
            const Point x = S.near(S.unif(0.0, 0.9));
            const double spread = S.unif(0.01, 1.0) * tau;
            PointList pts;
            for (int i = 0; i < k; ++i) pts.push_back(x + S.gaussian(spread));
            return center_projection_bound(S.shape, x, pts, S.weights(k));
        }
        case OracleKind::SimplexCover: {
            const int n = S.pick(8, 40);
            const double noise = S.unif(0.0, 0.3);
            PointList cloud;
            for (int i = 0; i < n; ++i) cloud.push_back(S.near(noise + 1e-12));
            const int k = S.pick(1, std::min(4, S.dim + 1));
            const int seed_pt = S.pick(0, n - 1);
            std::vector<int> order(n);
            for (int i = 0; i < n; ++i) order[i] = i;
            std::sort(order.begin(), order.end(), [&](int a, int b) {
                return (cloud[a] - cloud[seed_pt]).squaredNorm() < (cloud[b] - cloud[seed_pt]).squaredNorm();
            });
            std::vector<int> simplex(order.begin(), order.begin() + k);
            std::vector<int> face;
            while (face.empty())
                for (int p = 0; p < k; ++p)
                    if (S.pick(0, 1)) face.push_back(p);
            return simplex_cover_bounds(S.shape, cloud, simplex, face);
        }
    }
    throw InvalidArgument("unknown oracle");
}

}  // namespace

OracleSummary run_oracle(OracleKind kind, const Shape& shape, long cases, std::uint64_t seed, double tolerance) {
    if (cases < 1) throw InvalidArgument("cases must be >= 1");
    const double tau = tau_of(shape);
    OracleSummary s;
    s.oracle = to_string(kind);
    s.shape = shape.name();
    s.worst_margin = kInf;
    const long max_attempts = 200 * cases + 1000;
    while (s.cases < cases && s.attempts < max_attempts) {
        Sampler S{shape, tau, shape.ambient_dim(),
                  std::mt19937_64(derive_seed(seed, s.oracle, static_cast<std::uint64_t>(s.attempts)))};
        ++s.attempts;
        InequalityCase c = draw(kind, S);
        if (!c.admissible) continue;
        ++s.cases;
        for (auto& chk : c.checks) {
            ++s.checks_evaluated[chk.label];
            s.worst_margin = std::min(s.worst_margin, chk.margin());
            if (!(chk.margin() >= -tolerance)) ++s.violations;
        }
        for (auto& chk : c.logged) {
            auto it = s.logged_worst.find(chk.label);
            if (it == s.logged_worst.end())
                s.logged_worst[chk.label] = chk.margin();
            else
                it->second = std::min(it->second, chk.margin());
            if (!(chk.margin() >= -tolerance)) ++s.logged_violations[chk.label];
            else s.logged_violations.emplace(chk.label, 0);
        }
    }
    return s;
}

std::vector<BoundCheck> equality_configurations() {
    std::vector<BoundCheck> out;
    auto circle = make_circle(1.0);
    for (double theta : {0.1, 0.7, 1.3}) {
        PointList pts{make_point({std::cos(theta), std::sin(theta)}), make_point({std::cos(theta), -std::sin(theta)})};
        auto c = segment_projection_bound(*circle, pts, ConvexCombination{{0.5, 0.5}});
        auto chk = c.checks.at(0);
        chk.label = "segment_projection_chord";
        out.push_back(chk);
    }
    for (double a : {0.3, 2.0}) {
        Point x = make_point({std::cos(a), std::sin(a)});
        Point y = make_point({1.0, 0.0});
        auto c = projection_point_bound(*circle, x, y);
        auto chk = c.checks.at(0);
        chk.label = "projection_point_on_set";
        out.push_back(chk);
    }
    {
        auto c = federer_inner_product_bound(*circle, make_point({0.0, 0.5}), make_point({0.0, -1.0}));
        auto chk = c.checks.at(0);
        chk.label = "federer_point_on_set";
        out.push_back(chk);
    }
    return out;
}

}  // namespace reachtopo
