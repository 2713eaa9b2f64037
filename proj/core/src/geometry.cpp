#include "reachtopo/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace reachtopo {

Point make_point(std::initializer_list<double> coords) {
    Point p(static_cast<Eigen::Index>(coords.size()));
    Eigen::Index i = 0;
    for (double c : coords) p[i++] = c;
    return p;
}

void ConvexCombination::validate(std::size_t expected_size, double tol) const {
    if (weights.size() != expected_size)
        throw InvalidArgument("convex combination: weight count does not match point count");
    double sum = 0.0;
    for (double w : weights) {
        if (!(w >= -tol && w <= 1.0 + tol))
            throw InvalidArgument("convex combination: weight outside [0,1]");
        sum += w;
    }
    if (std::abs(sum - 1.0) > std::max(tol, 1e-12) * static_cast<double>(expected_size))
        throw InvalidArgument("convex combination: weights do not sum to 1");
}

void check_same_dimension(const PointList& points) {
    if (points.empty()) return;
    const auto d = points.front().size();
    if (d < 1) throw InvalidArgument("points must have dimension >= 1");
    for (const auto& p : points) {
        if (p.size() != d) throw InvalidArgument("dimension mismatch between points");
        if (!p.allFinite()) throw InvalidArgument("non-finite coordinate");
    }
}

Point convex_combine(const PointList& points, const std::vector<double>& weights) {
    Point u = Point::Zero(points.front().size());
    for (std::size_t i = 0; i < points.size(); ++i) u += weights[i] * points[i];
    return u;
}

IdentitySides convex_combination_identity(const Point& x, const PointList& points,
                                          const ConvexCombination& comb) {
    if (points.empty()) throw InvalidArgument("identity: empty point list");
    check_same_dimension(points);
    if (x.size() != points.front().size()) throw InvalidArgument("identity: dimension mismatch");
    comb.validate(points.size());
    const auto& l = comb.weights;
    IdentitySides out;
    out.lhs = (convex_combine(points, l) - x).norm();
    double s = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) s += l[i] * (points[i] - x).squaredNorm();
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            s -= l[i] * l[j] * (points[i] - points[j]).squaredNorm();
    out.rhs = std::sqrt(std::max(s, 0.0));
    return out;
}

double max_scaled_distance(const PointList& points, const std::vector<double>& radii,
                           const Point& y) {
    double m = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i)
        m = std::max(m, (points[i] - y).norm() / radii[i]);
    return m;
}

namespace {

struct Problem {
    const PointList& pts;
    std::vector<double> omega;  // 1 / r_i^2
    std::vector<double> rsq;

    double g(const Point& y) const {
        double m = 0.0;
        for (std::size_t i = 0; i < pts.size(); ++i)
            m = std::max(m, omega[i] * (pts[i] - y).squaredNorm());
        return m;
    }

    double g_on(const Point& y, const std::vector<int>& pool) const {
        double m = 0.0;
        for (int i : pool) m = std::max(m, omega[i] * (pts[i] - y).squaredNorm());
        return m;
    }

    // Lagrangian dual: min_y sum w_i omega_i ||y - x_i||^2, attained at the weighted mean.
    double dual(const std::vector<double>& w, Point* argmin = nullptr) const {
        const auto d = pts.front().size();
        Point c = Point::Zero(d);
        double a = 0.0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            c += w[i] * omega[i] * pts[i];
            a += w[i] * omega[i];
        }
        c /= a;
        double v = 0.0;
        for (std::size_t i = 0; i < pts.size(); ++i) v += w[i] * omega[i] * (pts[i] - c).squaredNorm();
        if (argmin) *argmin = c;
        return v;
    }
};

struct Candidate {
    Point y;
    double value = std::numeric_limits<double>::infinity();
    std::vector<int> support;
};

void try_support(const Problem& pb, const std::vector<int>& S, const std::vector<int>& pool,
                 Candidate& best) {
    const auto& pts = pb.pts;
    const int m = static_cast<int>(S.size());
    if (m == 1) {
        double v = pb.g_on(pts[S[0]], pool);
        if (v < best.value) best = {pts[S[0]], v, S};
        return;
    }
    const auto d = pts.front().size();
    const Point& x0 = pts[S[0]];
    Eigen::MatrixXd E(d, m - 1);
    for (int j = 1; j < m; ++j) E.col(j - 1) = pts[S[j]] - x0;
    Eigen::MatrixXd G = E.transpose() * E;
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(m, m);
    Eigen::VectorXd n(m), rho(m);
    for (int i = 0; i < m; ++i) {
        Point z = pts[S[i]] - x0;
        if (i > 0) M.row(i).head(m - 1) = -2.0 * (E.transpose() * z).transpose();
        M(i, m - 1) = 1.0;
        n[i] = z.squaredNorm();
        rho[i] = pb.rsq[S[i]];
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
    lu.setThreshold(1e-12);
    if (lu.rank() < m) return;
    Eigen::VectorXd a0 = lu.solve(-n);
    Eigen::VectorXd a1 = lu.solve(rho);
    Eigen::VectorXd al0 = a0.head(m - 1), al1 = a1.head(m - 1);
    const double u0 = a0[m - 1], u1 = a1[m - 1];
    const double A = al1.dot(G * al1);
    const double B = 2.0 * al0.dot(G * al1) - u1;
    const double C = al0.dot(G * al0) - u0;
    double roots[2];
    int nr = 0;
    const double scale = std::max({std::abs(A), std::abs(B), std::abs(C), 1e-300});
    if (std::abs(A) <= 1e-14 * scale) {
        if (std::abs(B) > 1e-300) roots[nr++] = -C / B;
    } else {
        double disc = B * B - 4.0 * A * C;
        if (disc < 0.0) {
            if (disc < -1e-10 * B * B) return;
            disc = 0.0;
        }
        const double sq = std::sqrt(disc);
        const double q = -0.5 * (B + (B >= 0 ? sq : -sq));
        roots[nr++] = q / A;
        if (q != 0.0) roots[nr++] = C / q;
    }
    for (int r = 0; r < nr; ++r) {
        const double s = roots[r];
        if (!(s >= -1e-12) || !std::isfinite(s)) continue;
        Point y = x0 + E * (al0 + s * al1);
        if (!y.allFinite()) continue;
        double v = pb.g_on(y, pool);
        if (v < best.value) best = {y, v, S};
    }
}

// Multipliers for the candidate's support: sum l_i omega_i (y - x_i) = 0, sum l_i = 1.
bool support_multipliers(const Problem& pb, const Candidate& c, std::vector<double>& w) {
    const auto d = pb.pts.front().size();
    const int m = static_cast<int>(c.support.size());
    w.assign(pb.pts.size(), 0.0);
    if (m == 1) {
        w[c.support[0]] = 1.0;
        return true;
    }
    Eigen::MatrixXd K(d + 1, m);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(d + 1);
    for (int j = 0; j < m; ++j) {
        const int i = c.support[j];
        K.col(j).head(d) = pb.omega[i] * (c.y - pb.pts[i]);
        K(d, j) = 1.0;
    }
    rhs[d] = 1.0;
    Eigen::VectorXd l = K.colPivHouseholderQr().solve(rhs);
    for (int j = 0; j < m; ++j) {
        if (!(l[j] >= -1e-9)) return false;
        w[c.support[j]] = std::max(l[j], 0.0);
    }
    const double s = std::accumulate(w.begin(), w.end(), 0.0);
    if (!(s > 0)) return false;
    for (double& v : w) v /= s;
    return true;
}

void enumerate_subsets(const Problem& pb, const std::vector<int>& pool, int max_size,
                       Candidate& best) {
    const int k = static_cast<int>(pool.size());
    std::vector<int> idx;
    std::vector<int> S;
    for (int m = 1; m <= std::min(k, max_size); ++m) {
        idx.resize(m);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            S.resize(m);
            for (int j = 0; j < m; ++j) S[j] = pool[idx[j]];
            try_support(pb, S, pool, best);
            int j = m - 1;
            while (j >= 0 && idx[j] == k - m + j) --j;
            if (j < 0) break;
            ++idx[j];
            for (int t = j + 1; t < m; ++t) idx[t] = idx[t - 1] + 1;
        }
    }
}

// Frank-Wolfe on the concave dual; returns weights with a certified gap.
std::vector<double> frank_wolfe(const Problem& pb, double tol, int max_iter) {
    const std::size_t k = pb.pts.size();
    std::vector<double> w(k, 1.0 / static_cast<double>(k));
    Point c;
    for (int it = 0; it < max_iter; ++it) {
        const double dv = pb.dual(w, &c);
        std::size_t arg = 0;
        double gmax = -1.0;
        for (std::size_t i = 0; i < k; ++i) {
            double gi = pb.omega[i] * (pb.pts[i] - c).squaredNorm();
            if (gi > gmax) {
                gmax = gi;
                arg = i;
            }
        }
        if (gmax - dv <= tol * std::max(1.0, gmax)) break;
        double lo = 0.0, hi = 1.0;
        auto at = [&](double gam) {
            std::vector<double> v(w);
            for (auto& x : v) x *= (1.0 - gam);
            v[arg] += gam;
            return pb.dual(v);
        };
        const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
        double a = hi - phi * (hi - lo), b = lo + phi * (hi - lo);
        double fa = at(a), fb = at(b);
        for (int s = 0; s < 60; ++s) {
            if (fa < fb) {
                lo = a;
                a = b;
                fa = fb;
                b = lo + phi * (hi - lo);
                fb = at(b);
            } else {
                hi = b;
                b = a;
                fb = fa;
                a = hi - phi * (hi - lo);
                fa = at(a);
            }
        }
        const double gam = 0.5 * (lo + hi);
        for (auto& x : w) x *= (1.0 - gam);
        w[arg] += gam;
    }
    return w;
}

// LP-type iteration: solve on a small basis, add the most violated point, repeat.
Candidate basis_iteration(const Problem& pb, int max_support) {
    const int k = static_cast<int>(pb.pts.size());
    std::vector<int> basis{0};
    Candidate best;
    for (int it = 0; it < 100 * k + 100; ++it) {
        best = Candidate{};
        enumerate_subsets(pb, basis, max_support, best);
        int worst = -1;
        double gmax = best.value;
        for (int i = 0; i < k; ++i) {
            double gi = pb.omega[i] * (pb.pts[i] - best.y).squaredNorm();
            if (gi > gmax * (1.0 + 1e-13) + 1e-300) {
                gmax = gi;
                worst = i;
            }
        }
        if (worst < 0) return best;
        basis = best.support;
        basis.push_back(worst);
    }
    auto w = frank_wolfe(pb, 1e-12, 20000);
    Point c;
    pb.dual(w, &c);
    return {c, pb.g(c), {}};
}

}  // namespace

MinScaledBall min_scaled_ball(const PointList& points, const std::vector<double>& radii,
                              double tol) {
    if (points.empty()) throw InvalidArgument("min_scaled_ball: empty input");
    if (radii.size() != points.size()) throw InvalidArgument("min_scaled_ball: radii count mismatch");
    if (!(tol > 0)) throw InvalidArgument("min_scaled_ball: tol must be positive");
    for (double r : radii)
        if (!(r > 0) || !std::isfinite(r)) throw InvalidArgument("min_scaled_ball: non-positive radius");
    check_same_dimension(points);

    Problem pb{points, {}, {}};
    for (double r : radii) {
        pb.omega.push_back(1.0 / (r * r));
        pb.rsq.push_back(r * r);
    }
    const int k = static_cast<int>(points.size());
    const int d = static_cast<int>(points.front().size());
    const int max_support = d + 1;

    Candidate best;
    if (k <= max_support + 1) {
        std::vector<int> pool(k);
        std::iota(pool.begin(), pool.end(), 0);
        enumerate_subsets(pb, pool, max_support, best);
    } else {
        best = basis_iteration(pb, max_support);
    }

    std::vector<double> w;
    double lower = 0.0;
    if (!best.support.empty() && support_multipliers(pb, best, w)) {
        lower = pb.dual(w);
    } else {
        w = frank_wolfe(pb, 1e-12, 20000);
        lower = pb.dual(w);
    }
    MinScaledBall out;
    out.center = best.y;
    out.value = std::sqrt(std::max(best.value, 0.0));
    out.certified_tol = std::max(0.0, out.value - std::sqrt(std::max(lower, 0.0)));
    return out;
}

bool balls_have_common_point(const PointList& points, const std::vector<double>& radii,
                             double margin) {
    return min_scaled_ball(points, radii).value < 1.0 - margin;
}

}  // namespace reachtopo
