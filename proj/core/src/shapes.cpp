#include "reachtopo/shapes.hpp"
#include "reachtopo/homology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace reachtopo {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

void dedupe(PointList& pts, double tol) {
    PointList out;
    for (auto& p : pts) {
        bool dup = false;
        for (auto& q : out)
            if ((p - q).norm() <= tol) {
                dup = true;
                break;
            }
        if (!dup) out.push_back(p);
    }
    pts.swap(out);
}

// Open angular intervals on the circle, stored as disjoint pieces inside [-pi, pi].
using Intervals = std::vector<std::pair<double, double>>;

Intervals arc_pieces(double phi, double w) {
    double a = phi - w, b = phi + w;
    Intervals out;
    if (a < -kPi) {
        out.push_back({-kPi, b});
        out.push_back({a + 2 * kPi, kPi});
    } else if (b > kPi) {
        out.push_back({a, kPi});
        out.push_back({-kPi, b - 2 * kPi});
    } else {
        out.push_back({a, b});
    }
    return out;
}

Intervals intersect(const Intervals& A, const Intervals& B) {
    Intervals out;
    for (auto [a0, a1] : A)
        for (auto [b0, b1] : B) {
            double lo = std::max(a0, b0), hi = std::min(a1, b1);
            if (hi > lo) out.push_back({lo, hi});
        }
    return out;
}

// Cap {u in S^{d-1} : u . a > kappa} from a ball B(x, r) on the sphere of radius R.
struct Cap {
    Point a;
    double kappa = 0.0;
    bool whole = false;
    bool empty = false;
};

Cap make_cap(const Point& x, double r, double R) {
    Cap c;
    const double rho = x.norm();
    if (rho <= 1e-300) {
        c.whole = R < r;
        c.empty = !c.whole;
        return c;
    }
    c.a = x / rho;
    c.kappa = (R * R + rho * rho - r * r) / (2.0 * R * rho);
    c.whole = c.kappa < -1.0;
    c.empty = c.kappa >= 1.0;
    return c;
}

bool strictly_inside(const std::vector<Cap>& caps, const Point& u) {
    for (const auto& c : caps) {
        if (c.whole) continue;
        if (!(u.dot(c.a) > c.kappa)) return false;
    }
    return true;
}

class SphereShape final : public Shape {
public:
    SphereShape(int d, double R) : d_(d), R_(R) {
        if (d < 2) throw InvalidArgument("sphere: ambient dimension must be >= 2");
        if (!(R > 0)) throw InvalidArgument("sphere: radius must be positive");
    }
    std::string name() const override {
        std::ostringstream os;
        if (d_ == 2)
            os << "circle(R=" << R_ << ")";
        else
            os << "sphere(d=" << d_ << ",R=" << R_ << ")";
        return os.str();
    }
    int ambient_dim() const override { return d_; }
    double distance_to(const Point& x) const override {
        check_dim(x);
        return std::abs(x.norm() - R_);
    }
    PointList nearest_set(const Point& x, double tol) const override {
        check_dim(x);
        const double n = x.norm();
        if (n <= tol) {
            PointList out;
            for (int i = 0; i < d_; ++i) {
                Point e = Point::Zero(d_);
                e[i] = R_;
                out.push_back(e);
                out.push_back(-e);
            }
            return out;
        }
        return {x * (R_ / n)};
    }
    double reach() const override { return R_; }
    std::vector<int> betti() const override {
        std::vector<int> b(d_, 0);
        b[0] = 1;
        b[d_ - 1] += 1;
        return b;
    }
    Box bounding_box() const override {
        return {Point::Constant(d_, -R_), Point::Constant(d_, R_)};
    }
    double intrinsic_measure() const override {
        // surface measure of S^{d-1}(R) = 2 pi^{d/2} R^{d-1} / Gamma(d/2)
        return 2.0 * std::pow(kPi, d_ / 2.0) * std::pow(R_, d_ - 1) / std::tgamma(d_ / 2.0);
    }
    Point sample_point(std::mt19937_64& rng) const override {
        std::normal_distribution<double> N(0.0, 1.0);
        Point v(d_);
        double n = 0.0;
        do {
            for (int i = 0; i < d_; ++i) v[i] = N(rng);
            n = v.norm();
        } while (n < 1e-12);
        return v * (R_ / n);
    }
    Point normal_at(const Point& p, std::mt19937_64&) const override { return p / p.norm(); }
    std::vector<RestrictedMethod> restricted_methods() const override {
        std::vector<RestrictedMethod> m;
        if (d_ == 2) m.push_back(RestrictedMethod::ExactArcs);
        if (d_ == 3) m.push_back(RestrictedMethod::ExactCaps);
        m.push_back(RestrictedMethod::ConstrainedOpt);
        return m;
    }
    Tri restricted_intersection(const PointList& centers, const std::vector<double>& radii,
                                RestrictedMethod method) const override {
        method = resolve(method);
        std::vector<Cap> caps;
        for (std::size_t i = 0; i < centers.size(); ++i) {
            check_dim(centers[i]);
            caps.push_back(make_cap(centers[i], radii[i], R_));
            if (caps.back().empty) return Tri::Empty;
        }
        switch (method) {
            case RestrictedMethod::ExactArcs: return arcs(caps, false);
            case RestrictedMethod::ExactCaps: return caps3(caps);
            case RestrictedMethod::ConstrainedOpt: return constrained(centers, radii);
            default: throw InvalidArgument("sphere: unsupported restricted method");
        }
    }

    static Tri arcs(const std::vector<Cap>& caps, bool upper_half) {
        Intervals cur{{-kPi, kPi}};
        if (upper_half) cur = {{0.0, kPi}};
        for (const auto& c : caps) {
            if (c.whole) continue;
            const double phi = std::atan2(c.a[1], c.a[0]);
            const double w = std::acos(std::clamp(c.kappa, -1.0, 1.0));
            cur = intersect(cur, arc_pieces(phi, w));
            if (cur.empty()) return Tri::Empty;
        }
        for (auto [lo, hi] : cur)
            if (hi - lo > 1e-13) return Tri::NonEmpty;
        return Tri::Empty;
    }

private:
    // Witness enumeration on S^2: cap centers, points just inside each boundary circle,
    // and points just inside every pairwise boundary intersection.
    Tri caps3(const std::vector<Cap>& caps) const {
        std::vector<const Cap*> act;
        for (const auto& c : caps)
            if (!c.whole) act.push_back(&c);
        if (act.empty()) return Tri::NonEmpty;
        const double eta = 1e-10;
        for (const Cap* c : act)
            if (strictly_inside(caps, c->a)) return Tri::NonEmpty;
        for (const Cap* c : act) {
            Eigen::Vector3d a = c->a;
            Eigen::Vector3d t1 = a.unitOrthogonal();
            Eigen::Vector3d t2 = a.cross(t1);
            const double k = std::min(c->kappa + eta, 1.0);
            const double s = std::sqrt(std::max(0.0, 1.0 - k * k));
            for (int j = 0; j < 12; ++j) {
                const double t = 2.0 * kPi * j / 12.0;
                Eigen::Vector3d u = k * a + s * (std::cos(t) * t1 + std::sin(t) * t2);
                if (strictly_inside(caps, Point(u))) return Tri::NonEmpty;
            }
        }
        for (std::size_t i = 0; i < act.size(); ++i)
            for (std::size_t j = i + 1; j < act.size(); ++j) {
                Eigen::Vector3d a = act[i]->a, b = act[j]->a;
                const double c = a.dot(b);
                if (1.0 - std::abs(c) < 1e-14) continue;
                const double ki = act[i]->kappa + eta, kj = act[j]->kappa + eta;
                const double det = 1.0 - c * c;
                const double al = (ki - c * kj) / det;
                const double be = (kj - c * ki) / det;
                const double g2 = 1.0 - (al * al + be * be + 2.0 * al * be * c);
                if (g2 < 0.0) continue;
                Eigen::Vector3d nrm = a.cross(b).normalized();
                for (double sg : {-1.0, 1.0}) {
                    Eigen::Vector3d u = al * a + be * b + sg * std::sqrt(g2) * nrm;
                    if (strictly_inside(caps, Point(u))) return Tri::NonEmpty;
                }
            }
        return Tri::Empty;
    }

    // Projected subgradient with restarts for a witness; the Lagrangian dual
    // L(w) = A R^2 - 2 R |b| + C (exact minimum over the sphere of the weighted sum) certifies emptiness.
    Tri constrained(const PointList& xs, const std::vector<double>& rs) const {
        const std::size_t k = xs.size();
        auto ratio = [&](const Point& y) {
            double m = 0.0;
            for (std::size_t i = 0; i < k; ++i) m = std::max(m, (y - xs[i]).norm() / rs[i]);
            return m;
        };
        std::mt19937_64 rng(0x5eed);
        for (int round = 0; round < 2; ++round) {
            const int iters = round == 0 ? 400 : 4000;
            double best = kInf;
            std::vector<Point> starts;
            for (std::size_t i = 0; i < k; ++i)
                if (xs[i].norm() > 1e-12) starts.push_back(xs[i] * (R_ / xs[i].norm()));
            while (starts.size() < 20) starts.push_back(sample_point(rng));
            for (Point y : starts) {
                for (int t = 0; t < iters; ++t) {
                    std::size_t j = 0;
                    double m = -1.0;
                    for (std::size_t i = 0; i < k; ++i) {
                        double v = (y - xs[i]).norm() / rs[i];
                        if (v > m) {
                            m = v;
                            j = i;
                        }
                    }
                    best = std::min(best, m);
                    Point g = (y - xs[j]) / (rs[j] * std::max((y - xs[j]).norm(), 1e-300));
                    g -= g.dot(y) / (R_ * R_) * y;
                    y -= (0.5 * R_ / std::sqrt(t + 1.0)) * g;
                    y *= R_ / y.norm();
                }
                best = std::min(best, ratio(y));
            }
            if (best < 1.0 - 1e-7) return Tri::NonEmpty;

            std::vector<double> w(k, 1.0 / static_cast<double>(k));
            double bestL = -kInf;
            for (int t = 0; t < iters; ++t) {
                double A = 0.0, C = 0.0;
                Point b = Point::Zero(d_);
                for (std::size_t i = 0; i < k; ++i) {
                    const double o = 1.0 / (rs[i] * rs[i]);
                    A += w[i] * o;
                    b += w[i] * o * xs[i];
                    C += w[i] * o * xs[i].squaredNorm();
                }
                const double L = A * R_ * R_ - 2.0 * R_ * b.norm() + C;
                bestL = std::max(bestL, L);
                Point y = b.norm() > 1e-300 ? Point(b * (R_ / b.norm())) : sample_point(rng);
                double z = 0.0;
                std::vector<double> q(k);
                for (std::size_t i = 0; i < k; ++i) q[i] = (y - xs[i]).squaredNorm() / (rs[i] * rs[i]);
                const double qmax = *std::max_element(q.begin(), q.end());
                for (std::size_t i = 0; i < k; ++i) {
                    w[i] *= std::exp(2.0 / std::sqrt(t + 1.0) * (q[i] - qmax) / std::max(qmax, 1e-12));
                    z += w[i];
                }
                for (auto& v : w) v /= z;
            }
            if (bestL > 1.0 + 1e-12) return Tri::Empty;
            MinScaledBall amb = min_scaled_ball(xs, rs);
            if (amb.value >= 1.0) return Tri::Empty;
        }
        return Tri::Indeterminate;
    }

    int d_;
    double R_;
};

class SemicircleShape final : public Shape {
public:
    explicit SemicircleShape(double R) : R_(R) {
        if (!(R > 0)) throw InvalidArgument("semicircle: radius must be positive");
    }
    std::string name() const override {
        std::ostringstream os;
        os << "semicircle(R=" << R_ << ")";
        return os.str();
    }
    int ambient_dim() const override { return 2; }
    double distance_to(const Point& x) const override {
        check_dim(x);
        double best = std::min((x - make_point({R_, 0})).norm(), (x - make_point({-R_, 0})).norm());
        if (x[1] >= 0.0) best = std::min(best, std::abs(x.norm() - R_));
        return best;
    }
    PointList nearest_set(const Point& x, double tol) const override {
        check_dim(x);
        const double n = x.norm();
        if (n <= tol) {
            PointList out;
            for (int j = 0; j <= 64; ++j) {
                const double t = kPi * j / 64.0;
                out.push_back(make_point({R_ * std::cos(t), R_ * std::sin(t)}));
            }
            return out;
        }
        PointList cand{make_point({R_, 0}), make_point({-R_, 0})};
        if (x[1] >= 0.0) cand.push_back(x * (R_ / n));
        double dmin = kInf;
        for (auto& c : cand) dmin = std::min(dmin, (c - x).norm());
        PointList out;
        for (auto& c : cand)
            if ((c - x).norm() <= dmin + tol) out.push_back(c);
        dedupe(out, 1e-12 * R_);
        return out;
    }
    double reach() const override { return R_; }
    std::vector<int> betti() const override { return {1, 0}; }
    Box bounding_box() const override { return {make_point({-R_, 0}), make_point({R_, R_})}; }
    double intrinsic_measure() const override { return kPi * R_; }
    Point sample_point(std::mt19937_64& rng) const override {
        std::uniform_real_distribution<double> U(0.0, kPi);
        const double t = U(rng);
        return make_point({R_ * std::cos(t), R_ * std::sin(t)});
    }
    Point normal_at(const Point& p, std::mt19937_64&) const override { return p / p.norm(); }
    std::vector<RestrictedMethod> restricted_methods() const override {
        return {RestrictedMethod::ExactArcs};
    }
    Tri restricted_intersection(const PointList& centers, const std::vector<double>& radii,
                                RestrictedMethod method) const override {
        resolve(method);
        std::vector<Cap> caps;
        for (std::size_t i = 0; i < centers.size(); ++i) {
            check_dim(centers[i]);
            caps.push_back(make_cap(centers[i], radii[i], R_));
            if (caps.back().empty) return Tri::Empty;
        }
        return SphereShape::arcs(caps, true);
    }

private:
    double R_;
};

struct Seg {
    Point a, b;
};

Point closest_on_segment(const Seg& s, const Point& x) {
    Point ab = s.b - s.a;
    const double L2 = ab.squaredNorm();
    double t = L2 > 0 ? std::clamp((x - s.a).dot(ab) / L2, 0.0, 1.0) : 0.0;
    return s.a + t * ab;
}

class PolylineShape final : public Shape {
public:
    PolylineShape(std::string name, std::vector<Seg> segs, double reach, std::vector<int> betti)
        : name_(std::move(name)), segs_(std::move(segs)), reach_(reach), betti_(std::move(betti)) {
        for (auto& s : segs_) {
            if (s.a.size() != 2 || s.b.size() != 2) throw InvalidArgument("polyline: 2D segments only");
            total_ += (s.b - s.a).norm();
        }
        if (!(total_ > 0)) throw InvalidArgument("polyline: zero length");
    }
    std::string name() const override { return name_; }
    int ambient_dim() const override { return 2; }
    double distance_to(const Point& x) const override {
        check_dim(x);
        double best = kInf;
        for (auto& s : segs_) best = std::min(best, (closest_on_segment(s, x) - x).norm());
        return best;
    }
    PointList nearest_set(const Point& x, double tol) const override {
        check_dim(x);
        PointList c;
        double dmin = kInf;
        for (auto& s : segs_) {
            c.push_back(closest_on_segment(s, x));
            dmin = std::min(dmin, (c.back() - x).norm());
        }
        PointList out;
        for (auto& p : c)
            if ((p - x).norm() <= dmin + tol) out.push_back(p);
        dedupe(out, 1e-12);
        return out;
    }
    double reach() const override { return reach_; }
    std::vector<int> betti() const override { return betti_; }
    Box bounding_box() const override {
        Point lo = segs_[0].a, hi = segs_[0].a;
        for (auto& s : segs_) {
            lo = lo.cwiseMin(s.a).cwiseMin(s.b);
            hi = hi.cwiseMax(s.a).cwiseMax(s.b);
        }
        return {lo, hi};
    }
    double intrinsic_measure() const override { return total_; }
    Point sample_point(std::mt19937_64& rng) const override {
        std::uniform_real_distribution<double> U(0.0, total_);
        double t = U(rng);
        for (auto& s : segs_) {
            const double L = (s.b - s.a).norm();
            if (t <= L || &s == &segs_.back()) return s.a + std::min(t / L, 1.0) * (s.b - s.a);
            t -= L;
        }
        return segs_.back().b;
    }
    Point normal_at(const Point& p, std::mt19937_64&) const override {
        const Seg* best = &segs_[0];
        double dmin = kInf;
        for (auto& s : segs_) {
            double d = (closest_on_segment(s, p) - p).norm();
            if (d < dmin) {
                dmin = d;
                best = &s;
            }
        }
        Point t = (best->b - best->a).normalized();
        return make_point({-t[1], t[0]});
    }
    std::vector<RestrictedMethod> restricted_methods() const override {
        return {RestrictedMethod::ExactSegments};
    }
    Tri restricted_intersection(const PointList& centers, const std::vector<double>& radii,
                                RestrictedMethod method) const override {
        resolve(method);
        for (auto& s : segs_) {
            double lo = 0.0, hi = 1.0;
            bool lo_open = false, hi_open = false;
            Point ab = s.b - s.a;
            const double A = ab.squaredNorm();
            bool ok = true;
            for (std::size_t i = 0; i < centers.size() && ok; ++i) {
                check_dim(centers[i]);
                Point w = s.a - centers[i];
                const double B = 2.0 * w.dot(ab);
                const double C = w.squaredNorm() - radii[i] * radii[i];
                const double disc = B * B - 4.0 * A * C;
                if (disc <= 0.0) {
                    ok = false;
                    break;
                }
                const double sq = std::sqrt(disc);
                const double t0 = (-B - sq) / (2.0 * A), t1 = (-B + sq) / (2.0 * A);
                if (t0 >= lo) {
                    lo = t0;
                    lo_open = true;
                }
                if (t1 <= hi) {
                    hi = t1;
                    hi_open = true;
                }
                if (hi < lo || (hi == lo && (lo_open || hi_open))) ok = false;
            }
            if (ok) return Tri::NonEmpty;
        }
        return Tri::Empty;
    }

private:
    std::string name_;
    std::vector<Seg> segs_;
    double reach_;
    std::vector<int> betti_;
    double total_ = 0.0;
};

class GridShape final : public Shape {
public:
    explicit GridShape(GridField g) : g_(std::move(g)) {
        g_.validate();
        for (int j = 0; j < g_.ny(); ++j)
            for (int i = 0; i < g_.nx(); ++i)
                if (g_.occupied(i, j)) pts_.push_back(g_.cell_center(i, j));
        if (pts_.empty()) throw InvalidArgument("grid shape: no occupied cells");
    }
    std::string name() const override { return "grid"; }
    int ambient_dim() const override { return 2; }
    double distance_to(const Point& x) const override {
        check_dim(x);
        double best = kInf;
        for (auto& p : pts_) best = std::min(best, (p - x).squaredNorm());
        return std::sqrt(best);
    }
    PointList nearest_set(const Point& x, double tol) const override {
        const double d = distance_to(x);
        PointList out;
        for (auto& p : pts_)
            if ((p - x).norm() <= d + tol) out.push_back(p);
        return out;
    }
    double reach() const override { return std::numeric_limits<double>::quiet_NaN(); }
    std::vector<int> betti() const override {
        auto b = betti_grid_2d(g_);
        return {b.first, b.second};
    }
    Box bounding_box() const override {
        Point lo = pts_[0], hi = pts_[0];
        for (auto& p : pts_) {
            lo = lo.cwiseMin(p);
            hi = hi.cwiseMax(p);
        }
        return {lo, hi};
    }
    double intrinsic_measure() const override {
        return static_cast<double>(pts_.size()) * g_.spacing * g_.spacing;
    }
    Point sample_point(std::mt19937_64& rng) const override {
        std::uniform_int_distribution<std::size_t> U(0, pts_.size() - 1);
        return pts_[U(rng)];
    }
    Point normal_at(const Point&, std::mt19937_64& rng) const override {
        std::uniform_real_distribution<double> U(0.0, 2.0 * kPi);
        const double t = U(rng);
        return make_point({std::cos(t), std::sin(t)});
    }
    std::vector<RestrictedMethod> restricted_methods() const override {
        return {RestrictedMethod::GridScan};
    }
    Tri restricted_intersection(const PointList& centers, const std::vector<double>& radii,
                                RestrictedMethod method) const override {
        resolve(method);
        for (auto& p : pts_) {
            bool in = true;
            for (std::size_t i = 0; i < centers.size() && in; ++i)
                in = (p - centers[i]).norm() < radii[i];
            if (in) return Tri::NonEmpty;
        }
        return Tri::Empty;
    }

private:
    GridField g_;
    PointList pts_;
};

}  // namespace

std::string to_string(RestrictedMethod m) {
    switch (m) {
        case RestrictedMethod::Auto: return "auto";
        case RestrictedMethod::ExactArcs: return "exact-arcs";
        case RestrictedMethod::ExactCaps: return "exact-caps";
        case RestrictedMethod::ExactSegments: return "exact-segments";
        case RestrictedMethod::ConstrainedOpt: return "constrained-opt";
        case RestrictedMethod::GridScan: return "grid-scan";
    }
    return "unknown";
}

RestrictedMethod restricted_method_from_string(const std::string& s) {
    for (auto m : {RestrictedMethod::Auto, RestrictedMethod::ExactArcs, RestrictedMethod::ExactCaps,
                   RestrictedMethod::ExactSegments, RestrictedMethod::ConstrainedOpt,
                   RestrictedMethod::GridScan})
        if (to_string(m) == s) return m;
    throw InvalidArgument("unknown restricted method: " + s);
}

void PointCloud::validate() const {
    check_same_dimension(points);
    if (!radii.empty()) {
        if (radii.size() != points.size()) throw InvalidArgument("cloud: radii count mismatch");
        for (double r : radii)
            if (!(r > 0) || !std::isfinite(r)) throw InvalidArgument("cloud: radii must be positive");
    }
}

void Shape::check_dim(const Point& x) const {
    if (x.size() != ambient_dim()) throw InvalidArgument(name() + ": dimension mismatch");
}

Point Shape::project(const Point& x) const {
    auto g = nearest_set(x, 1e-12);
    if (g.size() != 1)
        throw NonUniqueProjection(name() + ": projection is not unique at this point");
    return g.front();
}

RestrictedMethod Shape::resolve(RestrictedMethod m) const {
    auto ok = restricted_methods();
    if (m == RestrictedMethod::Auto) return ok.front();
    if (std::find(ok.begin(), ok.end(), m) == ok.end())
        throw InvalidArgument(name() + ": restricted method " + to_string(m) + " not supported");
    return m;
}

Tri Shape::restricted_intersection(const PointList&, const std::vector<double>&,
                                   RestrictedMethod) const {
    throw InvalidArgument(name() + ": restricted intersection not available");
}

ShapePtr make_sphere(int d, double R) { return std::make_shared<SphereShape>(d, R); }
ShapePtr make_circle(double R) { return std::make_shared<SphereShape>(2, R); }
ShapePtr make_semicircle(double R) { return std::make_shared<SemicircleShape>(R); }

ShapePtr make_segment(const Point& a, const Point& b) {
    if ((a - b).norm() <= 0) throw InvalidArgument("segment: endpoints coincide");
    return std::make_shared<PolylineShape>("segment", std::vector<Seg>{{a, b}}, kInf,
                                           std::vector<int>{1, 0});
}

ShapePtr make_square_boundary(double side) {
    if (!(side > 0)) throw InvalidArgument("square: side must be positive");
    const double h = side / 2.0;
    Point p00 = make_point({-h, -h}), p10 = make_point({h, -h}), p11 = make_point({h, h}),
          p01 = make_point({-h, h});
    std::ostringstream os;
    os << "square_boundary(side=" << side << ")";
    return std::make_shared<PolylineShape>(
        os.str(), std::vector<Seg>{{p00, p10}, {p10, p11}, {p11, p01}, {p01, p00}}, 0.0,
        std::vector<int>{1, 1});
}

ShapePtr make_two_segments(double alpha) {
    if (!(alpha > 0 && alpha <= kPi)) throw InvalidArgument("two segments: angle must be in (0, pi]");
    Point o = make_point({0, 0});
    std::ostringstream os;
    os << "two_segments(alpha=" << alpha << ")";
    const double reach = alpha >= kPi ? kInf : 0.0;
    return std::make_shared<PolylineShape>(
        os.str(),
        std::vector<Seg>{{o, make_point({1, 0})}, {o, make_point({std::cos(alpha), std::sin(alpha)})}},
        reach, std::vector<int>{1, 0});
}

ShapePtr make_grid_shape(const GridField& occupancy) { return std::make_shared<GridShape>(occupancy); }

ShapePtr make_shape(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ':')) parts.push_back(tok);
    if (parts.empty()) throw InvalidArgument("empty shape spec");
    auto num = [&](std::size_t i, double def) { return parts.size() > i ? std::stod(parts[i]) : def; };
    const std::string& k = parts[0];
    if (k == "circle") return make_circle(num(1, 1.0));
    if (k == "sphere") return make_sphere(static_cast<int>(num(1, 3)), num(2, 1.0));
    if (k == "semicircle") return make_semicircle(num(1, 1.0));
    if (k == "segment") {
        const double L = num(1, 2.0);
        return make_segment(make_point({-L / 2, 0}), make_point({L / 2, 0}));
    }
    if (k == "square") return make_square_boundary(num(1, 2.0));
    if (k == "two-segments") return make_two_segments(num(1, kPi / 2));
    throw InvalidArgument("unknown shape: " + spec);
}

GradientEstimate generalized_gradient(const Shape& shape, const Point& x, double tol) {
    GradientEstimate g;
    g.point = x;
    g.distance = shape.distance_to(x);
    g.nearest_set = shape.nearest_set(x, tol);
    if (g.distance <= 0.0) {
        g.center = x;
        g.grad_norm = 0.0;
        return g;
    }
    std::vector<double> ones(g.nearest_set.size(), 1.0);
    g.center = min_scaled_ball(g.nearest_set, ones).center;
    g.grad_norm = std::min(1.0, (x - g.center).norm() / g.distance);
    return g;
}

std::uint64_t derive_seed(std::uint64_t master, const std::string& stream, std::uint64_t index) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : stream) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return splitmix64(master ^ splitmix64(h ^ splitmix64(index)));
}

PointCloud sample_uniform(const Shape& shape, int n, std::uint64_t seed) {
    if (n < 1) throw InvalidArgument("sample: n must be >= 1");
    std::mt19937_64 rng(seed);
    PointCloud c;
    for (int i = 0; i < n; ++i) c.points.push_back(shape.sample_point(rng));
    return c;
}

PointCloud sample_with_noise(const Shape& shape, int n, double eps, std::uint64_t seed) {
    if (n < 1) throw InvalidArgument("sample: n must be >= 1");
    if (!(eps >= 0)) throw InvalidArgument("sample: eps must be >= 0");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    PointCloud c;
    for (int i = 0; i < n; ++i) {
        Point p = shape.sample_point(rng);
        Point nrm = shape.normal_at(p, rng);
        c.points.push_back(p + (eps * U(rng)) * nrm);
    }
    return c;
}

namespace {

struct Layout {
    Point origin;
    double h;
    int nx, ny;
};

Layout offset_layout(const Shape& shape, double margin, int resolution) {
    if (shape.ambient_dim() != 2) throw InvalidArgument("grid fields are 2D only");
    if (resolution < 16) throw InvalidArgument("resolution too small");
    Box b = shape.bounding_box();
    const double ext = std::max(b.hi[0] - b.lo[0], b.hi[1] - b.lo[1]) + 2.0 * margin;
    Layout L;
    L.h = ext / (resolution - 8);
    const double pad = margin + 4.0 * L.h;
    L.nx = static_cast<int>(std::ceil((b.hi[0] - b.lo[0] + 2 * pad) / L.h)) + 1;
    L.ny = static_cast<int>(std::ceil((b.hi[1] - b.lo[1] + 2 * pad) / L.h)) + 1;
    L.origin = make_point({b.lo[0] - pad, b.lo[1] - pad});
    return L;
}

}  // namespace

GridField offset_field(const Shape& shape, double r, int resolution) {
    if (!(r > 0)) throw InvalidArgument("offset: r must be positive");
    Layout L = offset_layout(shape, 2.0 * r, resolution);
    if (L.h > r / 8.0) throw PreconditionError("offset: resolution too coarse (spacing > r/8)");
    GridField g = make_grid(L.origin, L.h, L.nx, L.ny);
    for (int j = 0; j < L.ny; ++j)
        for (int i = 0; i < L.nx; ++i) g.at(i, j) = shape.distance_to(g.cell_center(i, j)) < r ? 1.0 : 0.0;
    return g;
}

GridField double_offset_field(const Shape& shape, double r, double s, int resolution) {
    if (!(s > 0) || s > r) throw InvalidArgument("double offset: need 0 < s <= r");
    GridField g = offset_field(shape, r, resolution);
    if (g.spacing > s / 8.0) throw PreconditionError("double offset: resolution too coarse (spacing > s/8)");
    std::vector<char> comp(g.values.size());
    for (std::size_t i = 0; i < comp.size(); ++i) comp[i] = g.values[i] > 0.5 ? 0 : 1;
    auto d2 = squared_distance_transform(comp, g.nx(), g.ny());
    // one cell of slack for the pixel-center distances, so that s = r keeps a band around X
    const double s_cells = s / g.spacing - 1.0;
    for (std::size_t i = 0; i < comp.size(); ++i) g.values[i] = d2[i] >= s_cells * s_cells ? 1.0 : 0.0;
    return g;
}

MuReachEstimate estimate_mu_reach(const Shape& shape, double mu, int resolution, double pad) {
    if (!(mu > 0 && mu <= 1)) throw InvalidArgument("mu must be in (0, 1]");
    if (shape.ambient_dim() != 2) throw InvalidArgument("mu-reach estimation is 2D only");
    if (resolution < 64) throw PreconditionError("mu-reach: resolution too coarse for two-digit accuracy");
    Box b = shape.bounding_box();
    const double ext = std::max(b.hi[0] - b.lo[0], b.hi[1] - b.lo[1]);
    if (pad < 0) pad = std::max(ext, 1e-3);
    const double h = (ext + 2 * pad) / resolution;
    const int nx = static_cast<int>(std::ceil((b.hi[0] - b.lo[0] + 2 * pad) / h)) + 1;
    const int ny = static_cast<int>(std::ceil((b.hi[1] - b.lo[1] + 2 * pad) / h)) + 1;
    const Point origin = make_point({b.lo[0] - pad, b.lo[1] - pad});
    MuReachEstimate est;
    est.spacing = h;
    est.value = kInf;
    est.unbounded = true;
    bool on_border = false;
    const double off[5][2] = {{0, 0}, {-0.5, -0.5}, {0.5, -0.5}, {-0.5, 0.5}, {0.5, 0.5}};
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            Point p = make_point({origin[0] + h * i, origin[1] + h * j});
            const double d = shape.distance_to(p);
            if (d <= h || d >= est.value) continue;
            PointList gam;
            for (auto& o : off) {
                Point q = make_point({p[0] + o[0] * h, p[1] + o[1] * h});
                for (auto& z : shape.nearest_set(q, 1e-9 * std::max(1.0, ext))) gam.push_back(z);
            }
            dedupe(gam, 1e-9 * std::max(1.0, ext));
            std::vector<double> ones(gam.size(), 1.0);
            Point theta = min_scaled_ball(gam, ones).center;
            const double grad = (p - theta).norm() / d;
            if (grad < mu - 2.0 * h / d) {
                est.value = d;
                est.unbounded = false;
                est.witness = p;
                on_border = (i == 0 || j == 0 || i == nx - 1 || j == ny - 1);
            }
        }
    est.censored = !est.unbounded && on_border;
    return est;
}

}  // namespace reachtopo
