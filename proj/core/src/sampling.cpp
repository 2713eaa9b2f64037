#include "reachtopo/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <unordered_map>

namespace reachtopo {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_round(const Shape& s, int& dim, double& R) {
    const std::string n = s.name();
    if (n.rfind("circle", 0) != 0 && n.rfind("sphere", 0) != 0) return false;
    dim = s.ambient_dim();
    R = s.reach();
    return true;
}

// Uniform hash grid over flat coordinates for radius queries.
class HashGrid {
public:
    HashGrid(const PointList& pts, double cell) : cell_(cell), dim_(pts.empty() ? 0 : pts[0].size()) {
        coords_.reserve(pts.size() * dim_);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            for (int k = 0; k < dim_; ++k) coords_.push_back(pts[i][k]);
            cells_[key(pts[i].data())].push_back(static_cast<int>(i));
        }
    }
    bool any_within(const double* q, double r) const {
        long base[3] = {0, 0, 0};
        for (int k = 0; k < dim_; ++k) base[k] = static_cast<long>(std::floor(q[k] / cell_));
        const int span = static_cast<int>(std::ceil(r / cell_));
        const double r2 = r * r;
        long c[3];
        const int reach = 2 * span + 1;
        int total = 1;
        for (int k = 0; k < dim_; ++k) total *= reach;
        for (int t = 0; t < total; ++t) {
            int rem = t;
            for (int k = 0; k < dim_; ++k) {
                c[k] = base[k] + (rem % reach) - span;
                rem /= reach;
            }
            auto it = cells_.find(pack(c));
            if (it == cells_.end()) continue;
            for (int i : it->second) {
                double s = 0.0;
                for (int k = 0; k < dim_; ++k) {
                    const double dd = coords_[static_cast<std::size_t>(i) * dim_ + k] - q[k];
                    s += dd * dd;
                }
                if (s < r2) return true;
            }
        }
        return false;
    }

private:
    std::uint64_t pack(const long* c) const {
        std::uint64_t h = 0;
        for (int k = 0; k < dim_; ++k) h = h * 0x100000001b3ULL + static_cast<std::uint64_t>(c[k] + (1L << 20));
        return h;
    }
    std::uint64_t key(const double* p) const {
        long c[3] = {0, 0, 0};
        for (int k = 0; k < dim_; ++k) c[k] = static_cast<long>(std::floor(p[k] / cell_));
        return pack(c);
    }
    double cell_;
    int dim_;
    std::vector<double> coords_;
    std::unordered_map<std::uint64_t, std::vector<int>> cells_;
};

}  // namespace

void SamplingModel::validate() const {
    if (!shape) throw InvalidArgument("sampling model needs a shape");
    if (!(a > 0) || !(b > 0) || !(eps0 > 0)) throw InvalidArgument("sampling model constants must be positive");
}

SamplingModel standard_model(const ShapePtr& shape) {
    int dim = 0;
    double R = 0.0;
    if (!shape || !is_round(*shape, dim, R) || dim > 3)
        throw InvalidArgument("no documented (a,b) constants for this shape");
    SamplingModel m;
    m.shape = shape;
    m.eps0 = 2.0 * R;
    if (dim == 2) {
        m.a = 1.0 / (kPi * R);
        m.b = 1.0;
    } else {
        m.a = 1.0 / (4.0 * R * R);
        m.b = 2.0;
    }
    return m;
}

double sphere_ball_mass(int ambient_dim, double R, double e) {
    if (e <= 0) return 0.0;
    if (e >= 2.0 * R) return 1.0;
    if (ambient_dim == 2) return 2.0 * std::asin(e / (2.0 * R)) / kPi;
    if (ambient_dim == 3) return e * e / (4.0 * R * R);
    throw InvalidArgument("ball mass available for circles and S^2 only");
}

PointList reference_points(const Shape& shape, double spacing, std::uint64_t seed) {
    if (!(spacing > 0)) throw InvalidArgument("reference spacing must be positive");
    int dim = 0;
    double R = 0.0;
    PointList out;
    if (is_round(shape, dim, R) && dim == 2) {
        const int m = std::max(8, static_cast<int>(std::ceil(2.0 * kPi * R / spacing)));
        for (int i = 0; i < m; ++i) {
            const double t = 2.0 * kPi * i / m;
            out.push_back(make_point({R * std::cos(t), R * std::sin(t)}));
        }
        return out;
    }
    if (is_round(shape, dim, R) && dim == 3) {
        // Fibonacci lattice: cell area 4 pi R^2 / m ~ spacing^2.
        const int m = std::max(16, static_cast<int>(std::ceil(4.0 * kPi * R * R / (spacing * spacing))));
        const double golden = kPi * (3.0 - std::sqrt(5.0));
        for (int i = 0; i < m; ++i) {
            const double z = 1.0 - (2.0 * i + 1.0) / m;
            const double rr = std::sqrt(std::max(0.0, 1.0 - z * z));
            const double t = golden * i;
            out.push_back(make_point({R * rr * std::cos(t), R * rr * std::sin(t), R * z}));
        }
        return out;
    }
    const double intrinsic = shape.ambient_dim() == 2 ? 1.0 : 2.0;
    const int m = std::max(16, static_cast<int>(std::ceil(shape.intrinsic_measure() / std::pow(spacing, intrinsic))));
    return sample_uniform(shape, m, seed).points;
}

HausdorffReport hausdorff_distance(const PointCloud& cloud, const Shape& shape, int reference_n, std::uint64_t seed) {
    if (cloud.points.empty()) throw InvalidArgument("hausdorff: empty cloud");
    if (reference_n < 1000) throw InvalidArgument("hausdorff: reference_n must be >= 1000");
    HausdorffReport h;
    for (auto& p : cloud.points) h.eps = std::max(h.eps, shape.distance_to(p));
    PointList ref = sample_uniform(shape, reference_n, seed).points;
    h.reference_n = reference_n;
    for (auto& q : ref) {
        double best = std::numeric_limits<double>::infinity();
        for (auto& p : cloud.points) best = std::min(best, (p - q).squaredNorm());
        h.delta = std::max(h.delta, std::sqrt(best));
    }
    h.value = std::max(h.eps, h.delta);
    return h;
}

double covering_radius_lower_limit(const SamplingModel& model, int n) {
    model.validate();
    if (n < 2) throw InvalidArgument("n must be >= 2");
    return 2.0 * std::pow(std::log(static_cast<double>(n)) / (model.a * n), 1.0 / model.b);
}

double covering_probability_bound(const SamplingModel& model, int n) {
    model.validate();
    if (n < 2) throw InvalidArgument("n must be >= 2");
    return 1.0 - 1.0 / (std::pow(2.0, model.b) * std::log(static_cast<double>(n)));
}

bool all_points_covered(const PointList& targets, const PointList& centers, double r) {
    if (centers.empty()) return targets.empty();
    if (centers[0].size() > 3) {
        for (auto& t : targets) {
            bool hit = false;
            for (auto& c : centers)
                if ((c - t).norm() < r) {
                    hit = true;
                    break;
                }
            if (!hit) return false;
        }
        return true;
    }
    HashGrid grid(centers, r);
    for (auto& t : targets)
        if (!grid.any_within(t.data(), r)) return false;
    return true;
}

CoveringReport covering_probability_sim(const SamplingModel& model, int n, double r_min, int trials,
                                        std::uint64_t seed) {
    model.validate();
    if (trials < 1) throw InvalidArgument("trials must be >= 1");
    CoveringReport rep;
    rep.n = n;
    rep.trials = trials;
    rep.r_min = r_min;
    rep.r_lower_limit = covering_radius_lower_limit(model, n);
    if (r_min < rep.r_lower_limit * (1.0 - 1e-12) || r_min > 2.0 * model.eps0)
        throw PreconditionError("covering radius outside [2 (log n / (a n))^(1/b), 2 eps0]");
    rep.bound = covering_probability_bound(model, n);
    const PointList ref = reference_points(*model.shape, r_min / 10.0);
    rep.reference_points = static_cast<int>(ref.size());
    for (int t = 0; t < trials; ++t) {
        auto cloud = sample_uniform(*model.shape, n, derive_seed(seed, "covering-sim", static_cast<std::uint64_t>(t)));
        const bool ok = all_points_covered(ref, cloud.points, r_min);
        rep.per_trial.push_back(ok ? 1 : 0);
        rep.covered += ok ? 1 : 0;
    }
    rep.empirical = static_cast<double>(rep.covered) / trials;
    const double p = std::clamp(rep.bound, 0.0, 1.0);
    rep.sigma = std::sqrt(p * (1.0 - p) / trials);
    rep.passes = rep.empirical >= rep.bound - 3.0 * rep.sigma;
    return rep;
}

double covering_number_bound(const SamplingModel& model, double eps) {
    model.validate();
    if (!(eps > 0) || !(eps < model.eps0)) throw InvalidArgument("need 0 < eps < eps0");
    return 1.0 / (model.a * std::pow(eps, model.b));
}

int greedy_net_size(const Shape& shape, double eps) {
    if (!(eps > 0)) throw InvalidArgument("eps must be positive");
    const PointList ref = reference_points(shape, eps / 20.0);
    PointList net;
    for (auto& p : ref) {
        bool near = false;
        for (auto& q : net)
            if ((p - q).norm() <= 2.0 * eps) {
                near = true;
                break;
            }
        if (!near) net.push_back(p);
    }
    return static_cast<int>(net.size());
}

}  // namespace reachtopo
