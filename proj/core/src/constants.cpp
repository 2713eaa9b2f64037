#include "reachtopo/constants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "reachtopo/geometry.hpp"

namespace reachtopo {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double sq(double x) { return x >= 0.0 ? std::sqrt(x) : kNaN; }

// Largest slack of the first Cech condition at t = r / tau; NaN outside the domain.
double cech_first_slack(double rho, double t, bool asymptotic) {
    const double q = (1.0 - rho) * (1.0 - rho) - t * t;
    const double inner = t - t * t / (1.0 - rho + sq(q)) - (asymptotic ? rho : 2.0 * rho);
    const double lhs = (asymptotic ? 0.0 : rho) + sq(t * t + rho * (2.0 - rho) - 0.25 * inner * inner);
    return t - lhs;
}

double cech_second_slack(const RatioProblem& p, double rho) {
    const double k = covering_dimension_factor(p.dim);
    const double a = (1.0 - rho) * (1.0 - rho);
    const double b = a + rho * (2.0 - rho);
    const double rhs = 0.5 * (k * sq((a - rho * (p.two_tau - rho)) / 2.0) - sq(2.0 * b / (2.0 + sq(4.0 - 2.0 * b))));
    return rhs - (p.regime == Regime::General ? rho : 0.0);
}

double rips_first_slack(const RatioProblem& p, double rho) {
    const double c = rips_radius_factor(p.dim);
    const double q = 0.25 * (1.0 - rho) * (1.0 - rho) + rho * (2.0 - rho);
    const double rhs = c * (1.0 - rho) - 0.5 * sq(2.0 * q / (1.0 + sq(1.0 - q)));
    return rhs - (p.regime == Regime::General ? rho : 0.0);
}

double rips_second_slack(const RatioProblem& p, double rho) {
    const double c = rips_radius_factor(p.dim);
    const double k = covering_dimension_factor(p.dim);
    const double b = c * c * (1.0 - rho) * (1.0 - rho);
    const double bb = b + rho * (2.0 - rho);
    const double rhs = 0.5 * (k * sq((b - rho * (p.two_tau - rho)) / 2.0) - sq(2.0 * bb / (2.0 + sq(4.0 - 2.0 * bb))));
    return rhs - (p.regime == Regime::General ? rho : 0.0);
}

double nan_low(double v) { return std::isnan(v) ? -std::numeric_limits<double>::infinity() : v; }

}  // namespace

std::string to_string(Regime r) { return r == Regime::General ? "general" : "noisy-asymptotic"; }

std::string to_string(ConditionSet c) {
    switch (c) {
        case ConditionSet::Both: return "both";
        case ConditionSet::FirstOnly: return "first";
        case ConditionSet::SecondOnly: return "second";
    }
    return "both";
}

Regime regime_from_string(const std::string& s) {
    if (s == "general") return Regime::General;
    if (s == "noisy-asymptotic" || s == "asymptotic") return Regime::NoisyAsymptotic;
    throw InvalidArgument("unknown regime: " + s);
}

ConditionSet condition_set_from_string(const std::string& s) {
    if (s == "both") return ConditionSet::Both;
    if (s == "first") return ConditionSet::FirstOnly;
    if (s == "second") return ConditionSet::SecondOnly;
    throw InvalidArgument("unknown condition set: " + s);
}

std::string dimension_label(int dim) { return dim == 0 ? "d->infinity" : "d=" + std::to_string(dim); }

void RatioProblem::validate() const {
    if (dim < 0) throw InvalidArgument("dimension must be >= 1 or 0 for the limit");
    if (scan_grid < 1000) throw InvalidArgument("scan grid needs at least 1000 points");
    if (!(two_tau > 0)) throw InvalidArgument("two_tau must be positive");
}

RatioRow evaluate_ratio(const RatioProblem& p, double rho) {
    p.validate();
    RatioRow row;
    row.rho = rho;
    const bool asym = p.regime == Regime::NoisyAsymptotic;
    const bool use_first = p.conditions != ConditionSet::SecondOnly;
    const bool use_second = p.conditions != ConditionSet::FirstOnly;
    double first = std::numeric_limits<double>::infinity();
    double second = std::numeric_limits<double>::infinity();
    row.best_t = kNaN;
    if (p.kind == ComplexKind::Cech) {
        if (use_first) {
            double best = -std::numeric_limits<double>::infinity();
            int arg = 1;
            for (int i = 1; i <= p.scan_grid; ++i) {
                const double v = nan_low(cech_first_slack(rho, static_cast<double>(i) / p.scan_grid, asym));
                if (v > best) {
                    best = v;
                    arg = i;
                }
            }
            double a = std::max(arg - 1, 0) / static_cast<double>(p.scan_grid);
            double b = std::min(arg + 1, p.scan_grid) / static_cast<double>(p.scan_grid);
            double bt = static_cast<double>(arg) / p.scan_grid;
            const double g = (std::sqrt(5.0) - 1.0) / 2.0;
            for (int it = 0; it < 80; ++it) {
                const double x1 = b - g * (b - a), x2 = a + g * (b - a);
                const double f1 = nan_low(cech_first_slack(rho, x1, asym));
                const double f2 = nan_low(cech_first_slack(rho, x2, asym));
                if (f1 > best) {
                    best = f1;
                    bt = x1;
                }
                if (f2 > best) {
                    best = f2;
                    bt = x2;
                }
                if (f1 >= f2)
                    b = x2;
                else
                    a = x1;
            }
            first = best;
            row.best_t = bt;
        }
        if (use_second) second = nan_low(cech_second_slack(p, rho));
    } else {
        if (use_first) first = nan_low(rips_first_slack(p, rho));
        if (use_second) second = nan_low(rips_second_slack(p, rho));
        row.best_t = rips_radius_factor(p.dim) * (1.0 - rho);
    }
    row.best_slack = std::min(first, second);
    row.feasible = row.best_slack >= 0.0;
    return row;
}

RatioResult max_ratio(const RatioProblem& p, double tol) {
    if (!(tol >= 1e-9)) throw InvalidArgument("tolerance too small");
    RatioResult res;
    if (!evaluate_ratio(p, tol).feasible) {
        res.infeasible_at_tol = true;
        return res;
    }
    double lo = tol, hi = 0.5;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (evaluate_ratio(p, mid).feasible)
            lo = mid;
        else
            hi = mid;
        ++res.iterations;
    }
    res.value = lo;
    return res;
}

std::vector<RatioRow> ratio_curve(const RatioProblem& p, const std::vector<double>& rho_grid) {
    if (!std::is_sorted(rho_grid.begin(), rho_grid.end())) throw InvalidArgument("rho grid must be sorted");
    std::vector<RatioRow> rows;
    rows.reserve(rho_grid.size());
    for (double r : rho_grid) rows.push_back(evaluate_ratio(p, r));
    return rows;
}

std::map<std::string, double> comparison_constants() {
    const double s2 = std::sqrt(2.0);
    return {{"nsw_cech", 3.0 - std::sqrt(8.0)},
            {"attali_cech", (-3.0 + std::sqrt(22.0)) / 13.0},
            {"attali_rips", (2.0 * std::sqrt(2.0 - s2) - s2) / (2.0 + s2)}};
}

}  // namespace reachtopo
