#include "reachtopo/conditions.hpp"

#include <cmath>
#include <limits>

#include "json.hpp"

#include "reachtopo/geometry.hpp"

namespace reachtopo {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double sq(double x) { return x >= 0.0 ? std::sqrt(x) : kNaN; }

Inequality ineq(std::string label, double lhs, double rhs) {
    Inequality q;
    q.label = std::move(label);
    q.lhs = lhs;
    q.rhs = rhs;
    q.ok = std::isfinite(lhs) && std::isfinite(rhs) && lhs <= rhs;
    return q;
}

ConditionReport finish(std::string name, std::vector<Inequality> qs) {
    ConditionReport r;
    r.name = std::move(name);
    r.inequalities = std::move(qs);
    r.all_satisfied = true;
    for (auto& q : r.inequalities) r.all_satisfied = r.all_satisfied && q.ok;
    return r;
}

double half_dim_ratio(int d) { return d == 0 ? 0.5 : d / (2.0 * (d + 1)); }

// delta + sqrt(r_max^2 + E - (r_min - shrink - eps - delta)^2 / 4) <= r_min
Inequality cech_first(const ReconstructionInput& in, double E, double shrink) {
    const double inner = in.r_min - shrink - in.eps - in.delta;
    return ineq("covering_first", in.delta + sq(in.r_max * in.r_max + E - 0.25 * inner * inner), in.r_min);
}

// delta <= (k sqrt((r_min^2 - E1)/2) - sqrt(2 ta (r_min^2 + E2) / (2 ta + sqrt(4 tb^2 - 2 (r_min^2 + E2))))) / 2
Inequality covering_second(const ReconstructionInput& in, double E1, double E2, double ta, double tb) {
    const double r2 = in.r_min * in.r_min;
    const double k = covering_dimension_factor(in.d);
    const double rhs =
        0.5 * (k * sq((r2 - E1) / 2.0) - sq(2.0 * ta * (r2 + E2) / (2.0 * ta + sq(4.0 * tb * tb - 2.0 * (r2 + E2)))));
    return ineq("covering_second", in.delta, rhs);
}

// delta <= r_min - sqrt(2 t q / (t + sqrt(t^2 - q))) / 2, q = d/(2(d+1)) r_max^2 + E
Inequality rips_first(const ReconstructionInput& in, double E, double t) {
    const double q = half_dim_ratio(in.d) * in.r_max * in.r_max + E;
    return ineq("covering_first", in.delta, in.r_min - 0.5 * sq(2.0 * t * q / (t + sq(t * t - q))));
}

}  // namespace

void ReconstructionInput::validate() const {
    if (!(tau > 0) || !std::isfinite(tau)) throw InvalidArgument("tau must be positive and finite");
    if (d < 0) throw InvalidArgument("d must be >= 1 (or 0 for the d -> infinity limit)");
    if (!(eps >= 0) || !(eps < tau)) throw InvalidArgument("need 0 <= eps < tau");
    if (!(delta > 0)) throw InvalidArgument("delta must be positive");
    if (!(r_min > 0) || !(r_min <= r_max)) throw InvalidArgument("need 0 < r_min <= r_max");
    if (!(mu > 0 && mu <= 1)) throw InvalidArgument("mu must be in (0, 1]");
}

const Inequality& ConditionReport::get(const std::string& label) const {
    for (auto& q : inequalities)
        if (q.label == label) return q;
    throw InvalidArgument("report " + name + " has no inequality " + label);
}

std::string to_json(const ConditionReport& report) {
    nlohmann::ordered_json j;
    j["name"] = report.name;
    if (!report.reading.empty()) j["reading"] = report.reading;
    auto arr = nlohmann::ordered_json::array();
    for (auto& q : report.inequalities) {
        nlohmann::ordered_json e;
        e["label"] = q.label;
        e["lhs"] = std::isfinite(q.lhs) ? nlohmann::ordered_json(q.lhs) : nlohmann::ordered_json(nullptr);
        e["rhs"] = std::isfinite(q.rhs) ? nlohmann::ordered_json(q.rhs) : nlohmann::ordered_json(nullptr);
        e["ok"] = q.ok;
        arr.push_back(e);
    }
    j["inequalities"] = arr;
    j["all_satisfied"] = report.all_satisfied;
    if (report.induced_reach > 0) j["induced_reach"] = report.induced_reach;
    return j.dump();
}

double rips_cech_factor(int d) {
    if (d < 0) throw InvalidArgument("d must be >= 1");
    return d == 0 ? std::sqrt(2.0) : std::sqrt(2.0 * d / (d + 1.0));
}

double rips_radius_factor(int d) {
    if (d < 0) throw InvalidArgument("d must be >= 1");
    return d == 0 ? std::sqrt(0.5) : std::sqrt((d + 1.0) / (2.0 * d));
}

double covering_dimension_factor(int d) {
    if (d < 0) throw InvalidArgument("d must be >= 1");
    return d == 0 ? std::sqrt(2.0) : std::sqrt(2.0 * (d + 1.0) / d);
}

double nerve_radius_bound(double tau, double dist) {
    if (!(tau > 0)) throw InvalidArgument("tau must be positive");
    if (!(dist >= 0 && dist <= tau)) throw InvalidArgument("need 0 <= dist <= tau");
    return std::sqrt(tau * tau + (tau - dist) * (tau - dist));
}

double interleave_cech_radius(double r, double dist, double tau) {
    if (!(dist >= 0 && dist < tau)) throw InvalidArgument("need 0 <= dist < tau");
    return std::sqrt(2.0 * r * r + dist * (2.0 * tau - dist));
}

double interleave_rips_radius(double r, double dist, double tau, int d) {
    if (!(dist >= 0 && dist < tau)) throw InvalidArgument("need 0 <= dist < tau");
    const double f = d == 0 ? 4.0 : 4.0 * d / (d + 1.0);
    return std::sqrt(f * r * r + dist * (2.0 * tau - dist));
}

ConditionReport check_cech_theorem(const ReconstructionInput& in) {
    in.validate();
    const double t = in.tau, e = in.eps;
    const double E = e * (2.0 * t - e);
    const double shrink = in.r_max * in.r_max / (t - e + sq((t - e) * (t - e) - in.r_max * in.r_max));
    return finish("cech_theorem", {ineq("radius", in.r_max, t - e), cech_first(in, E, shrink),
                                   covering_second(in, E, E, t, t)});
}

ConditionReport check_rips_theorem(const ReconstructionInput& in) {
    in.validate();
    const double t = in.tau, e = in.eps;
    const double E = e * (2.0 * t - e);
    return finish("rips_theorem", {ineq("radius", in.r_max, rips_radius_factor(in.d) * (t - e)),
                                   rips_first(in, E, t), covering_second(in, E, E, t, t)});
}

std::string to_string(ComplexKind k) { return k == ComplexKind::Cech ? "cech" : "rips"; }
std::string to_string(TauReading r) { return r == TauReading::Literal ? "literal" : "substituted"; }

ComplexKind complex_kind_from_string(const std::string& s) {
    if (s == "cech") return ComplexKind::Cech;
    if (s == "rips") return ComplexKind::Rips;
    throw InvalidArgument("unknown complex kind: " + s);
}

TauReading tau_reading_from_string(const std::string& s) {
    if (s == "literal") return TauReading::Literal;
    if (s == "substituted") return TauReading::Substituted;
    throw InvalidArgument("unknown tau reading: " + s);
}

ConditionReport check_mureach_corollary(const ReconstructionInput& in, ComplexKind kind, TauReading reading) {
    in.validate();
    const double T = in.r_max + in.eps;
    if (T / in.mu > in.tau)
        throw PreconditionError("mu-reach corollary needs (r_max + eps) / mu <= mu-reach");
    const double e = in.eps;
    const double tau = reading == TauReading::Literal ? in.tau : T;
    const double Er = e * (2.0 * in.r_max + e);
    const double Et = e * (2.0 * tau - e);
    ConditionReport r;
    if (kind == ComplexKind::Cech) {
        r = finish("mureach_corollary_cech",
                   {cech_first(in, Er, in.r_max), covering_second(in, Er, Et, tau, T)});
    } else {
        r = finish("mureach_corollary_rips", {rips_first(in, Er, T), covering_second(in, Er, Er, tau, tau)});
    }
    r.induced_reach = T;
    r.reading = to_string(reading);
    return r;
}

}  // namespace reachtopo
