#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "cli_io.hpp"
#include "reachtopo/appendix_oracles.hpp"
#include "reachtopo/complexes.hpp"
#include "reachtopo/conditions.hpp"
#include "reachtopo/constants.hpp"
#include "reachtopo/homology.hpp"
#include "reachtopo/sampling.hpp"
#include "reachtopo/scenarios.hpp"

namespace reachtopo::cli {

namespace {

Json nullable(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

SimplicialComplex build(const std::string& kind, const PointCloud& cloud, const Shape* shape, int max_dim,
                        RestrictedBuildStats* stats) {
    if (kind == "cech") return build_cech_ambient(cloud, max_dim);
    if (kind == "rips") return build_rips(cloud, max_dim);
    if (kind == "cech-restricted") {
        if (!shape) throw InvalidArgument("restricted Cech needs --shape");
        return build_cech_restricted(cloud, *shape, max_dim, RestrictedMethod::Auto, stats);
    }
    throw InvalidArgument("unknown complex kind: " + kind + " (cech, rips, cech-restricted)");
}

Json counts_json(const SimplicialComplex& k) {
    Json arr = Json::array();
    for (int d = 0; d <= k.top_dim(); ++d) arr.push_back(k.count(d));
    return arr;
}

Json radii_json(const std::vector<double>& r) {
    Json arr = Json::array();
    for (double x : r) arr.push_back(x);
    return arr;
}

}  // namespace

std::string resolve_lemma(const std::string& token) {
    static const std::map<std::string, std::string> aliases = {
        {"a1", "convex-combination-identity"}, {"a2", "segment-projection"}, {"federer", "federer-inner-product"},
        {"a4", "projection-point"},            {"a5", "close-projection"},   {"a6", "center-projection"},
        {"d3", "simplex-cover"},
    };
    std::string t = token;
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
    auto it = aliases.find(t);
    return to_string(oracle_from_string(it == aliases.end() ? t : it->second));
}

Result run_reconstruct(const ReconstructOptions& o) {
    Json report;
    Json config;
    config["subcommand"] = "reconstruct";
    config["shape"] = o.shape;
    config["n"] = o.n;
    config["eps"] = o.eps;
    config["radius"] = o.radius;
    config["radii_file"] = o.radii_file;
    config["points_file"] = o.points_file;
    config["radii_inline"] = o.radii_inline;
    config["complex"] = o.complex;
    config["max_dim"] = o.max_dim;
    config["scenario"] = o.scenario;
    config["reference_n"] = o.reference_n;
    config["seed"] = o.seed;
    report["config"] = config;
    report["seed"] = o.seed;

    std::string extra;
    ShapePtr shape;
    PointCloud cloud;
    std::string kind = o.complex;
    bool measure = true;
    if (o.scenario == "lens") {
        auto ex = semicircle_lens_counterexample();
        shape = make_semicircle(1.0);
        cloud = ex.cloud;
        kind = "cech";
        measure = false;
        report["scenario"] = {{"name", "semicircle-lens"}, {"eps", ex.eps}, {"chord", ex.chord},
                              {"lens_distance", ex.lens_distance}, {"dense_radius", ex.rho}};
    } else if (o.scenario == "tightness") {
        auto t = antipodal_tightness();
        shape = make_circle(1.0);
        cloud = t.above;
        kind = "cech-restricted";
        measure = false;
        report["scenario"] = {{"name", "antipodal-tightness"},
                              {"eps", t.eps},
                              {"nerve_bound", t.bound},
                              {"radius", t.above.radii[0]},
                              {"restricted_balls_cover", restricted_balls_cover_circle(1.0, t.above)}};
    } else if (!o.scenario.empty()) {
        throw InvalidArgument("unknown scenario: " + o.scenario + " (lens, tightness)");
    } else {
        shape = make_shape(o.shape);
        if (!o.points_file.empty()) {
            const std::string text = read_file(o.points_file);
            extra += text;
            cloud = parse_point_text(text, o.radii_inline);
        } else {
            if (o.n < 1) throw InvalidArgument("--n must be positive");
            cloud = sample_with_noise(*shape, o.n, o.eps, derive_seed(o.seed, "reconstruct"));
        }
        if (!o.radii_file.empty()) {
            const std::string text = read_file(o.radii_file);
            extra += text;
            cloud.radii = parse_radii_text(text);
        } else if (cloud.radii.empty()) {
            cloud.radii.assign(cloud.points.size(), o.radius);
        }
    }
    cloud.validate();
    for (auto& p : cloud.points) shape->check_dim(p);

    const auto expected = shape->betti();
    const int up_to = static_cast<int>(expected.size()) - 1;
    const int max_dim = o.max_dim >= 0 ? o.max_dim : up_to + 1;
    const double r_min = *std::min_element(cloud.radii.begin(), cloud.radii.end());
    const double r_max = *std::max_element(cloud.radii.begin(), cloud.radii.end());
    const double tau = shape->reach();

    if (measure) {
        auto h = hausdorff_distance(cloud, *shape, o.reference_n, derive_seed(o.seed, "reconstruct-reference"));
        report["hausdorff"] = {{"eps", h.eps}, {"delta", h.delta}, {"reference_points", h.reference_n}};
        if (kind == "cech-restricted") {
            double worst = -std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < cloud.points.size(); ++i) {
                const double d = shape->distance_to(cloud.points[i]);
                if (d < tau) worst = std::max(worst, cloud.radii[i] - nerve_radius_bound(tau, d));
            }
            report["conditions_report"] = {{"name", "restricted_nerve_radius"},
                                           {"max_radius_excess", nullable(worst)},
                                           {"all_satisfied", std::isfinite(worst) && worst <= 0}};
        } else if (tau > h.eps && h.delta > 0) {
            ReconstructionInput in;
            in.tau = tau;
            in.d = shape->ambient_dim();
            in.eps = h.eps;
            in.delta = h.delta;
            in.r_min = r_min;
            in.r_max = r_max;
            auto rep = kind == "rips" ? check_rips_theorem(in) : check_cech_theorem(in);
            report["conditions_report"] = Json::parse(to_json(rep));
        } else {
            report["conditions_report"] = {{"name", "not_applicable"},
                                           {"reason", "reach of the shape does not exceed the sample noise"}};
        }
    }

    RestrictedBuildStats stats;
    auto k = build(kind, cloud, shape.get(), max_dim, &stats);
    const auto betti = betti_simplicial(k, up_to);
    report["complex"] = {{"kind", kind}, {"max_dim", max_dim}, {"simplex_counts", counts_json(k)}};
    if (kind == "cech-restricted") report["complex"]["indeterminate_tests"] = stats.indeterminate;
    report["betti_computed"] = vector_json(betti);
    report["betti_expected"] = vector_json(expected);
    report["match"] = betti == expected;
    report["samples"] = {{"points", points_json(cloud.points)}, {"radii", radii_json(cloud.radii)}};
    return {finalize_report(report, extra), 0};
}

Result run_constants(const ConstantsOptions& o) {
    RatioProblem p;
    p.kind = complex_kind_from_string(o.kind);
    p.regime = regime_from_string(o.regime);
    p.conditions = condition_set_from_string(o.conditions);
    if (o.dim == "inf" || o.dim == "infinity") {
        p.dim = 0;
    } else {
        p.dim = std::stoi(o.dim);
        if (p.dim < 1) throw InvalidArgument("--dim must be >= 1 or inf");
    }
    p.validate();
    auto res = max_ratio(p, o.tol);
    Json report;
    report["config"] = {{"subcommand", "constants"}, {"kind", o.kind}, {"regime", o.regime}, {"dim", o.dim},
                        {"conditions", o.conditions}, {"tol", o.tol}, {"curve_csv", o.curve_csv},
                        {"curve_points", o.curve_points}};
    report["problem"] = {{"kind", to_string(p.kind)},
                         {"regime", to_string(p.regime)},
                         {"conditions", to_string(p.conditions)},
                         {"scan_grid", p.scan_grid}};
    report["value"] = res.value;
    report["infeasible_at_tol"] = res.infeasible_at_tol;
    report["iterations"] = res.iterations;
    report["convention"] = dimension_label(p.dim);
    report["comparison_constants"] = comparison_constants();
    if (!o.curve_csv.empty()) {
        if (o.curve_points < 2) throw InvalidArgument("--curve-points must be >= 2");
        std::vector<double> grid;
        for (int i = 0; i < o.curve_points; ++i) grid.push_back(0.5 * i / (o.curve_points - 1));
        std::ostringstream csv;
        csv.precision(17);
        csv << "rho,feasible,best_slack,best_t\n";
        for (auto& row : ratio_curve(p, grid))
            csv << row.rho << ',' << (row.feasible ? 1 : 0) << ',' << row.best_slack << ',' << row.best_t << '\n';
        write_file(o.curve_csv, csv.str());
        report["curve_csv_path"] = o.curve_csv;
    } else {
        report["curve_csv_path"] = nullptr;
    }
    return {finalize_report(report), 0};
}

Result run_covering(const CoveringOptions& o) {
    auto model = standard_model(make_shape(o.shape));
    const double r = o.r_min > 0 ? o.r_min : covering_radius_lower_limit(model, o.n);
    auto rep = covering_probability_sim(model, o.n, r, o.trials, derive_seed(o.seed, "covering-sim"));
    if (o.format == "csv") {
        std::ostringstream csv;
        csv.precision(17);
        csv << "trial,covered,r_min,n\n";
        for (int t = 0; t < rep.trials; ++t) csv << t << ',' << int(rep.per_trial[t]) << ',' << r << ',' << o.n << '\n';
        return {csv.str(), 0};
    }
    if (o.format != "json") throw InvalidArgument("--format must be json or csv");
    Json report;
    report["config"] = {{"subcommand", "covering-sim"}, {"shape", o.shape}, {"n", o.n},   {"r_min", o.r_min},
                        {"trials", o.trials},           {"seed", o.seed},   {"format", o.format}};
    report["seed"] = o.seed;
    report["model"] = {{"a", model.a}, {"b", model.b}, {"eps0", model.eps0}};
    report["r_min"] = r;
    report["r_lower_limit"] = rep.r_lower_limit;
    report["covered"] = rep.covered;
    report["empirical"] = rep.empirical;
    report["bound"] = rep.bound;
    report["sigma"] = rep.sigma;
    report["passes"] = rep.passes;
    report["reference_points"] = rep.reference_points;
    return {finalize_report(report), 0};
}

Result run_verify(const VerifyOptions& o) {
    if (o.lemma.empty()) throw InvalidArgument("--lemma is required");
    const std::string key = resolve_lemma(o.lemma);
    auto shape = make_shape(o.shape);
    auto sum = run_oracle(oracle_from_string(key), *shape, o.cases, derive_seed(o.seed, "verify-inequalities"),
                          o.tolerance);
    Json report;
    report["config"] = {{"subcommand", "verify-inequalities"}, {"lemma", o.lemma}, {"shape", o.shape},
                        {"cases", o.cases}, {"tolerance", o.tolerance}, {"seed", o.seed}};
    report["seed"] = o.seed;
    report["lemma"] = o.lemma;
    report["oracle"] = key;
    report["shape"] = sum.shape;
    report["cases"] = sum.cases;
    report["attempts"] = sum.attempts;
    report["violations"] = sum.violations;
    report["worst_margin"] = nullable(sum.worst_margin);
    report["checks_evaluated"] = sum.checks_evaluated;
    Json logged = Json::object();
    for (auto& [label, count] : sum.logged_violations)
        logged[label] = {{"below_zero", count}, {"worst_margin", nullable(sum.logged_worst.at(label))}};
    report["logged"] = logged;
    Json eq = Json::array();
    for (auto& c : equality_configurations()) eq.push_back({{"label", c.label}, {"lhs", c.lhs}, {"rhs", c.rhs}});
    report["equality_configurations"] = eq;
    return {finalize_report(report), 0};
}

Result run_offsets(const OffsetsOptions& o) {
    auto shape = make_shape(o.shape);
    if (shape->ambient_dim() != 2) throw InvalidArgument("offsets are computed on 2D shapes only");
    Json report;
    report["config"] = {{"subcommand", "offsets"}, {"shape", o.shape}, {"r", o.r},
                        {"s", o.s},                 {"mu", o.mu},       {"resolution", o.resolution},
                        {"grid_out", o.grid_out}};
    double s = 0.0;
    if (o.s == "auto-mu") {
        auto est = estimate_mu_reach(*shape, o.mu, o.resolution);
        report["mu_reach"] = {{"mu", o.mu},
                              {"estimate", est.unbounded ? Json(nullptr) : Json(est.value)},
                              {"unbounded", est.unbounded},
                              {"censored", est.censored},
                              {"spacing", est.spacing}};
        if (est.censored || (!est.unbounded && !(o.r < est.value * o.mu)))
            throw PreconditionError("auto-mu: need r < mu * mu-reach (estimated " + std::to_string(est.value) + ")");
        s = o.mu * o.r;
    } else {
        s = std::stod(o.s);
    }
    auto single = offset_field(*shape, o.r, o.resolution);
    auto dbl = double_offset_field(*shape, o.r, s, o.resolution);
    const auto b1 = betti_grid_2d(single), b2 = betti_grid_2d(dbl);
    const auto expected = shape->betti();
    const std::vector<int> vb1{b1.first, b1.second}, vb2{b2.first, b2.second};
    report["s"] = s;
    report["grid"] = {{"nx", dbl.nx()}, {"ny", dbl.ny()}, {"spacing", dbl.spacing}};
    report["betti_offset"] = vector_json(vb1);
    report["betti_double_offset"] = vector_json(vb2);
    report["betti_expected"] = vector_json(expected);
    report["match"] = vb2 == expected;
    if (!o.grid_out.empty()) write_file(o.grid_out, serialize_grid(dbl));
    return {finalize_report(report), 0};
}

Result run_complex(const ComplexOptions& o) {
    if (!o.inspect.empty()) {
        const std::string text = read_file(o.inspect);
        auto k = parse_complex(text);
        Json report;
        report["config"] = {{"subcommand", "complex"}, {"inspect", o.inspect}};
        report["n_vertices"] = k.n_vertices;
        report["max_dim"] = k.max_dim;
        report["top_dim"] = k.top_dim();
        report["simplex_counts"] = counts_json(k);
        return {finalize_report(report, text), 0};
    }
    ShapePtr shape;
    PointCloud cloud;
    if (!o.points_file.empty()) {
        cloud = parse_point_text(read_file(o.points_file), o.radii_inline);
        if (o.complex == "cech-restricted") shape = make_shape(o.shape);
    } else {
        shape = make_shape(o.shape);
        cloud = sample_with_noise(*shape, o.n, o.eps, derive_seed(o.seed, "complex"));
    }
    if (cloud.radii.empty()) cloud.radii.assign(cloud.points.size(), o.radius);
    cloud.validate();
    return {serialize_complex(build(o.complex, cloud, shape.get(), o.max_dim, nullptr)), 0};
}

Result run_betti(const BettiOptions& o) {
    Json report;
    report["config"] = {{"subcommand", "betti"}, {"complex_file", o.complex_file}, {"grid_file", o.grid_file},
                        {"up_to", o.up_to}};
    std::string text;
    if (!o.complex_file.empty() == !o.grid_file.empty())
        throw InvalidArgument("give exactly one of --complex-file and --grid-file");
    if (!o.complex_file.empty()) {
        text = read_file(o.complex_file);
        auto k = parse_complex(text);
        const int up_to = o.up_to >= 0 ? o.up_to : std::max(0, k.top_dim() - 1);
        report["kind"] = "simplicial";
        report["simplex_counts"] = counts_json(k);
        report["betti"] = vector_json(betti_simplicial(k, up_to));
    } else {
        text = read_file(o.grid_file);
        auto b = betti_grid_2d(parse_grid(text));
        report["kind"] = "cubical";
        report["betti"] = vector_json({b.first, b.second});
    }
    return {finalize_report(report, text), 0};
}

}  // namespace reachtopo::cli
