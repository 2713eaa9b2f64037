#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "cli_io.hpp"
#include "commands.hpp"

using namespace reachtopo;
using namespace reachtopo::cli;

int main(int argc, char** argv) {
    CLI::App app{"reachtopo: homotopy reconstruction from samples via weighted Cech and Rips complexes"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string out;
    app.add_option("--out", out, "write the report to this file instead of stdout");

    ReconstructOptions rec;
    auto* r = app.add_subcommand("reconstruct", "sample a shape, build a complex and compare Betti numbers");
    r->add_option("--shape", rec.shape, "circle[:R], sphere[:d[:R]], semicircle, segment[:L], square[:side], two-segments[:alpha]");
    r->add_option("--n", rec.n, "number of samples");
    r->add_option("--eps", rec.eps, "uniform normal noise amplitude");
    r->add_option("--radius", rec.radius, "constant ball radius");
    r->add_option("--radii-file", rec.radii_file, "one radius per line");
    r->add_option("--points-file", rec.points_file, "read samples instead of drawing them");
    r->add_flag("--radii-inline", rec.radii_inline, "last column of the points file is the radius");
    r->add_option("--complex", rec.complex, "cech, rips or cech-restricted");
    r->add_option("--max-dim", rec.max_dim, "largest simplex dimension (default: intrinsic dimension + 1)");
    r->add_option("--scenario", rec.scenario, "lens or tightness");
    r->add_option("--reference-n", rec.reference_n, "reference points for the Hausdorff estimate");
    r->add_option("--seed", rec.seed, "master seed");

    ConstantsOptions con;
    auto* c = app.add_subcommand("constants", "largest admissible noise to reach ratio");
    c->add_option("--kind", con.kind, "cech or rips");
    c->add_option("--regime", con.regime, "general or noisy-asymptotic");
    c->add_option("--dim", con.dim, "ambient dimension or inf");
    c->add_option("--conditions", con.conditions, "both, first or second");
    c->add_option("--tol", con.tol, "bisection tolerance");
    c->add_option("--curve-csv", con.curve_csv, "write the feasibility curve to this CSV file");
    c->add_option("--curve-points", con.curve_points, "rho grid size for the curve");

    CoveringOptions cov;
    auto* cs = app.add_subcommand("covering-sim", "Monte Carlo covering probability");
    cs->add_option("--shape", cov.shape, "circle[:R] or sphere:3[:R]");
    cs->add_option("--n", cov.n, "samples per trial");
    cs->add_option("--r-min", cov.r_min, "ball radius (default: the smallest admissible radius)");
    cs->add_option("--trials", cov.trials, "number of trials");
    cs->add_option("--seed", cov.seed, "master seed");
    cs->add_option("--format", cov.format, "json or csv");

    VerifyOptions ver;
    auto* v = app.add_subcommand("verify-inequalities", "random admissible cases for the projection inequalities");
    v->add_option("--lemma", ver.lemma, "oracle name or alias (a1, a2, federer, a4, a5, a6, d3)")->required();
    v->add_option("--shape", ver.shape, "circle[:R] or sphere[:d[:R]]");
    v->add_option("--cases", ver.cases, "admissible cases to evaluate");
    v->add_option("--tolerance", ver.tolerance, "margin below which a check counts as violated");
    v->add_option("--seed", ver.seed, "master seed");

    OffsetsOptions off;
    auto* o = app.add_subcommand("offsets", "offset and double offset Betti numbers on a grid");
    o->add_option("--shape", off.shape, "2D shape spec");
    o->add_option("--r", off.r, "outer offset radius");
    o->add_option("--s", off.s, "inner radius, or auto-mu for mu * r after certifying the mu-reach");
    o->add_option("--mu", off.mu, "mu used by auto-mu");
    o->add_option("--resolution", off.resolution, "cells along the longest side");
    o->add_option("--grid-out", off.grid_out, "write the double offset grid to this file");

    ComplexOptions cx;
    auto* k = app.add_subcommand("complex", "build a complex and print it, or inspect a complex file");
    k->add_option("--shape", cx.shape, "shape to sample");
    k->add_option("--n", cx.n, "number of samples");
    k->add_option("--eps", cx.eps, "noise amplitude");
    k->add_option("--radius", cx.radius, "constant ball radius");
    k->add_option("--points-file", cx.points_file, "points instead of samples");
    k->add_flag("--radii-inline", cx.radii_inline, "last column of the points file is the radius");
    k->add_option("--complex", cx.complex, "cech, rips or cech-restricted");
    k->add_option("--max-dim", cx.max_dim, "largest simplex dimension");
    k->add_option("--inspect", cx.inspect, "summarize an existing complex file");
    k->add_option("--seed", cx.seed, "master seed");

    BettiOptions bt;
    auto* b = app.add_subcommand("betti", "Betti numbers of a complex or grid file");
    b->add_option("--complex-file", bt.complex_file, "simplicial complex file");
    b->add_option("--grid-file", bt.grid_file, "occupancy grid file");
    b->add_option("--up-to", bt.up_to, "highest Betti number");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        Result res;
        if (*r) res = run_reconstruct(rec);
        else if (*c) res = run_constants(con);
        else if (*cs) res = run_covering(cov);
        else if (*v) res = run_verify(ver);
        else if (*o) res = run_offsets(off);
        else if (*k) res = run_complex(cx);
        else res = run_betti(bt);
        if (out.empty()) std::cout << res.text;
        else write_file(out, res.text);
        return res.exit_code;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
