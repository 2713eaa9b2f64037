#include <cmath>

#include "doctest.h"
#include "reachtopo/constants.hpp"

using namespace reachtopo;

namespace {
RatioProblem problem(ComplexKind k, Regime r, int dim = 0) {
    RatioProblem p;
    p.kind = k;
    p.regime = r;
    p.dim = dim;
    return p;
}
}  // namespace

TEST_CASE("comparison constants have closed forms") {
    auto c = comparison_constants();
    CHECK(c.at("nsw_cech") == doctest::Approx(3 - std::sqrt(8.0)).epsilon(1e-12));
    CHECK(c.at("attali_cech") == doctest::Approx((-3 + std::sqrt(22.0)) / 13).epsilon(1e-12));
    const double s = std::sqrt(2.0);
    CHECK(c.at("attali_rips") == doctest::Approx((2 * std::sqrt(2 - s) - s) / (2 + s)).epsilon(1e-12));
}

TEST_CASE("ratio feasibility endpoints") {
    for (auto k : {ComplexKind::Cech, ComplexKind::Rips})
        for (auto r : {Regime::General, Regime::NoisyAsymptotic}) {
            CHECK(evaluate_ratio(problem(k, r), 0.0).feasible);
            CHECK_FALSE(evaluate_ratio(problem(k, r), 0.49).feasible);
        }
}

TEST_CASE("general constants at the limit dimension") {
    CHECK(max_ratio(problem(ComplexKind::Cech, Regime::General)).value == doctest::Approx(0.01126).epsilon(0.05));
    CHECK(max_ratio(problem(ComplexKind::Rips, Regime::General)).value == doctest::Approx(0.03982).epsilon(0.02));
    CHECK(max_ratio(problem(ComplexKind::Rips, Regime::NoisyAsymptotic)).value ==
          doctest::Approx(0.06700).epsilon(0.01));
}

TEST_CASE("max ratio sits on the feasibility boundary") {
    for (auto k : {ComplexKind::Cech, ComplexKind::Rips})
        for (auto r : {Regime::General, Regime::NoisyAsymptotic}) {
            auto p = problem(k, r);
            const double v = max_ratio(p, 1e-8).value;
            CHECK(evaluate_ratio(p, v * (1 - 1e-4)).feasible);
            CHECK_FALSE(evaluate_ratio(p, v * (1 + 1e-3)).feasible);
        }
}

TEST_CASE("dropping a condition can only enlarge the feasible ratio") {
    for (auto k : {ComplexKind::Cech, ComplexKind::Rips})
        for (auto r : {Regime::General, Regime::NoisyAsymptotic}) {
            auto both = problem(k, r);
            auto first = both, second = both;
            first.conditions = ConditionSet::FirstOnly;
            second.conditions = ConditionSet::SecondOnly;
            const double vb = max_ratio(both).value;
            CHECK(max_ratio(first).value >= vb - 1e-6);
            CHECK(max_ratio(second).value >= vb - 1e-6);
        }
}

TEST_CASE("ratio curve and labels") {
    auto rows = ratio_curve(problem(ComplexKind::Rips, Regime::General), {0.0, 0.01, 0.2});
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].feasible);
    CHECK_FALSE(rows[2].feasible);
    CHECK(dimension_label(0) == "d->infinity");
    CHECK(dimension_label(3) == "d=3");
    CHECK(regime_from_string(to_string(Regime::NoisyAsymptotic)) == Regime::NoisyAsymptotic);
    CHECK_THROWS_AS(regime_from_string("fast"), std::exception);
}
