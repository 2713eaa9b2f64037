#pragma once

#include <map>
#include <string>
#include <vector>

#include "reachtopo/conditions.hpp"

namespace reachtopo {

enum class Regime { General, NoisyAsymptotic };
enum class ConditionSet { Both, FirstOnly, SecondOnly };

std::string to_string(Regime r);
std::string to_string(ConditionSet c);
Regime regime_from_string(const std::string& s);
ConditionSet condition_set_from_string(const std::string& s);

// Feasibility of rho = d_H / tau in the normalized (tau = 1) condition pairs.
// dim = 0 is the limit d -> infinity. two_tau is the factor "2 tau" inside the rho(2 tau - rho)
// term of the second condition; 2 is the dimensionless reading.
struct RatioProblem {
    ComplexKind kind = ComplexKind::Cech;
    Regime regime = Regime::General;
    int dim = 0;
    int scan_grid = 10000;
    ConditionSet conditions = ConditionSet::Both;
    double two_tau = 2.0;

    void validate() const;
};

struct RatioRow {
    double rho = 0.0;
    bool feasible = false;
    double best_slack = 0.0;
    double best_t = 0.0;
};

struct RatioResult {
    double value = 0.0;
    bool infeasible_at_tol = false;
    int iterations = 0;
};

RatioRow evaluate_ratio(const RatioProblem& p, double rho);
RatioResult max_ratio(const RatioProblem& p, double tol = 1e-7);
std::vector<RatioRow> ratio_curve(const RatioProblem& p, const std::vector<double>& rho_grid);

std::map<std::string, double> comparison_constants();

std::string dimension_label(int dim);

}  // namespace reachtopo
