#pragma once

#include <string>
#include <vector>

namespace reachtopo {

// Summary of a sampled reconstruction problem. d = 0 denotes the limit d -> infinity.
struct ReconstructionInput {
    double tau = 1.0;
    int d = 2;
    double eps = 0.0;
    double delta = 0.0;
    double r_min = 0.0;
    double r_max = 0.0;
    double mu = 1.0;

    void validate() const;
};

struct Inequality {
    std::string label;
    double lhs = 0.0;
    double rhs = 0.0;
    bool ok = false;

    double slack() const { return rhs - lhs; }
};

struct ConditionReport {
    std::string name;
    std::vector<Inequality> inequalities;
    bool all_satisfied = false;
    // Reach lower bound r_max + eps of the double offset (mu-reach corollary only).
    double induced_reach = 0.0;
    std::string reading;

    const Inequality& get(const std::string& label) const;
};

std::string to_json(const ConditionReport& report);

// Factors depending on the ambient dimension, with d = 0 giving the d -> infinity limit.
double rips_cech_factor(int d);                // sqrt(2d/(d+1))
double rips_radius_factor(int d);              // sqrt((d+1)/(2d))
double covering_dimension_factor(int d);       // sqrt(2(d+1)/d)

double nerve_radius_bound(double tau, double dist);
double interleave_cech_radius(double r, double dist, double tau);
double interleave_rips_radius(double r, double dist, double tau, int d);

ConditionReport check_cech_theorem(const ReconstructionInput& in);
ConditionReport check_rips_theorem(const ReconstructionInput& in);

enum class ComplexKind { Cech, Rips };
// Literal keeps every bare tau of the corollary as the mu-reach; Substituted replaces it by
// the double offset reach r_max + eps.
enum class TauReading { Literal, Substituted };

std::string to_string(ComplexKind k);
std::string to_string(TauReading r);
ComplexKind complex_kind_from_string(const std::string& s);
TauReading tau_reading_from_string(const std::string& s);

// in.tau is the mu-reach and in.mu its parameter.
ConditionReport check_mureach_corollary(const ReconstructionInput& in, ComplexKind kind,
                                        TauReading reading = TauReading::Literal);

}  // namespace reachtopo
