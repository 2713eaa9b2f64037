#pragma once

#include <cstdint>
#include <string>

namespace reachtopo::cli {

struct Result {
    std::string text;
    int exit_code = 0;
};

struct ReconstructOptions {
    std::string shape = "circle";
    int n = 200;
    double eps = 0.0;
    double radius = 0.4;
    std::string radii_file;
    std::string points_file;
    bool radii_inline = false;
    std::string complex = "cech";
    int max_dim = -1;
    std::string scenario;
    int reference_n = 20000;
    std::uint64_t seed = 1;
};

struct ConstantsOptions {
    std::string kind = "cech";
    std::string regime = "general";
    std::string dim = "inf";
    std::string conditions = "both";
    double tol = 1e-7;
    std::string curve_csv;
    int curve_points = 200;
};

struct CoveringOptions {
    std::string shape = "circle";
    int n = 1000;
    double r_min = -1.0;
    int trials = 500;
    std::uint64_t seed = 1;
    std::string format = "json";
};

struct VerifyOptions {
    std::string lemma;
    std::string shape = "circle";
    long cases = 100000;
    double tolerance = 1e-9;
    std::uint64_t seed = 1;
};

struct OffsetsOptions {
    std::string shape = "square";
    double r = 0.2;
    std::string s = "auto-mu";
    double mu = 0.5;
    int resolution = 512;
    std::string grid_out;
};

struct ComplexOptions {
    std::string shape = "circle";
    int n = 100;
    double eps = 0.0;
    double radius = 0.3;
    std::string points_file;
    bool radii_inline = false;
    std::string complex = "rips";
    int max_dim = 2;
    std::string inspect;
    std::uint64_t seed = 1;
};

struct BettiOptions {
    std::string complex_file;
    std::string grid_file;
    int up_to = -1;
};

// Maps a lemma token or oracle name to the oracle key ("a4" -> "projection-point").
std::string resolve_lemma(const std::string& token);

Result run_reconstruct(const ReconstructOptions& o);
Result run_constants(const ConstantsOptions& o);
Result run_covering(const CoveringOptions& o);
Result run_verify(const VerifyOptions& o);
Result run_offsets(const OffsetsOptions& o);
Result run_complex(const ComplexOptions& o);
Result run_betti(const BettiOptions& o);

}  // namespace reachtopo::cli
