#pragma once

#include <string>
#include <vector>

#include "reachtopo/shapes.hpp"

namespace reachtopo {

using Simplex = std::vector<int>;

// Simplices are stored sorted by (dimension, lexicographic vertex order).
struct SimplicialComplex {
    int n_vertices = 0;
    int max_dim = 0;
    std::vector<Simplex> simplices;

    bool contains(const Simplex& s) const;
    std::size_t count(int dim) const;
    int top_dim() const;
    // Throws InvalidArgument on duplicates, unsorted input, missing vertices or missing faces.
    void validate() const;
};

bool simplex_less(const Simplex& a, const Simplex& b);
SimplicialComplex make_complex(int n_vertices, int max_dim, std::vector<Simplex> simplices);

SimplicialComplex build_rips(const PointCloud& cloud, int max_dim);
SimplicialComplex build_cech_ambient(const PointCloud& cloud, int max_dim);

struct RestrictedBuildStats {
    std::size_t tests = 0;
    std::size_t indeterminate = 0;
};

// Indeterminate intersection tests are treated as empty and counted in stats.
SimplicialComplex build_cech_restricted(const PointCloud& cloud, const Shape& shape, int max_dim,
                                        RestrictedMethod method = RestrictedMethod::Auto,
                                        RestrictedBuildStats* stats = nullptr);

bool is_subcomplex(const SimplicialComplex& a, const SimplicialComplex& b);

std::string serialize_complex(const SimplicialComplex& c);
SimplicialComplex parse_complex(const std::string& text);

}  // namespace reachtopo
