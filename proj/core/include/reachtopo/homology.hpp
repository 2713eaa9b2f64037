#pragma once

#include <utility>
#include <vector>

#include "reachtopo/complexes.hpp"
#include "reachtopo/grid.hpp"

namespace reachtopo {

// GF(2) Betti numbers beta_0..beta_up_to. Simplices above dimension up_to + 1 are ignored,
// so beta_k is exact whenever the complex contains all of its (k+1)-simplices.
std::vector<int> betti_simplicial(const SimplicialComplex& complex, int up_to);

// Ranks of the coboundary maps delta_0..delta_{up_to}; exposed for testing.
std::vector<std::size_t> coboundary_ranks(const SimplicialComplex& complex, int up_to);

// (beta_0, beta_1) of the foreground of a 2D occupancy field: 4-connected foreground,
// Euler characteristic from pixels, 4-adjacent pairs and fully occupied 2x2 blocks.
std::pair<int, int> betti_grid_2d(const GridField& field);

}  // namespace reachtopo
