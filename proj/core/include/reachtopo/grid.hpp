#pragma once

#include <string>
#include <vector>

#include "reachtopo/geometry.hpp"

namespace reachtopo {

// Regular 2D grid; values are row-major with the x index varying fastest.
// Cell (i, j) has center origin + spacing * (i, j).
struct GridField {
    Point origin;
    double spacing = 1.0;
    std::vector<int> dims;
    std::vector<double> values;

    int nx() const { return dims.at(0); }
    int ny() const { return dims.at(1); }
    double& at(int i, int j) { return values[static_cast<std::size_t>(j) * nx() + i]; }
    double at(int i, int j) const { return values[static_cast<std::size_t>(j) * nx() + i]; }
    Point cell_center(int i, int j) const;
    bool occupied(int i, int j) const { return at(i, j) > 0.5; }
    void validate() const;
};

GridField make_grid(const Point& origin, double spacing, int nx, int ny, double fill = 0.0);

std::string serialize_grid(const GridField& g);
GridField parse_grid(const std::string& text);

// Squared Euclidean distance (in cell units) from every cell to the nearest cell with mask set.
std::vector<double> squared_distance_transform(const std::vector<char>& mask, int nx, int ny);

}  // namespace reachtopo
