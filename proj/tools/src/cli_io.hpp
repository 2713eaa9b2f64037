#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"
#include "reachtopo/shapes.hpp"

namespace reachtopo::cli {

using Json = nlohmann::ordered_json;

// One point per line, whitespace separated; '#' starts a comment line.
// With radii_inline the last column of each line is the radius.
PointCloud parse_point_text(const std::string& text, bool radii_inline);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);
// One radius per line.
std::vector<double> parse_radii_text(const std::string& text);

std::uint64_t fnv1a(const std::string& data, std::uint64_t h = 0xcbf29ce484222325ULL);
std::string hex64(std::uint64_t v);

Json points_json(const PointList& pts);
Json vector_json(const std::vector<int>& v);

// Adds "input_hash" over the config and any extra input text, and returns the dump.
std::string finalize_report(Json& report, const std::string& extra_inputs = {});

}  // namespace reachtopo::cli
