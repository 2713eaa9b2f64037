#include "cli_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace reachtopo::cli {

PointCloud parse_point_text(const std::string& text, bool radii_inline) {
    PointCloud cloud;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::size_t width = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::vector<double> vals;
        double v;
        while (ls >> v) vals.push_back(v);
        if (!ls.eof()) throw InvalidArgument("point file line " + std::to_string(lineno) + ": not a number");
        if (vals.size() < (radii_inline ? 2u : 1u))
            throw InvalidArgument("point file line " + std::to_string(lineno) + ": too few columns");
        if (width == 0) width = vals.size();
        if (vals.size() != width)
            throw InvalidArgument("point file line " + std::to_string(lineno) + ": inconsistent column count");
        if (radii_inline) {
            cloud.radii.push_back(vals.back());
            vals.pop_back();
        }
        cloud.points.push_back(Eigen::Map<Point>(vals.data(), static_cast<long>(vals.size())));
    }
    if (cloud.points.empty()) throw InvalidArgument("point file has no points");
    return cloud;
}

std::vector<double> parse_radii_text(const std::string& text) {
    std::vector<double> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        out.push_back(std::stod(line));
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InvalidArgument("cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InvalidArgument("cannot write " + path);
    f << content;
}

std::uint64_t fnv1a(const std::string& data, std::uint64_t h) {
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

Json points_json(const PointList& pts) {
    Json arr = Json::array();
    for (auto& p : pts) {
        Json row = Json::array();
        for (int k = 0; k < p.size(); ++k) row.push_back(p[k]);
        arr.push_back(row);
    }
    return arr;
}

Json vector_json(const std::vector<int>& v) {
    Json arr = Json::array();
    for (int x : v) arr.push_back(x);
    return arr;
}

std::string finalize_report(Json& report, const std::string& extra_inputs) {
    const std::string config = report.contains("config") ? report["config"].dump() : std::string{};
    report["input_hash"] = hex64(fnv1a(extra_inputs, fnv1a(config)));
    return report.dump(2) + "\n";
}

}  // namespace reachtopo::cli
