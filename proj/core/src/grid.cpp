#include "reachtopo/grid.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

namespace reachtopo {

Point GridField::cell_center(int i, int j) const {
    Point p = origin;
    p[0] += spacing * i;
    p[1] += spacing * j;
    return p;
}

void GridField::validate() const {
    if (dims.size() != 2) throw InvalidArgument("grid: only 2D fields are supported");
    if (!(spacing > 0)) throw InvalidArgument("grid: spacing must be positive");
    if (origin.size() != 2) throw InvalidArgument("grid: origin must be 2D");
    if (dims[0] < 1 || dims[1] < 1) throw InvalidArgument("grid: empty dimensions");
    if (values.size() != static_cast<std::size_t>(dims[0]) * dims[1])
        throw InvalidArgument("grid: value count does not match dimensions");
    for (double v : values)
        if (!std::isfinite(v)) throw InvalidArgument("grid: non-finite value");
}

GridField make_grid(const Point& origin, double spacing, int nx, int ny, double fill) {
    GridField g;
    g.origin = origin;
    g.spacing = spacing;
    g.dims = {nx, ny};
    g.values.assign(static_cast<std::size_t>(nx) * ny, fill);
    return g;
}

std::string serialize_grid(const GridField& g) {
    g.validate();
    std::ostringstream os;
    os << std::setprecision(17);
    os << "grid " << g.nx() << ' ' << g.ny() << " spacing=" << g.spacing << " origin=" << g.origin[0]
       << ',' << g.origin[1] << '\n';
    for (int j = 0; j < g.ny(); ++j) {
        for (int i = 0; i < g.nx(); ++i) {
            if (i) os << ' ';
            os << g.at(i, j);
        }
        os << '\n';
    }
    return os.str();
}

GridField parse_grid(const std::string& text) {
    std::istringstream is(text);
    std::string tag;
    GridField g;
    int nx = 0, ny = 0;
    if (!(is >> tag >> nx >> ny) || tag != "grid") throw InvalidArgument("grid: bad header");
    std::string tok;
    bool have_spacing = false, have_origin = false;
    for (int k = 0; k < 2 && is >> tok; ++k) {
        if (tok.rfind("spacing=", 0) == 0) {
            g.spacing = std::stod(tok.substr(8));
            have_spacing = true;
        } else if (tok.rfind("origin=", 0) == 0) {
            std::string c = tok.substr(7);
            auto comma = c.find(',');
            if (comma == std::string::npos) throw InvalidArgument("grid: bad origin");
            g.origin = make_point({std::stod(c.substr(0, comma)), std::stod(c.substr(comma + 1))});
            have_origin = true;
        } else {
            throw InvalidArgument("grid: unknown header field " + tok);
        }
    }
    if (!have_spacing || !have_origin) throw InvalidArgument("grid: header needs spacing and origin");
    g.dims = {nx, ny};
    g.values.resize(static_cast<std::size_t>(nx) * ny);
    for (auto& v : g.values)
        if (!(is >> v)) throw InvalidArgument("grid: truncated values");
    g.validate();
    return g;
}

namespace {

void edt_1d(const double* f, double* d, int n, int* v, double* z) {
    const double inf = std::numeric_limits<double>::infinity();
    int k = -1;
    for (int q = 0; q < n; ++q) {
        if (f[q] == inf) continue;
        double s = -inf;
        while (k >= 0) {
            s = ((f[q] + double(q) * q) - (f[v[k]] + double(v[k]) * v[k])) / (2.0 * q - 2.0 * v[k]);
            if (s <= z[k]) {
                --k;
                continue;
            }
            break;
        }
        if (k < 0) s = -inf;
        ++k;
        v[k] = q;
        z[k] = s;
        z[k + 1] = inf;
    }
    if (k < 0) {
        for (int q = 0; q < n; ++q) d[q] = inf;
        return;
    }
    k = 0;
    for (int q = 0; q < n; ++q) {
        while (z[k + 1] < q) ++k;
        d[q] = double(q - v[k]) * (q - v[k]) + f[v[k]];
    }
}

}  // namespace

std::vector<double> squared_distance_transform(const std::vector<char>& mask, int nx, int ny) {
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> out(static_cast<std::size_t>(nx) * ny);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = mask[i] ? 0.0 : inf;
    const int n = std::max(nx, ny);
    std::vector<double> f(n), d(n), z(n + 1);
    std::vector<int> v(n);
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) f[i] = out[static_cast<std::size_t>(j) * nx + i];
        edt_1d(f.data(), d.data(), nx, v.data(), z.data());
        for (int i = 0; i < nx; ++i) out[static_cast<std::size_t>(j) * nx + i] = d[i];
    }
    for (int i = 0; i < nx; ++i) {
        for (int j = 0; j < ny; ++j) f[j] = out[static_cast<std::size_t>(j) * nx + i];
        edt_1d(f.data(), d.data(), ny, v.data(), z.data());
        for (int j = 0; j < ny; ++j) out[static_cast<std::size_t>(j) * nx + i] = d[j];
    }
    return out;
}

}  // namespace reachtopo
