#include "reachtopo/complexes.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <sstream>

namespace reachtopo {

bool simplex_less(const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

bool SimplicialComplex::contains(const Simplex& s) const {
    return std::binary_search(simplices.begin(), simplices.end(), s, simplex_less);
}

std::size_t SimplicialComplex::count(int dim) const {
    std::size_t n = 0;
    for (auto& s : simplices)
        if (static_cast<int>(s.size()) == dim + 1) ++n;
    return n;
}

int SimplicialComplex::top_dim() const {
    return simplices.empty() ? -1 : static_cast<int>(simplices.back().size()) - 1;
}

void SimplicialComplex::validate() const {
    for (std::size_t i = 0; i < simplices.size(); ++i) {
        const auto& s = simplices[i];
        if (s.empty()) throw InvalidArgument("complex: empty simplex");
        if (static_cast<int>(s.size()) - 1 > max_dim) throw InvalidArgument("complex: simplex above max_dim");
        for (std::size_t k = 0; k < s.size(); ++k) {
            if (s[k] < 0 || s[k] >= n_vertices) throw InvalidArgument("complex: vertex index out of range");
            if (k && s[k] <= s[k - 1]) throw InvalidArgument("complex: simplex vertices not strictly increasing");
        }
        if (i && !simplex_less(simplices[i - 1], s)) throw InvalidArgument("complex: unsorted or duplicate simplices");
        if (s.size() > 1) {
            Simplex f(s.size() - 1);
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                for (std::size_t k = 0, m = 0; k < s.size(); ++k)
                    if (k != drop) f[m++] = s[k];
                if (!contains(f)) throw InvalidArgument("complex: not closed under faces");
            }
        }
    }
    for (int v = 0; v < n_vertices; ++v)
        if (!contains(Simplex{v})) throw InvalidArgument("complex: missing vertex");
}

SimplicialComplex make_complex(int n_vertices, int max_dim, std::vector<Simplex> simplices) {
    SimplicialComplex c;
    c.n_vertices = n_vertices;
    c.max_dim = max_dim;
    for (auto& s : simplices) std::sort(s.begin(), s.end());
    std::sort(simplices.begin(), simplices.end(), simplex_less);
    simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
    c.simplices = std::move(simplices);
    c.validate();
    return c;
}

namespace {

void require_radii(const PointCloud& cloud) {
    cloud.validate();
    if (!cloud.has_radii()) throw InvalidArgument("complex construction needs per-point radii");
    if (cloud.points.empty()) throw InvalidArgument("complex construction needs at least one point");
}

// Grows simplices vertex by vertex in increasing order; `accept` is asked about every
// candidate whose facets through the last vertex are already known to be present.
SimplicialComplex expand(const PointCloud& cloud, int max_dim,
                         const std::function<bool(const Simplex&)>& accept) {
    const int n = static_cast<int>(cloud.points.size());
    std::vector<std::vector<int>> up(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((cloud.points[i] - cloud.points[j]).norm() < cloud.radii[i] + cloud.radii[j]) up[i].push_back(j);
    std::vector<Simplex> out;
    Simplex cur;
    std::function<void(const std::vector<int>&)> rec = [&](const std::vector<int>& cand) {
        out.push_back(cur);
        if (static_cast<int>(cur.size()) > max_dim) return;
        for (int v : cand) {
            cur.push_back(v);
            if (cur.size() <= 2 || accept(cur)) {
                std::vector<int> next;
                std::set_intersection(cand.begin(), cand.end(), up[v].begin(), up[v].end(),
                                      std::back_inserter(next));
                rec(next);
            }
            cur.pop_back();
        }
    };
    for (int v = 0; v < n; ++v) {
        cur = {v};
        rec(up[v]);
    }
    SimplicialComplex c;
    c.n_vertices = n;
    c.max_dim = max_dim;
    std::sort(out.begin(), out.end(), simplex_less);
    c.simplices = std::move(out);
    return c;
}

}  // namespace

SimplicialComplex build_rips(const PointCloud& cloud, int max_dim) {
    require_radii(cloud);
    if (max_dim < 0) throw InvalidArgument("max_dim must be >= 0");
    return expand(cloud, max_dim, [](const Simplex&) { return true; });
}

SimplicialComplex build_cech_ambient(const PointCloud& cloud, int max_dim) {
    require_radii(cloud);
    if (max_dim < 0) throw InvalidArgument("max_dim must be >= 0");
    PointList pts;
    std::vector<double> rs;
    auto c = expand(cloud, max_dim, [&](const Simplex& s) {
        pts.clear();
        rs.clear();
        for (int v : s) {
            pts.push_back(cloud.points[v]);
            rs.push_back(cloud.radii[v]);
        }
        return balls_have_common_point(pts, rs);
    });
    return c;
}

SimplicialComplex build_cech_restricted(const PointCloud& cloud, const Shape& shape, int max_dim,
                                        RestrictedMethod method, RestrictedBuildStats* stats) {
    require_radii(cloud);
    if (max_dim < 0) throw InvalidArgument("max_dim must be >= 0");
    method = shape.resolve(method);
    for (std::size_t i = 0; i < cloud.points.size(); ++i) {
        shape.check_dim(cloud.points[i]);
        if (!(shape.distance_to(cloud.points[i]) < cloud.radii[i]))
            throw PreconditionError("restricted ball of point " + std::to_string(i) + " is empty");
    }
    RestrictedBuildStats local;
    PointList pts;
    std::vector<double> rs;
    auto test = [&](const Simplex& s) {
        pts.clear();
        rs.clear();
        for (int v : s) {
            pts.push_back(cloud.points[v]);
            rs.push_back(cloud.radii[v]);
        }
        ++local.tests;
        Tri t = shape.restricted_intersection(pts, rs, method);
        if (t == Tri::Indeterminate) ++local.indeterminate;
        return t == Tri::NonEmpty;
    };
    // Restricted edges need not coincide with ambient ones, so edges are tested too.
    const int n = static_cast<int>(cloud.points.size());
    std::vector<std::vector<int>> up(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (test({i, j})) up[i].push_back(j);
    std::vector<Simplex> out;
    Simplex cur;
    std::function<void(const std::vector<int>&)> rec = [&](const std::vector<int>& cand) {
        out.push_back(cur);
        if (static_cast<int>(cur.size()) > max_dim) return;
        for (int v : cand) {
            cur.push_back(v);
            if (cur.size() <= 2 || test(cur)) {
                std::vector<int> next;
                std::set_intersection(cand.begin(), cand.end(), up[v].begin(), up[v].end(),
                                      std::back_inserter(next));
                rec(next);
            }
            cur.pop_back();
        }
    };
    for (int v = 0; v < n; ++v) {
        cur = {v};
        rec(up[v]);
    }
    if (stats) *stats = local;
    SimplicialComplex c;
    c.n_vertices = n;
    c.max_dim = max_dim;
    std::sort(out.begin(), out.end(), simplex_less);
    c.simplices = std::move(out);
    return c;
}

bool is_subcomplex(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.n_vertices != b.n_vertices) throw InvalidArgument("is_subcomplex: vertex count mismatch");
    for (auto& s : a.simplices)
        if (!b.contains(s)) return false;
    return true;
}

std::string serialize_complex(const SimplicialComplex& c) {
    std::ostringstream os;
    os << "complex n=" << c.n_vertices << " maxdim=" << c.max_dim << '\n';
    for (auto& s : c.simplices) {
        for (std::size_t k = 0; k < s.size(); ++k) os << (k ? " " : "") << s[k];
        os << '\n';
    }
    return os.str();
}

SimplicialComplex parse_complex(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw InvalidArgument("complex: missing header");
    int n = -1, k = -1;
    if (std::sscanf(line.c_str(), "complex n=%d maxdim=%d", &n, &k) != 2 || n < 0 || k < 0)
        throw InvalidArgument("complex: bad header");
    std::vector<Simplex> simplices;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        Simplex s;
        int v;
        while (ls >> v) s.push_back(v);
        if (!ls.eof()) throw InvalidArgument("complex: bad simplex line");
        simplices.push_back(s);
    }
    return make_complex(n, k, std::move(simplices));
}

}  // namespace reachtopo
