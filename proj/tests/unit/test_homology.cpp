#include <random>
#include <set>

#include "doctest.h"
#include "reachtopo/homology.hpp"

using namespace reachtopo;

namespace {

// Dense GF(2) rank by Gaussian elimination on bitsets.
int dense_rank(std::vector<std::vector<char>> m) {
    int rank = 0;
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c]) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[pivot], m[rank]);
        for (int r = 0; r < rows; ++r)
            if (r != rank && m[r][c])
                for (int k = 0; k < cols; ++k) m[r][k] ^= m[rank][k];
        ++rank;
    }
    return rank;
}

std::vector<int> dense_betti(const SimplicialComplex& k, int up_to) {
    std::vector<std::vector<Simplex>> by_dim(up_to + 2);
    for (auto& s : k.simplices)
        if (static_cast<int>(s.size()) - 1 <= up_to + 1) by_dim[s.size() - 1].push_back(s);
    std::vector<int> ranks(up_to + 2, 0);
    for (int d = 1; d <= up_to + 1; ++d) {
        std::vector<std::vector<char>> m(by_dim[d - 1].size(), std::vector<char>(by_dim[d].size(), 0));
        for (std::size_t j = 0; j < by_dim[d].size(); ++j)
            for (std::size_t drop = 0; drop < by_dim[d][j].size(); ++drop) {
                Simplex f = by_dim[d][j];
                f.erase(f.begin() + static_cast<long>(drop));
                auto it = std::lower_bound(by_dim[d - 1].begin(), by_dim[d - 1].end(), f);
                m[it - by_dim[d - 1].begin()][j] = 1;
            }
        ranks[d] = dense_rank(m);
    }
    std::vector<int> b;
    for (int d = 0; d <= up_to; ++d) b.push_back(static_cast<int>(by_dim[d].size()) - ranks[d] - ranks[d + 1]);
    return b;
}

SimplicialComplex closure(int n, std::vector<Simplex> tops) {
    std::set<Simplex> all;
    for (auto& t : tops) {
        const int m = static_cast<int>(t.size());
        for (int mask = 1; mask < (1 << m); ++mask) {
            Simplex f;
            for (int i = 0; i < m; ++i)
                if (mask & (1 << i)) f.push_back(t[i]);
            all.insert(f);
        }
    }
    int top = 0;
    for (auto& t : tops) top = std::max(top, static_cast<int>(t.size()) - 1);
    return make_complex(n, top, {all.begin(), all.end()});
}

}  // namespace

TEST_CASE("standard complexes") {
    CHECK(betti_simplicial(closure(3, {{0, 1}, {1, 2}, {0, 2}}), 1) == std::vector<int>{1, 1});
    CHECK(betti_simplicial(closure(3, {{0, 1, 2}}), 2) == std::vector<int>{1, 0, 0});
    // octahedron boundary
    std::vector<Simplex> oct;
    for (int a : {0, 1})
        for (int b : {2, 3})
            for (int c : {4, 5}) oct.push_back({a, b, c});
    CHECK(betti_simplicial(closure(6, oct), 2) == std::vector<int>{1, 0, 1});
    CHECK(betti_simplicial(closure(4, {{0, 1}, {2, 3}}), 1) == std::vector<int>{2, 0});
}

TEST_CASE("minimal torus triangulation") {
    std::vector<Simplex> faces;
    // seven vertex torus
    for (int i = 0; i < 7; ++i) {
        Simplex a{i, (i + 1) % 7, (i + 3) % 7}, b{i, (i + 2) % 7, (i + 3) % 7};
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        faces.push_back(a);
        faces.push_back(b);
    }
    CHECK(betti_simplicial(closure(7, faces), 2) == std::vector<int>{1, 2, 1});
}

TEST_CASE("sparse reduction matches dense elimination on random complexes") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 60; ++t) {
        const int n = std::uniform_int_distribution<int>(4, 9)(rng);
        std::vector<Simplex> tops;
        const int count = std::uniform_int_distribution<int>(2, 12)(rng);
        for (int i = 0; i < count; ++i) {
            const int size = std::uniform_int_distribution<int>(2, 4)(rng);
            std::set<int> s;
            while (static_cast<int>(s.size()) < size) s.insert(std::uniform_int_distribution<int>(0, n - 1)(rng));
            tops.push_back({s.begin(), s.end()});
        }
        std::vector<Simplex> with_vertices = tops;
        for (int v = 0; v < n; ++v) with_vertices.push_back({v});
        auto k = closure(n, with_vertices);
        CHECK(betti_simplicial(k, 2) == dense_betti(k, 2));
    }
}

TEST_CASE("cubical Betti numbers of rasters") {
    auto disk = make_grid(make_point({0, 0}), 1.0, 40, 40);
    auto annulus = disk, two = make_grid(make_point({0, 0}), 1.0, 90, 40);
    for (int j = 0; j < 40; ++j)
        for (int i = 0; i < 40; ++i) {
            const double r = std::hypot(i - 19.5, j - 19.5);
            disk.at(i, j) = r < 15 ? 1 : 0;
            annulus.at(i, j) = (r < 15 && r > 8) ? 1 : 0;
            two.at(i, j) = annulus.at(i, j);
            two.at(i + 45, j) = annulus.at(i, j);
        }
    CHECK(betti_grid_2d(disk) == std::pair<int, int>{1, 0});
    CHECK(betti_grid_2d(annulus) == std::pair<int, int>{1, 1});
    CHECK(betti_grid_2d(two) == std::pair<int, int>{2, 2});
}
