#include <random>

#include "doctest.h"
#include "reachtopo/grid.hpp"

using namespace reachtopo;

TEST_CASE("grid serialization round trip") {
    auto g = make_grid(make_point({-1, 2}), 0.25, 5, 3);
    for (std::size_t i = 0; i < g.values.size(); ++i) g.values[i] = (i % 3 == 0) ? 1.0 : 0.0;
    auto back = parse_grid(serialize_grid(g));
    CHECK(back.dims == g.dims);
    CHECK(back.spacing == g.spacing);
    CHECK(back.values == g.values);
    CHECK((back.cell_center(2, 1) - make_point({-0.5, 2.25})).norm() < 1e-12);
    CHECK_THROWS_AS(parse_grid("garbage"), InvalidArgument);
}

TEST_CASE("distance transform matches brute force") {
    std::mt19937_64 rng(2);
    const int nx = 23, ny = 17;
    std::vector<char> mask(nx * ny, 0);
    for (auto& m : mask) m = std::uniform_int_distribution<int>(0, 20)(rng) == 0;
    mask[5] = 1;
    auto dt = squared_distance_transform(mask, nx, ny);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            double best = 1e18;
            for (int b = 0; b < ny; ++b)
                for (int a = 0; a < nx; ++a)
                    if (mask[b * nx + a]) best = std::min(best, double((a - i) * (a - i) + (b - j) * (b - j)));
            CHECK(dt[j * nx + i] == best);
        }
}
