#include <random>

#include <benchmark/benchmark.h>

#include "reachtopo/appendix_oracles.hpp"
#include "reachtopo/complexes.hpp"
#include "reachtopo/constants.hpp"
#include "reachtopo/homology.hpp"

using namespace reachtopo;

static void BM_MinScaledBall(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> U(-1, 1), R(0.2, 2);
    PointList pts;
    std::vector<double> rs;
    for (int i = 0; i < k; ++i) {
        pts.push_back(make_point({U(rng), U(rng), U(rng)}));
        rs.push_back(R(rng));
    }
    for (auto _ : state) benchmark::DoNotOptimize(min_scaled_ball(pts, rs).value);
}
BENCHMARK(BM_MinScaledBall)->Arg(2)->Arg(4)->Arg(8)->Arg(32);

static void BM_RipsSphere(benchmark::State& state) {
    auto sphere = make_sphere(3, 1.0);
    auto cloud = sample_uniform(*sphere, static_cast<int>(state.range(0)), 3);
    cloud.radii.assign(cloud.points.size(), 0.3);
    for (auto _ : state) benchmark::DoNotOptimize(build_rips(cloud, 3).simplices.size());
}
BENCHMARK(BM_RipsSphere)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

static void BM_BettiRipsSphere(benchmark::State& state) {
    auto sphere = make_sphere(3, 1.0);
    auto cloud = sample_uniform(*sphere, static_cast<int>(state.range(0)), 3);
    cloud.radii.assign(cloud.points.size(), 0.3);
    auto k = build_rips(cloud, 3);
    for (auto _ : state) benchmark::DoNotOptimize(betti_simplicial(k, 2));
}
BENCHMARK(BM_BettiRipsSphere)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

static void BM_CechCircle(benchmark::State& state) {
    auto circle = make_circle(1.0);
    auto cloud = sample_with_noise(*circle, static_cast<int>(state.range(0)), 0.05, 5);
    cloud.radii.assign(cloud.points.size(), 0.4);
    for (auto _ : state) benchmark::DoNotOptimize(build_cech_ambient(cloud, 2).simplices.size());
}
BENCHMARK(BM_CechCircle)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_RestrictedCechSphere(benchmark::State& state) {
    auto sphere = make_sphere(3, 1.0);
    auto cloud = sample_with_noise(*sphere, 60, 0.05, 7);
    cloud.radii.assign(cloud.points.size(), 0.5);
    for (auto _ : state) benchmark::DoNotOptimize(build_cech_restricted(cloud, *sphere, 3).simplices.size());
}
BENCHMARK(BM_RestrictedCechSphere)->Unit(benchmark::kMillisecond);

static void BM_MaxRatio(benchmark::State& state) {
    RatioProblem p;
    p.kind = state.range(0) == 0 ? ComplexKind::Cech : ComplexKind::Rips;
    for (auto _ : state) benchmark::DoNotOptimize(max_ratio(p).value);
}
BENCHMARK(BM_MaxRatio)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_Oracle(benchmark::State& state) {
    auto sphere = make_sphere(3, 1.0);
    const auto kind = all_oracles().at(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(run_oracle(kind, *sphere, 1000, 11).violations);
    state.SetLabel(to_string(kind));
}
BENCHMARK(BM_Oracle)->DenseRange(0, 6)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
