#include <benchmark/benchmark.h>

#include <numbers>

#include "solgeom/builders.hpp"
#include "solgeom/identities.hpp"
#include "solgeom/omission.hpp"

using namespace solgeom;

static void BM_FrameAt(benchmark::State& state) {
    const auto ell = make_ellipsoid_cap(1.0, 1.5, 2.0);
    const ParamPoint<2> u{0.21, -0.34};
    const double sign = ell->outward_sign(u);
    for (auto _ : state) {
        GeomFrame<2> fr = frame_at(ell->jet(u), Orientation::Inward, sign);
        benchmark::DoNotOptimize(fr);
    }
}
BENCHMARK(BM_FrameAt);

static void BM_SampleFrames(benchmark::State& state) {
    const auto torus = make_torus(2.0, 0.5);
    const int n = int(state.range(0));
    const ParamGrid grid = ParamGrid::box({-2.5, 2.5}, {-2.5, 2.5}, n, n);
    for (auto _ : state) {
        FrameField<2> frames = sample_frames(*torus, grid, Orientation::Outward);
        benchmark::DoNotOptimize(frames.frames.data());
    }
    state.SetItemsProcessed(state.iterations() * grid.node_count());
}
BENCHMARK(BM_SampleFrames)->Arg(41)->Arg(81)->Arg(161);

static void BM_LaplaceBeltrami(benchmark::State& state) {
    const auto torus = make_torus(2.0, 0.5);
    const int n = int(state.range(0));
    const ParamGrid grid = ParamGrid::box({-2.5, 2.5}, {-2.5, 2.5}, n, n);
    const FrameField<2> frames = sample_frames(*torus, grid, Orientation::Outward);
    const ScalarField support =
        frame_scalar(frames, [](const GeomFrame<2>& fr) { return fr.support; });
    for (auto _ : state) {
        ScalarField lap = laplace_beltrami(support, frames);
        benchmark::DoNotOptimize(lap.values.data());
    }
    state.SetItemsProcessed(state.iterations() * grid.node_count());
}
BENCHMARK(BM_LaplaceBeltrami)->Arg(81)->Arg(161)->Arg(321);

static void BM_MasterIdentity(benchmark::State& state) {
    const auto ell = make_ellipsoid_cap(1.0, 1.5, 2.0);
    const ParamGrid grid = ParamGrid::box({-0.55, 0.55}, {-0.55, 0.55}, 83, 83);
    for (auto _ : state) {
        IdentityReport rep = check_master_identity(*ell, Orientation::Inward, grid);
        benchmark::DoNotOptimize(rep.residual_inf);
    }
}
BENCHMARK(BM_MasterIdentity);

static void BM_ChainSweep(benchmark::State& state) {
    const SpiralCurve curve(RadialProfile::arctan(1.0, 1.0));
    const int n = int(state.range(0));
    const Linspace ts{-50.0, 50.0, n};
    const Linspace ss{-100.0, 100.0, n};
    for (auto _ : state) {
        ChainReport rep = inequality_chain_check(curve, ts, ss);
        benchmark::DoNotOptimize(rep.min_norm_sq);
    }
    state.SetItemsProcessed(state.iterations() * std::int64_t(n) * n);
}
BENCHMARK(BM_ChainSweep)->Arg(201)->Arg(501)->Arg(2001);

static void BM_RasterSweep(benchmark::State& state) {
    const auto circle = make_circle(1.0, 3.2);
    std::vector<double> angles(1000);
    for (int i = 0; i < 1000; ++i)
        angles[std::size_t(i)] = -std::numbers::pi + 2.0 * std::numbers::pi * i / 1000.0;
    const auto lines = sample_tangent_lines(*circle, Orientation::Inward, angles);
    const Box2 box{{-2.0, 2.0}, {-2.0, 2.0}};
    const int cells = int(state.range(0));
    for (auto _ : state) {
        CoverageRaster raster = coverage_raster(lines, box, cells, cells);
        benchmark::DoNotOptimize(raster.min_dist.data());
    }
    state.SetItemsProcessed(state.iterations() * std::int64_t(cells) * cells * 1000);
}
BENCHMARK(BM_RasterSweep)->Arg(100)->Arg(200)->Arg(400);

BENCHMARK_MAIN();
