#include <cmath>

#include "doctest.h"
#include "solgeom/builders.hpp"
#include "solgeom/operators.hpp"

using namespace solgeom;

namespace {

double interior_sup(const ScalarField& f, int margin) {
    double sup = 0.0;
    for (int j = 0; j < (f.grid.dim() == 2 ? f.grid.count(1) : 1); ++j)
        for (int i = 0; i < f.grid.count(0); ++i)
            if (f.grid.is_interior(i, j, margin)) sup = std::max(sup, std::abs(f.at(i, j)));
    return sup;
}

}  // namespace

TEST_CASE("discrete operators annihilate constants exactly") {
    const auto torus = make_torus(2.0, 0.5);
    const ParamGrid grid = ParamGrid::box({-1.0, 1.0}, {-1.0, 1.0}, 17, 17);
    const FrameField<2> frames = sample_frames(*torus, grid, Orientation::Inward);
    const ScalarField ones(grid, 4.75);

    const VectorField<2> grad = surface_gradient(ones, frames);
    for (int a = 0; a < 2; ++a)
        for (double v : grad.comp[std::size_t(a)]) CHECK(v == 0.0);

    const ScalarField lap = laplace_beltrami(ones, frames);
    for (double v : lap.values) CHECK(v == 0.0);

    const ScalarField drifted = drift_laplacian(DriftOperator{-0.5}, ones, frames);
    for (double v : drifted.values) CHECK(v == 0.0);
}

TEST_CASE("flat chart: gradient of a linear field is exact, laplacian vanishes") {
    const auto plane = make_plane(0.0);
    const ParamGrid grid = ParamGrid::box({-1.0, 1.0}, {-1.0, 1.0}, 21, 21);
    const FrameField<2> frames = sample_frames(*plane, grid, Orientation::Outward);

    ScalarField lin(grid);
    for (int j = 0; j < 21; ++j)
        for (int i = 0; i < 21; ++i) {
            const auto node = grid.node(i, j);
            lin.at(i, j) = node[0];  // first chart coordinate
        }

    const VectorField<2> grad = surface_gradient(lin, frames);
    for (int j = 2; j < 19; ++j)
        for (int i = 2; i < 19; ++i) {
            CHECK(grad.comp[0][grid.index(i, j)] == doctest::Approx(1.0).epsilon(1e-13));
            CHECK(std::abs(grad.comp[1][grid.index(i, j)]) < 1e-13);
        }

    const ScalarField lap = laplace_beltrami(lin, frames);
    CHECK(interior_sup(lap, 2) < 1e-12);
}

TEST_CASE("grid mismatch is detected") {
    const auto plane = make_plane(0.0);
    const ParamGrid grid = ParamGrid::box({-1.0, 1.0}, {-1.0, 1.0}, 9, 9);
    const ParamGrid other = ParamGrid::box({-1.0, 1.0}, {-1.0, 1.0}, 11, 9);
    const FrameField<2> frames = sample_frames(*plane, grid, Orientation::Outward);
    const ScalarField field(other);
    CHECK_THROWS_AS(surface_gradient(field, frames), GridMismatchError);
    CHECK_THROWS_AS(laplace_beltrami(field, frames), GridMismatchError);
}

TEST_CASE("height function is a first eigenfunction of the unit sphere") {
    // Delta x3 = -2 x3 on the round unit sphere; second-order convergence.
    const auto sphere = make_sphere_cap(1.0);
    double res[2];
    ParamGrid grid = ParamGrid::box({-0.4, 0.4}, {-0.4, 0.4}, 81, 81);
    for (int level = 0; level < 2; ++level) {
        const FrameField<2> frames = sample_frames(*sphere, grid, Orientation::Outward);
        const ScalarField height =
            frame_scalar(frames, [](const GeomFrame<2>& fr) { return fr.position.z(); });
        ScalarField r = laplace_beltrami(height, frames);
        for (std::size_t k = 0; k < r.values.size(); ++k)
            r.values[k] += 2.0 * frames.frames[k].position.z();
        res[level] = interior_sup(r, 2);
        grid = grid.refined();
    }
    CHECK(res[0] < 1e-2);
    const double order = std::log2(res[0] / res[1]);
    CHECK(order > 1.7);
    CHECK(order < 2.3);
}

TEST_CASE("constant support field has zero drift laplacian on the shrinker cylinder") {
    const auto cyl = make_cylinder(std::sqrt(2.0));
    const ParamGrid grid = ParamGrid::box({-2.0, 2.0}, {-1.0, 1.0}, 33, 17);
    const FrameField<2> frames = sample_frames(*cyl, grid, Orientation::Inward);
    const ScalarField support =
        frame_scalar(frames, [](const GeomFrame<2>& fr) { return fr.support; });

    const ScalarField lf = drift_laplacian(DriftOperator{kShrinkerEpsilon}, support, frames);
    CHECK(interior_sup(lf, 2) < 1e-10);

    // and (|A|^2 - 1/2) f vanishes termwise
    for (const auto& fr : frames.frames)
        CHECK(std::abs((fr.shape_norm_sq - 0.5) * fr.support) < 1e-13);
}

TEST_CASE("soliton residual spot values") {
    const auto sphere = make_sphere_cap(2.0);
    const GeomFrame<2> fs = frame_at(*sphere, {0.1, 0.2}, Orientation::Inward);
    CHECK(std::abs(soliton_residual(fs, kShrinkerEpsilon)) < 1e-13);

    const auto plane = make_plane(3.0);
    const GeomFrame<2> fp = frame_at(*plane, {0.4, -0.2}, Orientation::Inward);
    CHECK(soliton_residual(fp, kShrinkerEpsilon) == doctest::Approx(-1.5).epsilon(1e-13));
    const GeomFrame<2> fp_out = frame_at(*plane, {0.4, -0.2}, Orientation::Outward);
    CHECK(soliton_residual(fp_out, kShrinkerEpsilon) == doctest::Approx(1.5).epsilon(1e-13));

    const auto cyl = make_cylinder(std::sqrt(2.0));
    const GeomFrame<2> fc = frame_at(*cyl, {0.3, 0.5}, Orientation::Inward);
    CHECK(std::abs(soliton_residual(fc, kShrinkerEpsilon)) < 1e-13);

    // expander residual with the opposite epsilon is nonzero on the shrinker sphere
    CHECK(std::abs(soliton_residual(fs, kExpanderEpsilon)) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("weighted mean curvature vanishes on shrinkers only") {
    const auto sphere = make_sphere_cap(2.0);
    const GeomFrame<2> fs = frame_at(*sphere, {0.1, -0.3}, Orientation::Inward);
    CHECK(std::abs(weighted_mean_curv(fs)) < 1e-13);

    const auto unit = make_sphere_cap(1.0);
    const GeomFrame<2> fu = frame_at(*unit, {0.1, -0.3}, Orientation::Inward);
    // H = 2, f = -1: H_f = 2 - 1/2
    CHECK(weighted_mean_curv(fu) == doctest::Approx(1.5).epsilon(1e-13));
}
