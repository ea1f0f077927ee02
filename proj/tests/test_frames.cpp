#include <cmath>
#include <vector>

#include "doctest.h"
#include "solgeom/builders.hpp"
#include "solgeom/fields.hpp"
#include "solgeom/surface.hpp"

using namespace solgeom;

namespace {

std::vector<ParamPoint<2>> grid_samples(const Surface<2>& s, int n = 21) {
    const auto dom = s.domain();
    std::vector<ParamPoint<2>> out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            ParamPoint<2> u{dom[0].lo + dom[0].width() * i / (n - 1.0),
                            dom[1].lo + dom[1].width() * j / (n - 1.0)};
            if (s.contains(u)) out.push_back(u);
        }
    return out;
}

}  // namespace

TEST_CASE("sphere cap chart center jet") {
    const auto sphere = make_sphere_cap(2.0);
    const ImmersionJet<2> jet = eval_jet(*sphere, {0.0, 0.0});
    CHECK(jet.x.x() == 0.0);
    CHECK(jet.x.y() == 0.0);
    CHECK(jet.x.z() == 2.0);
    CHECK(jet.dx[0].dot(jet.dx[1]) == 0.0);
    CHECK(jet.gram().determinant() == 16.0);  // r^4, chart factor 1 at center
}

TEST_CASE("plane jets are flat and off-origin support is constant") {
    const auto plane = make_plane(3.0);
    for (const auto& u : grid_samples(*plane)) {
        const ImmersionJet<2> jet = eval_jet(*plane, u);
        for (const auto& d2 : jet.ddx) CHECK(d2.norm() == 0.0);

        const GeomFrame<2> toward_origin = frame_at(*plane, u, Orientation::Inward);
        CHECK(toward_origin.support == doctest::Approx(-3.0).epsilon(1e-14));
        CHECK(toward_origin.mean_curv == 0.0);
        CHECK(toward_origin.shape_norm_sq == 0.0);
    }
}

TEST_CASE("spiral cylinder with exp profile passes through (2,0,0)") {
    const auto surf = make_spiral_cylinder(SpiralCurve(RadialProfile::exponential()));
    const ImmersionJet<2> jet = eval_jet(*surf, {0.0, 0.0});
    CHECK(jet.x.x() == 2.0);
    CHECK(jet.x.y() == 0.0);
    CHECK(jet.x.z() == 0.0);
}

TEST_CASE("sphere of radius 2 is the round shrinker") {
    const auto sphere = make_sphere_cap(2.0);
    for (const auto& u : grid_samples(*sphere)) {
        const GeomFrame<2> fr = frame_at(*sphere, u, Orientation::Inward);
        CHECK(fr.support == doctest::Approx(-2.0).epsilon(1e-13));
        CHECK(fr.mean_curv == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(fr.shape_norm_sq == doctest::Approx(0.5).epsilon(1e-13));
        // umbilic: shape operator is I/2 in every chart
        CHECK((fr.shape - 0.5 * TangentMat<2>::Identity()).norm() < 1e-13);
    }
}

TEST_CASE("cylinder of radius sqrt(2) frame values") {
    const double r = std::sqrt(2.0);
    const auto cyl = make_cylinder(r);
    const GeomFrame<2> fr = frame_at(*cyl, {0.7, -0.3}, Orientation::Inward);
    CHECK(fr.support == doctest::Approx(-r).epsilon(1e-14));
    CHECK(fr.mean_curv == doctest::Approx(1.0 / r).epsilon(1e-14));
    CHECK(fr.shape_norm_sq == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(fr.shape(0, 0) == doctest::Approx(1.0 / r).epsilon(1e-14));
    CHECK(std::abs(fr.shape(1, 1)) < 1e-14);
}

TEST_CASE("frame invariants across builders") {
    std::vector<std::unique_ptr<Surface<2>>> surfaces;
    surfaces.push_back(make_sphere_cap(2.0));
    surfaces.push_back(make_ellipsoid_cap(1.0, 1.5, 2.0));
    surfaces.push_back(make_torus(2.0, 0.5));
    surfaces.push_back(make_cylinder(1.3));
    surfaces.push_back(make_spiral_cylinder(SpiralCurve(RadialProfile::arctan(1.0, 1.0))));

    for (const auto& s : surfaces) {
        CAPTURE(s->describe());
        for (const auto& u : grid_samples(*s)) {
            const ImmersionJet<2> jet = eval_jet(*s, u);
            const GeomFrame<2> fr = frame_at(jet, Orientation::Inward, s->outward_sign(u));

            // unit normal orthogonal to the chart columns
            CHECK(std::abs(fr.normal.norm() - 1.0) < 1e-12);
            CHECK(std::abs(fr.normal.dot(jet.dx[0])) < 1e-10 * jet.dx[0].norm());
            CHECK(std::abs(fr.normal.dot(jet.dx[1])) < 1e-10 * jet.dx[1].norm());

            // metric inverse quality
            CHECK((fr.metric * fr.metric_inv - TangentMat<2>::Identity()).cwiseAbs().maxCoeff() <
                  1e-10);

            // reconstruction X = X_tan + f N
            const Vec3 rebuilt = fr.tangent_coords(0) * jet.dx[0] +
                                 fr.tangent_coords(1) * jet.dx[1] + fr.support * fr.normal;
            CHECK((rebuilt - jet.x).norm() <= 1e-10 * (1.0 + jet.x.norm()));

            // Newton: H^2/n <= |A|^2
            CHECK(fr.mean_curv * fr.mean_curv / 2.0 <= fr.shape_norm_sq + 1e-12);
        }
    }
}

TEST_CASE("umbilic builders meet Newton's inequality with equality") {
    const auto sphere = make_sphere_cap(1.5);
    for (const auto& u : grid_samples(*sphere)) {
        const GeomFrame<2> fr = frame_at(*sphere, u, Orientation::Outward);
        CHECK(fr.mean_curv * fr.mean_curv / 2.0 == doctest::Approx(fr.shape_norm_sq).epsilon(1e-12));
    }
}

TEST_CASE("orientation flip negates normal, support and curvature data only") {
    const auto torus = make_torus(2.0, 0.5);
    for (const auto& u : grid_samples(*torus, 9)) {
        const GeomFrame<2> in = frame_at(*torus, u, Orientation::Inward);
        const GeomFrame<2> out = frame_at(*torus, u, Orientation::Outward);
        CHECK((in.normal + out.normal).norm() < 1e-14);
        CHECK(in.support == doctest::Approx(-out.support).epsilon(1e-14));
        CHECK(in.mean_curv == doctest::Approx(-out.mean_curv).epsilon(1e-14));
        CHECK((in.second_form + out.second_form).norm() < 1e-12);
        CHECK((in.metric - out.metric).norm() == 0.0);
        CHECK(in.shape_norm_sq == doctest::Approx(out.shape_norm_sq).epsilon(1e-13));
    }
}

TEST_CASE("support_based reduces to the plain support at the origin") {
    const auto sphere = make_sphere_cap(2.0);
    const GeomFrame<2> fr = frame_at(*sphere, {0.2, -0.4}, Orientation::Inward);
    CHECK(support_based(fr, Vec3::Zero()) == fr.support);
    CHECK(support_based(fr, Vec3::Zero()) == doctest::Approx(-2.0).epsilon(1e-13));
}

TEST_CASE("support based at an interior point of the sphere") {
    // Equator point (2,0,0) in a cap chart around the +x pole.
    ImmersionJet<2> jet;
    jet.x = Vec3(2, 0, 0);
    jet.dx[0] = Vec3(0, 2, 0);
    jet.dx[1] = Vec3(0, 0, 2);
    jet.second(0, 0) = Vec3(-2, 0, 0);
    jet.second(0, 1) = Vec3(0, 0, 0);
    jet.second(1, 1) = Vec3(-2, 0, 0);
    const GeomFrame<2> fr = frame_at(jet, Orientation::Inward, +1.0);
    CHECK((fr.normal - Vec3(-1, 0, 0)).norm() < 1e-15);
    CHECK(support_based(fr, Vec3(1, 0, 0)) == doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("plane support based above the plane") {
    const auto plane = make_plane(0.0);  // z = 0
    for (const auto& u : grid_samples(*plane, 7)) {
        const GeomFrame<2> fr = frame_at(*plane, u, Orientation::Outward);  // N = +z
        CHECK(support_based(fr, Vec3(0, 0, 5)) == doctest::Approx(-5.0).epsilon(1e-14));
    }
}

TEST_CASE("out-of-domain and degenerate jets are rejected") {
    const auto sphere = make_sphere_cap(2.0);
    CHECK_THROWS_AS(eval_jet(*sphere, {0.95, 0.0}), OutOfDomainError);
    CHECK_THROWS_AS(eval_jet(*sphere, {0.7, 0.7}), OutOfDomainError);  // outside the disc

    // collinear first partials
    ImmersionJet<2> bad;
    bad.x = Vec3(0, 0, 0);
    bad.dx[0] = Vec3(1, 0, 0);
    bad.dx[1] = Vec3(2, 0, 0);
    std::vector<ImmersionJet<2>> jets(25, bad);
    const TabulatedSurface<2> tab(ParamGrid::box({0, 1}, {0, 1}, 5, 5), jets);
    CHECK_THROWS_AS(eval_jet<2>(tab, {0.5, 0.5}), DegenerateJetError);
    CHECK(bad.degenerate());
}

TEST_CASE("canonical shrinkers satisfy the soliton equation to rounding") {
    for (int p = 0; p <= 2; ++p) {
        CAPTURE(p);
        const auto surf = canonical_shrinker<2>(p);
        for (const auto& u : grid_samples(*surf)) {
            const GeomFrame<2> fr = frame_at(*surf, u, Orientation::Inward);
            CHECK(std::abs(soliton_residual(fr, kShrinkerEpsilon)) < 1e-12);
            if (p >= 1) {
                CHECK(std::abs(fr.shape_norm_sq - 0.5) < 1e-12);
                CHECK(fr.support == doctest::Approx(-std::sqrt(2.0 * p)).epsilon(1e-13));
            } else {
                CHECK(fr.support == 0.0);
            }
        }
    }
    CHECK_THROWS_AS(canonical_shrinker<2>(3), BadDimensionError);
    CHECK_THROWS_AS(canonical_shrinker<1>(2), BadDimensionError);
    CHECK_THROWS_AS(canonical_shrinker<2>(-1), BadDimensionError);
}

TEST_CASE("canonical circle is the n=1 shrinker") {
    const auto circle = canonical_shrinker<1>(1);
    for (double t : {-2.0, -0.5, 0.0, 1.2, 2.9}) {
        const GeomFrame<1> fr = frame_at(*circle, {t}, Orientation::Inward);
        CHECK(std::abs(soliton_residual(fr, kShrinkerEpsilon)) < 1e-14);
        CHECK(fr.support == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-14));
    }
}

TEST_CASE("canonical shrinkers obey the support bound f^2 <= 4 n |A|^2") {
    for (int p = 1; p <= 2; ++p) {
        const auto surf = canonical_shrinker<2>(p);
        double max_f_sq = 0.0, max_a_sq = 0.0;
        for (const auto& u : grid_samples(*surf)) {
            const GeomFrame<2> fr = frame_at(*surf, u, Orientation::Inward);
            max_f_sq = std::max(max_f_sq, fr.support * fr.support);
            max_a_sq = std::max(max_a_sq, fr.shape_norm_sq);
        }
        CHECK(max_f_sq <= 4.0 * 2.0 * max_a_sq + 1e-12);
        CHECK(max_f_sq <= 2.0 * 2.0 + 1e-12);  // f^2 <= 2n
    }
}

TEST_CASE("tabulated surfaces return the stored jet") {
    const auto sphere = make_sphere_cap(2.0);
    const ParamGrid grid = ParamGrid::box({-0.4, 0.4}, {-0.4, 0.4}, 5, 5);
    std::vector<ImmersionJet<2>> jets;
    for (int j = 0; j < 5; ++j)
        for (int i = 0; i < 5; ++i) {
            const auto node = grid.node(i, j);
            jets.push_back(sphere->jet({node[0], node[1]}));
        }
    const TabulatedSurface<2> tab(grid, jets, -1.0);
    const ImmersionJet<2> snapped = tab.jet({-0.4 + 0.2 + 0.04, -0.4});  // near node (1,0)
    const auto node = grid.node(1, 0);
    CHECK((snapped.x - sphere->jet({node[0], node[1]}).x).norm() == 0.0);
}
