#include "doctest.h"
#include "solgeom/grid.hpp"

using namespace solgeom;

TEST_CASE("spacing follows the exact formula") {
    const ParamGrid g = ParamGrid::box({-1.0, 1.0}, {0.0, 3.0}, 81, 41);
    CHECK(g.spacing(0) == (1.0 - (-1.0)) / 80.0);
    CHECK(g.spacing(1) == 3.0 / 40.0);
    CHECK(g.node_count() == 81u * 41u);
    CHECK(g.max_spacing() == g.spacing(1));
}

TEST_CASE("counts below the stencil width are rejected") {
    CHECK_THROWS_AS(ParamGrid::line({0.0, 1.0}, 4), std::invalid_argument);
    CHECK_THROWS_AS(ParamGrid::box({0.0, 1.0}, {0.0, 1.0}, 9, 3), std::invalid_argument);
    CHECK_THROWS_AS(ParamGrid::line({1.0, 1.0}, 9), std::invalid_argument);
}

TEST_CASE("refinement halves the spacing exactly") {
    const ParamGrid g = ParamGrid::box({-2.0, 2.0}, {-1.0, 1.0}, 11, 21);
    const ParamGrid f = g.refined();
    CHECK(f.count(0) == 21);
    CHECK(f.count(1) == 41);
    CHECK(f.spacing(0) == doctest::Approx(g.spacing(0) / 2.0).epsilon(1e-15));
    CHECK(f.range(0) == g.range(0));
}

TEST_CASE("interior mask respects the margin") {
    const ParamGrid g = ParamGrid::box({0.0, 1.0}, {0.0, 1.0}, 9, 9);
    CHECK(g.is_interior(2, 2, 2));
    CHECK(!g.is_interior(1, 4, 2));
    CHECK(!g.is_interior(4, 7, 2));
    CHECK(g.is_interior(0, 0, 0));

    const ParamGrid line = ParamGrid::line({0.0, 1.0}, 9);
    CHECK(line.is_interior(2, 0, 2));
    CHECK(!line.is_interior(8, 0, 2));
}

TEST_CASE("linspace endpoints and count") {
    const Linspace s{-3.0, 3.0, 7};
    CHECK(s[0] == -3.0);
    CHECK(s[6] == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(s.values().size() == 7u);
    CHECK(s.spacing() == doctest::Approx(1.0).epsilon(1e-15));
}
