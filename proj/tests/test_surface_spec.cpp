#include <cmath>

#include "doctest.h"
#include "solgeom/surface_spec.hpp"

using namespace solgeom;

TEST_CASE("parses builder strings") {
    const SurfaceSpec sphere = SurfaceSpec::parse("sphere:r=2");
    CHECK(sphere.kind == "sphere");
    CHECK(sphere.param("r", 0.0) == 2.0);

    const SurfaceSpec torus = SurfaceSpec::parse("torus:R=2,r=0.5");
    CHECK(torus.param("R", 0.0) == 2.0);
    CHECK(torus.param("r", 0.0) == 0.5);

    const SurfaceSpec spiral = SurfaceSpec::parse("spiral-cylinder:arctan,m=1,a=1");
    CHECK(spiral.profile_family == "arctan");
    CHECK(spiral.reduces_to_curve());
    CHECK(spiral.spiral().has_value());
    CHECK(spiral.spiral()->profile.b(0.0) == doctest::Approx(0.5));
}

TEST_CASE("rejects unknown builders, keys and junk") {
    CHECK_THROWS_AS(SurfaceSpec::parse("hyperboloid:r=1"), ConfigError);
    CHECK_THROWS_AS(SurfaceSpec::parse("sphere:radius=2"), ConfigError);
    CHECK_THROWS_AS(SurfaceSpec::parse("sphere:r=two"), ConfigError);
    CHECK_THROWS_AS(SurfaceSpec::parse("sphere:r=2,r=3"), ConfigError);
    CHECK_THROWS_AS(SurfaceSpec::parse("sphere:arctan"), ConfigError);
    CHECK_THROWS_AS(SurfaceSpec::parse("spiral-cylinder:m=1"), ConfigError);
    CHECK_THROWS_AS(SurfaceSpec::parse("spiral-cylinder:arctan,exp"), ConfigError);
}

TEST_CASE("builds the named surfaces") {
    CHECK(SurfaceSpec::parse("sphere:r=2").build()->describe().find("sphere") == 0);
    CHECK(SurfaceSpec::parse("canonical:p=1,n=2").build()->describe().find("cylinder") == 0);
    CHECK(SurfaceSpec::parse("circle:r=1").build_curve()->describe().find("circle") == 0);
    CHECK_THROWS_AS(SurfaceSpec::parse("circle:r=1").build(), ConfigError);
    CHECK_THROWS_AS(SurfaceSpec::parse("sphere:r=2").build_curve(), ConfigError);
    CHECK_THROWS_AS(SurfaceSpec::parse("canonical:p=3,n=2").build(), BadDimensionError);
}

TEST_CASE("canonical text is normalized") {
    CHECK(SurfaceSpec::parse("torus:r=0.5,R=2").canonical_text() == "torus:R=2,r=0.5");
    CHECK(SurfaceSpec::parse("spiral-cylinder:arctan,a=1,m=1").canonical_text() ==
          "spiral-cylinder:arctan,a=1,m=1");
}

TEST_CASE("arctan profile constraints are enforced") {
    CHECK_THROWS_AS(SurfaceSpec::parse("spiral-cylinder:arctan,m=-1").spiral(),
                    std::invalid_argument);
    CHECK_THROWS_AS(SurfaceSpec::parse("spiral-cylinder:arctan,a=1.5").spiral(),
                    std::invalid_argument);
    CHECK_THROWS_AS(SpiralCurve(RadialProfile::zero(), -1.0), std::invalid_argument);
}
