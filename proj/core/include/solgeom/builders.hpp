#pragma once

#include <memory>

#include "solgeom/spiral.hpp"
#include "solgeom/surface.hpp"

namespace solgeom {

// Concrete analytic builders. Outward conventions:
//   plane/line: "outward" is the constructor's reference normal;
//   sphere/cylinder/ellipsoid/torus/circle: away from the enclosed region;
//   spiral cylinder and planar spiral: away from the z-axis / origin.
// Inward orientation therefore gives negative support on the round builders.

// Affine plane X(u,v) = offset*normal + u e1 + v e2 with {e1, e2, normal}
// orthonormal. Identity chart, zero second fundamental form.
std::unique_ptr<Surface<2>> make_plane(double offset, Vec3 normal = Vec3(0, 0, 1),
                                       double extent = 8.0);

// Orthographic polar-cap chart of the sphere of radius r:
//   X(u,v) = r (u, v, +-w),  w = sqrt(1 - u^2 - v^2),
// cap = +1 north, -1 south. Admissible disc u^2+v^2 <= cap_limit^2.
std::unique_ptr<Surface<2>> make_sphere_cap(double r, int cap = +1, double cap_limit = 0.9);

// Right circular cylinder of radius r about the z-axis, angle-height chart.
std::unique_ptr<Surface<2>> make_cylinder(double r, double angle_limit = 3.0,
                                          double height_limit = 4.0);

// Orthographic cap chart of the ellipsoid (x/a)^2+(y/b)^2+(z/c)^2 = 1:
//   X(u,v) = (a u, b v, +-c w).
std::unique_ptr<Surface<2>> make_ellipsoid_cap(double a, double b, double c, int cap = +1,
                                               double cap_limit = 0.9);

// Torus of revolution about the z-axis, major radius R, tube radius r.
std::unique_ptr<Surface<2>> make_torus(double R, double r);

// Product surface Gamma x R in R^3 for a planar spiral curve.
std::unique_ptr<Surface<2>> make_spiral_cylinder(SpiralCurve curve,
                                                 double z_limit = 1.0,
                                                 double t_limit = 1e9);

// Planar curves as 1-surfaces of R^2.
std::unique_ptr<Surface<1>> make_line(double offset, Vec2 normal = Vec2(0, 1),
                                      double extent = 8.0);
std::unique_ptr<Surface<1>> make_circle(double r, double angle_limit = 3.0);
std::unique_ptr<Surface<1>> make_spiral_curve(SpiralCurve curve, double t_limit = 1e9);

// Canonical soliton S^p(sqrt(2p)) x R^(n-p) as an analytic builder,
// N in {1, 2}, 0 <= p <= N. p = 0 is the flat factor through the origin.
// Throws BadDimensionError for p outside range.
template <int N>
std::unique_ptr<Surface<N>> canonical_shrinker(int p);

}  // namespace solgeom
