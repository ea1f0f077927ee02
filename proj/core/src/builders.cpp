#include "solgeom/builders.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace solgeom {

namespace {

class PlaneSurface final : public Surface<2> {
public:
    PlaneSurface(double offset, Vec3 normal, double extent)
        : offset_(offset), extent_(extent) {
        if (normal.norm() == 0.0) throw std::invalid_argument("plane: zero normal");
        normal_ = normal.normalized();
        // orthonormal in-plane basis
        Vec3 seed = std::abs(normal_.z()) < 0.9 ? Vec3(0, 0, 1) : Vec3(1, 0, 0);
        e1_ = normal_.cross(seed).normalized();
        e2_ = normal_.cross(e1_).normalized();
    }

    ImmersionJet<2> jet(const ParamPoint<2>& u) const override {
        ImmersionJet<2> j;
        j.x = offset_ * normal_ + u[0] * e1_ + u[1] * e2_;
        j.dx = {e1_, e2_};
        // second partials vanish identically
        return j;
    }

    std::array<AxisRange, 2> domain() const override {
        return {AxisRange{-extent_, extent_}, AxisRange{-extent_, extent_}};
    }

    double outward_sign(const ParamPoint<2>&) const override {
        // raw normal is e1 x e2; outward is the reference normal
        return e1_.cross(e2_).dot(normal_) > 0.0 ? 1.0 : -1.0;
    }

    std::string describe() const override {
        return "plane(offset=" + std::to_string(offset_) + ")";
    }

private:
    double offset_, extent_;
    Vec3 normal_, e1_, e2_;
};

// Shared orthographic cap chart: X = (a u, b v, cap * c w), w = sqrt(1-u^2-v^2).
// The sphere is the case a = b = c = r.
class EllipsoidCap final : public Surface<2> {
public:
    EllipsoidCap(double a, double b, double c, int cap, double cap_limit, std::string label)
        : a_(a), b_(b), c_(c), cap_(cap > 0 ? 1.0 : -1.0), cap_limit_(cap_limit),
          label_(std::move(label)) {
        if (!(a > 0 && b > 0 && c > 0))
            throw std::invalid_argument(label_ + ": semiaxes must be positive");
        if (!(cap_limit > 0 && cap_limit < 1))
            throw std::invalid_argument(label_ + ": cap_limit must lie in (0,1)");
    }

    ImmersionJet<2> jet(const ParamPoint<2>& p) const override {
        const double u = p[0], v = p[1];
        const double w2 = 1.0 - u * u - v * v;
        const double w = std::sqrt(w2);
        const double w3 = w2 * w;

        ImmersionJet<2> j;
        j.x = Vec3(a_ * u, b_ * v, cap_ * c_ * w);
        j.dx[0] = Vec3(a_, 0.0, cap_ * c_ * (-u / w));
        j.dx[1] = Vec3(0.0, b_, cap_ * c_ * (-v / w));
        j.second(0, 0) = Vec3(0, 0, cap_ * c_ * (-(w2 + u * u) / w3));
        j.second(0, 1) = Vec3(0, 0, cap_ * c_ * (-u * v / w3));
        j.second(1, 1) = Vec3(0, 0, cap_ * c_ * (-(w2 + v * v) / w3));
        return j;
    }

    std::array<AxisRange, 2> domain() const override {
        return {AxisRange{-cap_limit_, cap_limit_}, AxisRange{-cap_limit_, cap_limit_}};
    }

    bool contains(const ParamPoint<2>& p) const override {
        return p[0] * p[0] + p[1] * p[1] <= cap_limit_ * cap_limit_;
    }

    double outward_sign(const ParamPoint<2>& p) const override {
        // raw normal ~ dx_u x dx_v; outward test via the gradient of
        // (x/a)^2 + (y/b)^2 + (z/c)^2.
        const ImmersionJet<2> j = jet(p);
        const Vec3 raw = j.dx[0].cross(j.dx[1]);
        const Vec3 grad(j.x.x() / (a_ * a_), j.x.y() / (b_ * b_), j.x.z() / (c_ * c_));
        return raw.dot(grad) > 0.0 ? 1.0 : -1.0;
    }

    std::string describe() const override { return label_; }

private:
    double a_, b_, c_, cap_, cap_limit_;
    std::string label_;
};

class CylinderSurface final : public Surface<2> {
public:
    CylinderSurface(double r, double angle_limit, double height_limit)
        : r_(r), angle_limit_(angle_limit), height_limit_(height_limit) {
        if (!(r > 0)) throw std::invalid_argument("cylinder: radius must be positive");
    }

    ImmersionJet<2> jet(const ParamPoint<2>& p) const override {
        const double cu = std::cos(p[0]), su = std::sin(p[0]);
        ImmersionJet<2> j;
        j.x = Vec3(r_ * cu, r_ * su, p[1]);
        j.dx[0] = Vec3(-r_ * su, r_ * cu, 0.0);
        j.dx[1] = Vec3(0.0, 0.0, 1.0);
        j.second(0, 0) = Vec3(-r_ * cu, -r_ * su, 0.0);
        j.second(0, 1) = Vec3::Zero();
        j.second(1, 1) = Vec3::Zero();
        return j;
    }

    std::array<AxisRange, 2> domain() const override {
        return {AxisRange{-angle_limit_, angle_limit_}, AxisRange{-height_limit_, height_limit_}};
    }

    double outward_sign(const ParamPoint<2>& p) const override {
        const ImmersionJet<2> j = jet(p);
        const Vec3 radial(j.x.x(), j.x.y(), 0.0);
        return j.dx[0].cross(j.dx[1]).dot(radial) > 0.0 ? 1.0 : -1.0;
    }

    std::string describe() const override { return "cylinder(r=" + std::to_string(r_) + ")"; }

private:
    double r_, angle_limit_, height_limit_;
};

class TorusSurface final : public Surface<2> {
public:
    TorusSurface(double R, double r) : R_(R), r_(r) {
        if (!(R > r && r > 0)) throw std::invalid_argument("torus: need R > r > 0");
    }

    ImmersionJet<2> jet(const ParamPoint<2>& p) const override {
        const double cu = std::cos(p[0]), su = std::sin(p[0]);
        const double cv = std::cos(p[1]), sv = std::sin(p[1]);
        const double w = R_ + r_ * cv;
        ImmersionJet<2> j;
        j.x = Vec3(w * cu, w * su, r_ * sv);
        j.dx[0] = Vec3(-w * su, w * cu, 0.0);
        j.dx[1] = Vec3(-r_ * sv * cu, -r_ * sv * su, r_ * cv);
        j.second(0, 0) = Vec3(-w * cu, -w * su, 0.0);
        j.second(0, 1) = Vec3(r_ * sv * su, -r_ * sv * cu, 0.0);
        j.second(1, 1) = Vec3(-r_ * cv * cu, -r_ * cv * su, -r_ * sv);
        return j;
    }

    std::array<AxisRange, 2> domain() const override {
        return {AxisRange{-3.0, 3.0}, AxisRange{-3.0, 3.0}};
    }

    double outward_sign(const ParamPoint<2>& p) const override {
        const double cu = std::cos(p[0]), su = std::sin(p[0]);
        const double cv = std::cos(p[1]), sv = std::sin(p[1]);
        const Vec3 tube(cv * cu, cv * su, sv);  // away from the core circle
        const ImmersionJet<2> j = jet(p);
        return j.dx[0].cross(j.dx[1]).dot(tube) > 0.0 ? 1.0 : -1.0;
    }

    std::string describe() const override {
        return "torus(R=" + std::to_string(R_) + ",r=" + std::to_string(r_) + ")";
    }

private:
    double R_, r_;
};

class SpiralCylinderSurface final : public Surface<2> {
public:
    SpiralCylinderSurface(SpiralCurve curve, double z_limit, double t_limit)
        : curve_(std::move(curve)), z_limit_(z_limit), t_limit_(t_limit) {}

    ImmersionJet<2> jet(const ParamPoint<2>& p) const override {
        const double t = p[0];
        const Vec2 g = curve_.point(t);
        const Vec2 dg = curve_.velocity(t);
        const Vec2 ddg = curve_.acceleration(t);
        ImmersionJet<2> j;
        j.x = Vec3(g.x(), g.y(), p[1]);
        j.dx[0] = Vec3(dg.x(), dg.y(), 0.0);
        j.dx[1] = Vec3(0.0, 0.0, 1.0);
        j.second(0, 0) = Vec3(ddg.x(), ddg.y(), 0.0);
        j.second(0, 1) = Vec3::Zero();
        j.second(1, 1) = Vec3::Zero();
        return j;
    }

    std::array<AxisRange, 2> domain() const override {
        return {AxisRange{-t_limit_, t_limit_}, AxisRange{-z_limit_, z_limit_}};
    }

    double outward_sign(const ParamPoint<2>& p) const override {
        // raw normal (dx_t x dx_z) is the -90 rotation of Gamma'; outward
        // means away from the z-axis.
        const Vec2 g = curve_.point(p[0]);
        const Vec2 dg = curve_.velocity(p[0]);
        const Vec2 raw(dg.y(), -dg.x());
        return raw.dot(g) > 0.0 ? 1.0 : -1.0;
    }

    std::string describe() const override {
        return "spiral-cylinder(" + curve_.profile.name() + ",d=" + std::to_string(curve_.d) + ")";
    }

private:
    SpiralCurve curve_;
    double z_limit_, t_limit_;
};

class LineCurve final : public Surface<1> {
public:
    LineCurve(double offset, Vec2 normal, double extent) : offset_(offset), extent_(extent) {
        if (normal.norm() == 0.0) throw std::invalid_argument("line: zero normal");
        normal_ = normal.normalized();
        tangent_ = Vec2(normal_.y(), -normal_.x());  // rotate90(tangent) == normal
    }

    ImmersionJet<1> jet(const ParamPoint<1>& u) const override {
        ImmersionJet<1> j;
        j.x = offset_ * normal_ + u[0] * tangent_;
        j.dx[0] = tangent_;
        return j;
    }

    std::array<AxisRange, 1> domain() const override { return {AxisRange{-extent_, extent_}}; }

    double outward_sign(const ParamPoint<1>&) const override { return 1.0; }

    std::string describe() const override { return "line(offset=" + std::to_string(offset_) + ")"; }

private:
    double offset_, extent_;
    Vec2 normal_, tangent_;
};

class CircleCurve final : public Surface<1> {
public:
    CircleCurve(double r, double angle_limit) : r_(r), angle_limit_(angle_limit) {
        if (!(r > 0)) throw std::invalid_argument("circle: radius must be positive");
    }

    ImmersionJet<1> jet(const ParamPoint<1>& u) const override {
        const double c = std::cos(u[0]), s = std::sin(u[0]);
        ImmersionJet<1> j;
        j.x = Vec2(r_ * c, r_ * s);
        j.dx[0] = Vec2(-r_ * s, r_ * c);
        j.ddx[0] = Vec2(-r_ * c, -r_ * s);
        return j;
    }

    std::array<AxisRange, 1> domain() const override {
        return {AxisRange{-angle_limit_, angle_limit_}};
    }

    double outward_sign(const ParamPoint<1>&) const override {
        // raw normal rotate90(dx) = -X/r: inward
        return -1.0;
    }

    std::string describe() const override { return "circle(r=" + std::to_string(r_) + ")"; }

private:
    double r_, angle_limit_;
};

class SpiralPlanarCurve final : public Surface<1> {
public:
    SpiralPlanarCurve(SpiralCurve curve, double t_limit)
        : curve_(std::move(curve)), t_limit_(t_limit) {}

    ImmersionJet<1> jet(const ParamPoint<1>& u) const override {
        ImmersionJet<1> j;
        j.x = curve_.point(u[0]);
        j.dx[0] = curve_.velocity(u[0]);
        j.ddx[0] = curve_.acceleration(u[0]);
        return j;
    }

    std::array<AxisRange, 1> domain() const override { return {AxisRange{-t_limit_, t_limit_}}; }

    double outward_sign(const ParamPoint<1>& u) const override {
        const Vec2 g = curve_.point(u[0]);
        const Vec2 dg = curve_.velocity(u[0]);
        return Vec2(-dg.y(), dg.x()).dot(g) > 0.0 ? 1.0 : -1.0;
    }

    std::string describe() const override {
        return "spiral(" + curve_.profile.name() + ",d=" + std::to_string(curve_.d) + ")";
    }

private:
    SpiralCurve curve_;
    double t_limit_;
};

}  // namespace

std::unique_ptr<Surface<2>> make_plane(double offset, Vec3 normal, double extent) {
    return std::make_unique<PlaneSurface>(offset, normal, extent);
}

std::unique_ptr<Surface<2>> make_sphere_cap(double r, int cap, double cap_limit) {
    return std::make_unique<EllipsoidCap>(r, r, r, cap, cap_limit,
                                          "sphere(r=" + std::to_string(r) + ")");
}

std::unique_ptr<Surface<2>> make_cylinder(double r, double angle_limit, double height_limit) {
    return std::make_unique<CylinderSurface>(r, angle_limit, height_limit);
}

std::unique_ptr<Surface<2>> make_ellipsoid_cap(double a, double b, double c, int cap,
                                               double cap_limit) {
    return std::make_unique<EllipsoidCap>(a, b, c, cap, cap_limit,
                                          "ellipsoid(a=" + std::to_string(a) + ",b=" +
                                              std::to_string(b) + ",c=" + std::to_string(c) + ")");
}

std::unique_ptr<Surface<2>> make_torus(double R, double r) {
    return std::make_unique<TorusSurface>(R, r);
}

std::unique_ptr<Surface<2>> make_spiral_cylinder(SpiralCurve curve, double z_limit,
                                                 double t_limit) {
    return std::make_unique<SpiralCylinderSurface>(std::move(curve), z_limit, t_limit);
}

std::unique_ptr<Surface<1>> make_line(double offset, Vec2 normal, double extent) {
    return std::make_unique<LineCurve>(offset, normal, extent);
}

std::unique_ptr<Surface<1>> make_circle(double r, double angle_limit) {
    return std::make_unique<CircleCurve>(r, angle_limit);
}

std::unique_ptr<Surface<1>> make_spiral_curve(SpiralCurve curve, double t_limit) {
    return std::make_unique<SpiralPlanarCurve>(std::move(curve), t_limit);
}

template <>
std::unique_ptr<Surface<2>> canonical_shrinker<2>(int p) {
    switch (p) {
        case 0: return make_plane(0.0);
        case 1: return make_cylinder(std::sqrt(2.0));
        case 2: return make_sphere_cap(2.0);
        default:
            throw BadDimensionError("canonical_shrinker: need 0 <= p <= 2 for n = 2, got p = " +
                                    std::to_string(p));
    }
}

template <>
std::unique_ptr<Surface<1>> canonical_shrinker<1>(int p) {
    switch (p) {
        case 0: return make_line(0.0);
        case 1: return make_circle(std::sqrt(2.0));
        default:
            throw BadDimensionError("canonical_shrinker: need 0 <= p <= 1 for n = 1, got p = " +
                                    std::to_string(p));
    }
}

}  // namespace solgeom
