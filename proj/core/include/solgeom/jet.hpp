#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <string>

#include "solgeom/errors.hpp"

namespace solgeom {

template <int N>
using AmbientVec = Eigen::Matrix<double, N + 1, 1>;
template <int N>
using TangentVec = Eigen::Matrix<double, N, 1>;
template <int N>
using TangentMat = Eigen::Matrix<double, N, N>;

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;

// Sign convention for the unit normal of a codimension-one immersion.
//   AsComputed: raw chart normal (cross product / 90-degree rotation).
//   Outward / Inward: relative to the builder's documented outward side.
enum class Orientation { Inward, Outward, AsComputed };

inline const char* to_string(Orientation o) {
    switch (o) {
        case Orientation::Inward: return "inward";
        case Orientation::Outward: return "outward";
        default: return "as-computed";
    }
}

// Second-order jet of a parametric immersion at one parameter point:
// position, the N first partials, and the N(N+1)/2 distinct second partials
// (stored once per unordered index pair, row-major upper triangle).
template <int N>
struct ImmersionJet {
    static_assert(N == 1 || N == 2, "intrinsic dimension must be 1 or 2");
    static constexpr int kSecondCount = N * (N + 1) / 2;

    AmbientVec<N> x;
    std::array<AmbientVec<N>, N> dx;
    std::array<AmbientVec<N>, kSecondCount> ddx;

    // Eigen's default constructor leaves entries uninitialized; builders
    // with vanishing second partials rely on these zeros.
    ImmersionJet() {
        x.setZero();
        for (auto& c : dx) c.setZero();
        for (auto& c : ddx) c.setZero();
    }

    static constexpr int second_index(int i, int j) {
        if constexpr (N == 1) {
            return 0;
        } else {
            // pairs (0,0) (0,1) (1,1)
            return (i <= j) ? i + j : j + i;
        }
    }
    const AmbientVec<N>& second(int i, int j) const { return ddx[std::size_t(second_index(i, j))]; }
    AmbientVec<N>& second(int i, int j) { return ddx[std::size_t(second_index(i, j))]; }

    double scale() const {
        double s = 0.0;
        for (const auto& c : dx) s = std::max(s, c.norm());
        return s;
    }

    TangentMat<N> gram() const {
        TangentMat<N> g;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) g(i, j) = dx[std::size_t(i)].dot(dx[std::size_t(j)]);
        return g;
    }

    // Relative rank test: det(g) scales like scale^(2N), so the threshold
    // does too.
    bool degenerate(double rel_tol = 1e-8) const {
        const double s2 = scale() * scale();
        double thresh = rel_tol;
        for (int i = 0; i < N; ++i) thresh *= s2;
        return !(gram().determinant() > thresh);
    }
};

// Pointwise codimension-one geometric data derived from a jet.
// mean_curv is the trace of the shape operator (no 1/N factor).
template <int N>
struct GeomFrame {
    AmbientVec<N> position = AmbientVec<N>::Zero();
    TangentMat<N> metric = TangentMat<N>::Identity();
    TangentMat<N> metric_inv = TangentMat<N>::Identity();
    AmbientVec<N> normal = AmbientVec<N>::Zero();
    TangentMat<N> second_form = TangentMat<N>::Zero();   // <d2X, normal>
    TangentMat<N> shape = TangentMat<N>::Zero();         // metric_inv * second_form
    double mean_curv = 0.0;                              // tr(shape)
    double shape_norm_sq = 0.0;                          // tr(shape^2)
    double support = 0.0;                                // <position, normal>
    TangentVec<N> tangent_coords = TangentVec<N>::Zero();  // X-tangential, chart basis

    double sqrt_det_metric() const { return std::sqrt(metric.determinant()); }
};

namespace detail {

inline Vec2 rotate90(const Vec2& v) { return Vec2(-v.y(), v.x()); }

template <int N>
AmbientVec<N> raw_normal(const ImmersionJet<N>& jet) {
    if constexpr (N == 1) {
        return rotate90(jet.dx[0]).normalized();
    } else {
        return jet.dx[0].cross(jet.dx[1]).normalized();
    }
}

template <int N>
TangentMat<N> invert_metric(const TangentMat<N>& g) {
    if constexpr (N == 1) {
        TangentMat<1> inv;
        inv(0, 0) = 1.0 / g(0, 0);
        return inv;
    } else {
        const double det = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
        TangentMat<2> inv;
        inv << g(1, 1), -g(0, 1), -g(1, 0), g(0, 0);
        inv /= det;
        return inv;
    }
}

}  // namespace detail

// Builds the frame from a jet. `outward_sign` is +1 when the raw chart
// normal points to the builder's documented outward side, -1 otherwise;
// it is ignored for Orientation::AsComputed.
template <int N>
GeomFrame<N> frame_at(const ImmersionJet<N>& jet, Orientation orientation,
                      double outward_sign = 1.0) {
    if (jet.degenerate())
        throw DegenerateJetError("frame_at: jet first partials are rank deficient");

    GeomFrame<N> fr;
    fr.position = jet.x;
    fr.metric = jet.gram();
    fr.metric_inv = detail::invert_metric<N>(fr.metric);

    double sign = 1.0;
    if (orientation == Orientation::Outward) sign = outward_sign;
    if (orientation == Orientation::Inward) sign = -outward_sign;
    fr.normal = sign * detail::raw_normal(jet);

    for (int i = 0; i < N; ++i)
        for (int j = i; j < N; ++j) {
            const double hij = jet.second(i, j).dot(fr.normal);
            fr.second_form(i, j) = hij;
            fr.second_form(j, i) = hij;
        }
    fr.shape = fr.metric_inv * fr.second_form;
    fr.mean_curv = fr.shape.trace();
    fr.shape_norm_sq = (fr.shape * fr.shape).trace();
    fr.support = jet.x.dot(fr.normal);

    TangentVec<N> covariant;
    for (int i = 0; i < N; ++i) covariant(i) = jet.x.dot(jet.dx[std::size_t(i)]);
    fr.tangent_coords = fr.metric_inv * covariant;
    return fr;
}

// Support function based at p0: <X - p0, N>. Reduces to frame.support when
// p0 is the origin.
template <int N>
double support_based(const GeomFrame<N>& frame, const AmbientVec<N>& p0) {
    return (frame.position - p0).dot(frame.normal);
}

// Pointwise soliton defect mean_curv - epsilon * support. Zero exactly when
// the surface satisfies the soliton equation with constant epsilon
// (-1/2 shrinker, +1/2 expander).
template <int N>
double soliton_residual(const GeomFrame<N>& frame, double epsilon) {
    return frame.mean_curv - epsilon * frame.support;
}

inline constexpr double kShrinkerEpsilon = -0.5;
inline constexpr double kExpanderEpsilon = 0.5;

// Gaussian weighted mean curvature H + <X,N>/2; vanishes identically on
// self-shrinkers.
template <int N>
double weighted_mean_curv(const GeomFrame<N>& frame) {
    return frame.mean_curv + 0.5 * frame.support;
}

}  // namespace solgeom
