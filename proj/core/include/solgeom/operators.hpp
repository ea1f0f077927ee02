#pragma once

#include <cmath>

#include "solgeom/fields.hpp"

namespace solgeom {

// Second-order finite differences on parametric grids: central in the
// interior, 3-point one-sided on the boundary. Boundary values exist so
// fields stay total, but residual norms exclude them (see identities.hpp).

namespace detail {

inline void check_same_grid(const ParamGrid& a, const ParamGrid& b, const char* op) {
    if (!(a == b)) throw GridMismatchError(std::string(op) + ": fields live on different grids");
}

// d/du along axis 0 or 1 at node (i, j).
inline double partial_at(const ScalarField& f, int axis, int i, int j) {
    const ParamGrid& g = f.grid;
    const double h = g.spacing(axis);
    const int n = g.count(axis);
    const int k = (axis == 0) ? i : j;
    auto value = [&](int kk) { return axis == 0 ? f.at(kk, j) : f.at(i, kk); };
    if (k > 0 && k < n - 1) return (value(k + 1) - value(k - 1)) / (2.0 * h);
    if (k == 0) return (-3.0 * value(0) + 4.0 * value(1) - value(2)) / (2.0 * h);
    return (3.0 * value(n - 1) - 4.0 * value(n - 2) + value(n - 3)) / (2.0 * h);
}

}  // namespace detail

// Partial derivative field along one chart axis.
inline ScalarField partial_derivative(const ScalarField& f, int axis) {
    ScalarField out(f.grid);
    const int nu = f.grid.count(0);
    const int nv = f.grid.dim() == 2 ? f.grid.count(1) : 1;
    for (int j = 0; j < nv; ++j)
        for (int i = 0; i < nu; ++i) out.at(i, j) = detail::partial_at(f, axis, i, j);
    return out;
}

namespace detail {

template <int N>
std::array<ScalarField, N> all_partials(const ScalarField& f) {
    if constexpr (N == 1) {
        return {partial_derivative(f, 0)};
    } else {
        return {partial_derivative(f, 0), partial_derivative(f, 1)};
    }
}

}  // namespace detail

// grad f = g^{ij} (d_j f) d_i, contravariant chart components.
template <int N>
VectorField<N> surface_gradient(const ScalarField& field, const FrameField<N>& frames) {
    detail::check_same_grid(field.grid, frames.grid, "surface_gradient");
    const auto partial = detail::all_partials<N>(field);

    VectorField<N> out(field.grid);
    for (std::size_t k = 0; k < field.values.size(); ++k) {
        const auto& fr = frames.frames[k];
        TangentVec<N> covariant;
        for (int a = 0; a < N; ++a) covariant(a) = partial[std::size_t(a)].values[k];
        const TangentVec<N> up = fr.metric_inv * covariant;
        for (int a = 0; a < N; ++a) out.comp[std::size_t(a)][k] = up(a);
    }
    return out;
}

// div V = (1/sqrt(g)) d_i (sqrt(g) V^i) for contravariant V.
template <int N>
ScalarField divergence(const VectorField<N>& v, const FrameField<N>& frames) {
    detail::check_same_grid(v.grid, frames.grid, "divergence");
    ScalarField out(v.grid);
    for (int a = 0; a < N; ++a) {
        ScalarField weighted(v.grid);
        for (std::size_t k = 0; k < weighted.values.size(); ++k)
            weighted.values[k] = frames.frames[k].sqrt_det_metric() * v.comp[std::size_t(a)][k];
        const ScalarField dw = partial_derivative(weighted, a);
        for (std::size_t k = 0; k < out.values.size(); ++k) out.values[k] += dw.values[k];
    }
    for (std::size_t k = 0; k < out.values.size(); ++k)
        out.values[k] /= frames.frames[k].sqrt_det_metric();
    return out;
}

// Laplace-Beltrami in divergence form: (1/sqrt(g)) d_i (sqrt(g) g^{ij} d_j f).
// Two nested first-derivative passes; interior accuracy O(h^2) with a
// margin of two nodes.
template <int N>
ScalarField laplace_beltrami(const ScalarField& field, const FrameField<N>& frames) {
    detail::check_same_grid(field.grid, frames.grid, "laplace_beltrami");
    for (int axis = 0; axis < field.grid.dim(); ++axis)
        if (field.grid.count(axis) < ParamGrid::kMinCount)
            throw GridMismatchError("laplace_beltrami: grid too coarse");
    return divergence(surface_gradient(field, frames), frames);
}

// <X_tan, grad f> = x_tan^i d_i f (covariant pairing; metric-free).
template <int N>
ScalarField position_drift(const ScalarField& field, const FrameField<N>& frames) {
    detail::check_same_grid(field.grid, frames.grid, "position_drift");
    const auto partial = detail::all_partials<N>(field);
    ScalarField out(field.grid);
    for (std::size_t k = 0; k < out.values.size(); ++k) {
        double sum = 0.0;
        for (int a = 0; a < N; ++a)
            sum += frames.frames[k].tangent_coords(a) * partial[std::size_t(a)].values[k];
        out.values[k] = sum;
    }
    return out;
}

// Drift (Gaussian) Laplacian L f = Delta f + eps <X, grad f>; the ambient
// pairing reduces to the tangential one because grad f is tangent.
struct DriftOperator {
    double epsilon = kShrinkerEpsilon;
};

template <int N>
ScalarField drift_laplacian(const DriftOperator& op, const ScalarField& field,
                            const FrameField<N>& frames) {
    ScalarField lap = laplace_beltrami(field, frames);
    const ScalarField drift = position_drift(field, frames);
    for (std::size_t k = 0; k < lap.values.size(); ++k)
        lap.values[k] += op.epsilon * drift.values[k];
    return lap;
}

}  // namespace solgeom
