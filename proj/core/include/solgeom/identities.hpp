#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "solgeom/operators.hpp"

namespace solgeom {

// Residual norms of one identity over the clean interior of a grid,
// measured at spacing h and h/2. order_estimate = log2(inf(h)/inf(h/2)).
struct IdentityReport {
    std::string identity_name;
    double h = 0.0;  // finest spacing used (max over axes of the fine grid)
    double residual_inf = 0.0;
    double residual_l2 = 0.0;
    std::optional<double> order_estimate;

    double coarse_residual_inf = 0.0;
    bool trivial_field = false;  // sup |support| < 1e-14 over the fine grid

    // Only for the soliton PDE check: the largest pointwise soliton defect,
    // and the residual of the identity with the defect terms restored
    // (which converges at O(h^2) on every surface).
    std::optional<double> max_soliton_residual;
    std::optional<double> decomposition_inf;
};

// Nodes closer than this to the boundary use lower-order stencils and are
// excluded from every residual norm.
inline constexpr int kResidualMargin = 2;

namespace detail {

struct ResidualNorms {
    double inf = 0.0;
    double l2 = 0.0;
};

inline ResidualNorms interior_norms(const ScalarField& r, int margin) {
    ResidualNorms out;
    double sum_sq = 0.0;
    std::size_t count = 0;
    const int nu = r.grid.count(0);
    const int nv = r.grid.dim() == 2 ? r.grid.count(1) : 1;
    for (int j = 0; j < nv; ++j)
        for (int i = 0; i < nu; ++i) {
            if (!r.grid.is_interior(i, j, margin)) continue;
            const double v = std::abs(r.at(i, j));
            out.inf = std::max(out.inf, v);
            sum_sq += v * v;
            ++count;
        }
    if (count > 0) out.l2 = std::sqrt(sum_sq / double(count));
    return out;
}

// Runs fn on the given grid, and when `refine` is set also on the
// spacing-halved grid, estimating the convergence order from the pair.
template <int N, class ResidualFn>
IdentityReport two_level_report(const std::string& name, const Surface<N>& surface,
                                Orientation orientation, const ParamGrid& coarse,
                                ResidualFn fn, bool refine) {
    const FrameField<N> coarse_frames = sample_frames(surface, coarse, orientation);
    const ScalarField coarse_res = fn(coarse_frames);
    const ResidualNorms cn = interior_norms(coarse_res, kResidualMargin);

    IdentityReport rep;
    rep.identity_name = name;
    rep.coarse_residual_inf = cn.inf;

    const ParamGrid& level = refine ? coarse.refined() : coarse;
    double sup_support = 0.0, sup_mean = 0.0;
    if (refine) {
        const FrameField<N> fine_frames = sample_frames(surface, level, orientation);
        const ScalarField fine_res = fn(fine_frames);
        const ResidualNorms fnn = interior_norms(fine_res, kResidualMargin);
        rep.residual_inf = fnn.inf;
        rep.residual_l2 = fnn.l2;
        for (const auto& fr : fine_frames.frames) {
            sup_support = std::max(sup_support, std::abs(fr.support));
            sup_mean = std::max(sup_mean, std::abs(fr.mean_curv));
        }
        // Residuals of termwise-zero identities bottom out at the rounding
        // floor of the stencils (~eps * field / h^2), where the two-level
        // ratio measures noise, not order.
        const double h = level.max_spacing();
        const double floor =
            2.3e-16 * std::max(1.0, sup_support + sup_mean) / (h * h);
        if (fnn.inf > 50.0 * floor && cn.inf > 1e-13)
            rep.order_estimate = std::log2(cn.inf / fnn.inf);
    } else {
        rep.residual_inf = cn.inf;
        rep.residual_l2 = cn.l2;
        for (const auto& fr : coarse_frames.frames)
            sup_support = std::max(sup_support, std::abs(fr.support));
    }
    rep.h = level.max_spacing();
    rep.trivial_field = sup_support < 1e-14;
    return rep;
}

}  // namespace detail

// grad f + A X_tan = 0 (flat ambient). Residual measured in the metric norm.
template <int N>
IdentityReport check_grad_identity(const Surface<N>& surface, Orientation orientation,
                                   const ParamGrid& coarse, bool refine = true) {
    return detail::two_level_report<N>(
        "grad_support", surface, orientation, coarse, [](const FrameField<N>& frames) {
            const ScalarField support =
                frame_scalar(frames, [](const GeomFrame<N>& fr) { return fr.support; });
            const VectorField<N> grad = surface_gradient(support, frames);
            ScalarField res(frames.grid);
            for (std::size_t k = 0; k < res.values.size(); ++k) {
                const auto& fr = frames.frames[k];
                TangentVec<N> v;
                for (int a = 0; a < N; ++a) v(a) = grad.comp[std::size_t(a)][k];
                v += fr.shape * fr.tangent_coords;
                res.values[k] = std::sqrt(v.dot(fr.metric * v));
            }
            return res;
        }, refine);
}

// div X_tan - n - f H = 0 (flat ambient, conformal factor 1).
template <int N>
IdentityReport check_div_identity(const Surface<N>& surface, Orientation orientation,
                                  const ParamGrid& coarse, bool refine = true) {
    return detail::two_level_report<N>(
        "div_tangent", surface, orientation, coarse, [](const FrameField<N>& frames) {
            VectorField<N> xtan(frames.grid);
            for (std::size_t k = 0; k < frames.frames.size(); ++k)
                for (int a = 0; a < N; ++a)
                    xtan.comp[std::size_t(a)][k] = frames.frames[k].tangent_coords(a);
            ScalarField res = divergence(xtan, frames);
            for (std::size_t k = 0; k < res.values.size(); ++k) {
                const auto& fr = frames.frames[k];
                res.values[k] -= double(N) + fr.support * fr.mean_curv;
            }
            return res;
        }, refine);
}

// Delta f + H + f |A|^2 + <X_tan, grad H> = 0; holds for every hypersurface
// of flat ambient space, soliton or not.
template <int N>
IdentityReport check_master_identity(const Surface<N>& surface, Orientation orientation,
                                     const ParamGrid& coarse, bool refine = true) {
    return detail::two_level_report<N>(
        "master", surface, orientation, coarse, [](const FrameField<N>& frames) {
            const ScalarField support =
                frame_scalar(frames, [](const GeomFrame<N>& fr) { return fr.support; });
            const ScalarField mean_curv =
                frame_scalar(frames, [](const GeomFrame<N>& fr) { return fr.mean_curv; });
            ScalarField res = laplace_beltrami(support, frames);
            const ScalarField drift = position_drift(mean_curv, frames);
            for (std::size_t k = 0; k < res.values.size(); ++k) {
                const auto& fr = frames.frames[k];
                res.values[k] += fr.mean_curv + fr.support * fr.shape_norm_sq + drift.values[k];
            }
            return res;
        }, refine);
}

// L f + (|A|^2 - 1/2) f = 0 on self-shrinkers. On a general surface the
// report also carries the defect-corrected residual
//   L f + (|A|^2 - 1/2) f + sigma + <X_tan, grad sigma>,  sigma = H + f/2,
// which is the difference of the two identities above and converges at
// O(h^2) everywhere.
template <int N>
IdentityReport check_shrinker_pde(const Surface<N>& surface, Orientation orientation,
                                  const ParamGrid& coarse, bool refine = true) {
    double max_defect = 0.0;
    double decomposition_inf = 0.0;

    IdentityReport rep = detail::two_level_report<N>(
        "shrinker_pde", surface, orientation, coarse, [&](const FrameField<N>& frames) {
            const ScalarField support =
                frame_scalar(frames, [](const GeomFrame<N>& fr) { return fr.support; });
            const ScalarField sigma = frame_scalar(frames, [](const GeomFrame<N>& fr) {
                return soliton_residual(fr, kShrinkerEpsilon);
            });
            ScalarField res = drift_laplacian(DriftOperator{kShrinkerEpsilon}, support, frames);
            for (std::size_t k = 0; k < res.values.size(); ++k) {
                const auto& fr = frames.frames[k];
                res.values[k] += (fr.shape_norm_sq - 0.5) * fr.support;
            }

            ScalarField corrected = res;
            const ScalarField sigma_drift = position_drift(sigma, frames);
            for (std::size_t k = 0; k < corrected.values.size(); ++k)
                corrected.values[k] += sigma.values[k] + sigma_drift.values[k];

            // keep the fine-grid diagnostics (the driver calls coarse first)
            double md = 0.0;
            for (double s : sigma.values) md = std::max(md, std::abs(s));
            max_defect = md;
            decomposition_inf = detail::interior_norms(corrected, kResidualMargin).inf;
            return res;
        }, refine);

    rep.max_soliton_residual = max_defect;
    rep.decomposition_inf = decomposition_inf;
    return rep;
}

}  // namespace solgeom
