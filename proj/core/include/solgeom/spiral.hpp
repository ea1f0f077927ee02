#pragma once

#include <optional>
#include <string>
#include <vector>

#include "solgeom/grid.hpp"
#include "solgeom/jet.hpp"
#include "solgeom/profile.hpp"

namespace solgeom {

// Planar spiral Gamma(t) = (d + b(t))(cos t, sin t). The canonical inward
// normal is the 90-degree left rotation of the unit tangent, which makes
// the signed curvature of a counterclockwise circle +1 and its support
// function <Gamma, N> = -radius.
struct SpiralCurve {
    RadialProfile profile;
    double d = 1.0;  // base radius, > 0

    SpiralCurve(RadialProfile p, double base_radius = 1.0);

    double radius(double t) const { return d + profile.b(t); }
    double dradius(double t) const { return profile.db(t); }
    double ddradius(double t) const { return profile.ddb(t); }

    Vec2 point(double t) const;
    Vec2 velocity(double t) const;
    Vec2 acceleration(double t) const;

    double speed(double t) const;      // |Gamma'| = sqrt(rho^2 + rho'^2)
    double curvature(double t) const;  // closed form, inward convention
    double support(double t) const;    // <Gamma, N> = -rho^2 / |Gamma'|
};

// --- profile conditions -----------------------------------------------

// One row per profile condition. Margins are signed: positive means the
// condition holds with that much slack. For the limit conditions the
// margin is the decay gain between the half and full horizon.
struct ConditionRow {
    std::string name;  // "(i)".."(v)"
    bool holds_on_grid = false;
    double worst_margin = 0.0;
    double worst_t = 0.0;
};

struct ConditionReport {
    std::vector<ConditionRow> rows;
    bool unbounded_limit_variant = false;  // limit at -inf declared unbounded
    bool all_hold() const;
    const ConditionRow& row(const std::string& name) const;
};

// Pointwise check of conditions (iii)-(v) on the grid and decay evidence
// for the limits (i)-(ii) at +-asymptotic_T versus +-asymptotic_T/2.
ConditionReport profile_conditions_check(const RadialProfile& profile,
                                         const Linspace& t_grid,
                                         double asymptotic_T);

// --- tangent line norms and the inequality chain ------------------------

// |R_t(s)|^2 for the tangent line R_t(s) = Gamma(t) + s Gamma'(t), in two
// algebraically equal forms (equal whenever b' <= 0):
//   raw:       (rho + s b')^2 + s^2 rho^2
//   regrouped: [c + (1-s)|b'|]^2 + s^2 rho^2,  c = d + b - |b'|
struct TangentNormSq {
    double raw = 0.0;
    double regrouped = 0.0;
    double c = 0.0;
};

TangentNormSq tangent_norm_sq(const SpiralCurve& curve, double t, double s);

// Worst (minimal) margin of one chain link over the (t, s) grid.
struct ChainLink {
    std::string name;
    double min_margin = 0.0;
    double argmin_t = 0.0;
    double argmin_s = 0.0;
    bool holds = false;  // min_margin >= 0 (weak margins count as holding)
};

struct ChainReport {
    ChainLink c_at_least_one;       // c(t) >= 1
    ChainLink regrouped_nonneg;     // (3/4+(s-1/2)^2) c |b'| + s^2 (b-|b'|)(1-|b'|) >= 0
    ChainLink norm_exceeds;         // |R|^2 - c^2 - s^2 > 0
    double min_norm_sq = 0.0;       // min over grid of |R_t(s)|^2
    double max_form_rel_gap = 0.0;  // max relative gap between the two forms
    bool all_hold() const;
};

// Verifies each link of the tangent-line lower-bound chain pointwise.
// Requires base radius d = 1 (the chain's algebra) and conditions
// (iii)-(v) nonnegative on the t grid, else ConditionsViolatedError.
// Zero margins (circle, exp at equality) count as holding.
ChainReport inequality_chain_check(const SpiralCurve& curve,
                                   const Linspace& t_grid,
                                   const Linspace& s_grid);

// --- properness diagnostic ----------------------------------------------

struct PropernessRow {
    double T = 0.0;
    double arc_length_inside = 0.0;
};

struct PropernessReport {
    double trap_radius = 0.0;
    std::vector<PropernessRow> rows;
    // (len(T_k) - len(T_{k-1})) / (T_k - T_{k-1}) for the last pair
    double last_incremental_slope = 0.0;
    // Growth stalled => consistent with a proper immersion.
    bool consistent_with_proper = false;
};

// Arc length of Gamma([0, T]) inside the closed disk of radius trap_radius,
// by adaptive composite Simpson quadrature with crossing refinement.
// Requires trap_radius > d.
PropernessReport properness_diagnostic(const SpiralCurve& curve,
                                       const std::vector<double>& T_values,
                                       double trap_radius);

// --- weighted mean curvature scan ---------------------------------------

struct WeightedScanReport {
    double sup_abs_mean_curv = 0.0;
    double sup_abs_support = 0.0;
    double sup_abs_weighted = 0.0;  // sup |H + <X,N>/2|
};

WeightedScanReport weighted_mean_curvature_scan(const SpiralCurve& curve,
                                                const Linspace& t_grid);

}  // namespace solgeom
