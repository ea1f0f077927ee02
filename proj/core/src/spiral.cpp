#include "solgeom/spiral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "solgeom/errors.hpp"

namespace solgeom {

SpiralCurve::SpiralCurve(RadialProfile p, double base_radius)
    : profile(std::move(p)), d(base_radius) {
    if (!(d > 0.0)) throw std::invalid_argument("SpiralCurve: base radius must be > 0");
}

Vec2 SpiralCurve::point(double t) const {
    const double rho = radius(t);
    return Vec2(rho * std::cos(t), rho * std::sin(t));
}

Vec2 SpiralCurve::velocity(double t) const {
    const double rho = radius(t), drho = dradius(t);
    const double c = std::cos(t), s = std::sin(t);
    return Vec2(drho * c - rho * s, drho * s + rho * c);
}

Vec2 SpiralCurve::acceleration(double t) const {
    const double rho = radius(t), drho = dradius(t), ddrho = ddradius(t);
    const double c = std::cos(t), s = std::sin(t);
    return Vec2(ddrho * c - 2.0 * drho * s - rho * c, ddrho * s + 2.0 * drho * c - rho * s);
}

double SpiralCurve::speed(double t) const {
    const double rho = radius(t), drho = dradius(t);
    return std::sqrt(rho * rho + drho * drho);
}

double SpiralCurve::curvature(double t) const {
    const double rho = radius(t), drho = dradius(t), ddrho = ddradius(t);
    const double num = rho * rho + 2.0 * drho * drho - rho * ddrho;
    const double den = std::pow(rho * rho + drho * drho, 1.5);
    return num / den;
}

double SpiralCurve::support(double t) const {
    const double rho = radius(t);
    return -rho * rho / speed(t);
}

// --- profile conditions -----------------------------------------------

bool ConditionReport::all_hold() const {
    return std::all_of(rows.begin(), rows.end(),
                       [](const ConditionRow& r) { return r.holds_on_grid; });
}

const ConditionRow& ConditionReport::row(const std::string& name) const {
    for (const auto& r : rows)
        if (r.name == name) return r;
    throw std::invalid_argument("ConditionReport: no row named " + name);
}

namespace {

// Scans the grid for the minimum of `margin`, recording location.
template <class Fn>
ConditionRow pointwise_condition(const std::string& name, const Linspace& grid, Fn margin) {
    ConditionRow row;
    row.name = name;
    row.worst_margin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid.n; ++i) {
        const double t = grid[i];
        const double m = margin(t);
        if (m < row.worst_margin) {
            row.worst_margin = m;
            row.worst_t = t;
        }
    }
    row.holds_on_grid = row.worst_margin >= 0.0;
    return row;
}

ConditionRow limit_condition(const std::string& name, const RadialProfile& profile,
                             double T, std::optional<double> limit, bool* unbounded_flag) {
    ConditionRow row;
    row.name = name;
    row.worst_t = T;
    if (limit.has_value()) {
        const double err_half = std::abs(profile.b(T / 2.0) - *limit);
        const double err_full = std::abs(profile.b(T) - *limit);
        row.worst_margin = err_half - err_full;  // positive: approaching the limit
        row.holds_on_grid = row.worst_margin >= 0.0;
    } else {
        // Declared unbounded: evidence is growth between the horizons.
        if (unbounded_flag) *unbounded_flag = true;
        row.worst_margin = profile.b(T) - profile.b(T / 2.0);
        row.holds_on_grid = row.worst_margin > 0.0;
    }
    return row;
}

}  // namespace

ConditionReport profile_conditions_check(const RadialProfile& profile,
                                         const Linspace& t_grid,
                                         double asymptotic_T) {
    const double t_abs = std::max(std::abs(t_grid.lo), std::abs(t_grid.hi));
    if (!(asymptotic_T >= t_abs))
        throw std::invalid_argument("profile_conditions_check: asymptotic_T must cover the grid");

    ConditionReport rep;
    rep.rows.push_back(limit_condition("(i)", profile, asymptotic_T, profile.limit_pos_inf(),
                                       nullptr));
    rep.rows.push_back(limit_condition("(ii)", profile, -asymptotic_T, profile.limit_neg_inf(),
                                       &rep.unbounded_limit_variant));
    rep.rows.push_back(pointwise_condition("(iii)", t_grid,
                                           [&](double t) { return -profile.db(t); }));
    rep.rows.push_back(pointwise_condition("(iv)", t_grid, [&](double t) {
        return profile.b(t) - std::abs(profile.db(t));
    }));
    rep.rows.push_back(pointwise_condition("(v)", t_grid, [&](double t) {
        return 1.0 - std::abs(profile.db(t));
    }));
    return rep;
}

// --- tangent line norms and the inequality chain ------------------------

TangentNormSq tangent_norm_sq(const SpiralCurve& curve, double t, double s) {
    const double rho = curve.radius(t);
    const double drho = curve.dradius(t);
    const double abs_db = std::abs(drho);

    TangentNormSq out;
    const double along = rho + s * drho;
    out.raw = along * along + s * s * rho * rho;
    out.c = curve.d + curve.profile.b(t) - abs_db;
    const double regrouped_along = out.c + (1.0 - s) * abs_db;
    out.regrouped = regrouped_along * regrouped_along + s * s * rho * rho;
    return out;
}

bool ChainReport::all_hold() const {
    return c_at_least_one.holds && regrouped_nonneg.holds && norm_exceeds.holds;
}

ChainReport inequality_chain_check(const SpiralCurve& curve,
                                   const Linspace& t_grid,
                                   const Linspace& s_grid) {
    if (curve.d != 1.0)
        throw ConditionsViolatedError(
            "inequality_chain_check: the chain's algebra requires base radius d = 1");

    // Preconditions (iii)-(v) pointwise; weak equality is allowed so the
    // circle (b' = 0) and the exp profile (b = |b'|) stay checkable.
    for (int i = 0; i < t_grid.n; ++i) {
        const double t = t_grid[i];
        const double b = curve.profile.b(t), db = curve.profile.db(t);
        if (db > 0.0 || b - std::abs(db) < 0.0 || 1.0 - std::abs(db) <= 0.0)
            throw ConditionsViolatedError(
                "inequality_chain_check: profile violates conditions (iii)-(v) at t = " +
                std::to_string(t) + "; the chain is vacuous there");
    }

    auto init_link = [](const std::string& name) {
        ChainLink l;
        l.name = name;
        l.min_margin = std::numeric_limits<double>::infinity();
        return l;
    };
    ChainReport rep;
    rep.c_at_least_one = init_link("c_at_least_one");
    rep.regrouped_nonneg = init_link("regrouped_nonneg");
    rep.norm_exceeds = init_link("norm_exceeds");
    rep.min_norm_sq = std::numeric_limits<double>::infinity();

    auto update = [](ChainLink& link, double margin, double t, double s) {
        if (margin < link.min_margin) {
            link.min_margin = margin;
            link.argmin_t = t;
            link.argmin_s = s;
        }
    };

    for (int i = 0; i < t_grid.n; ++i) {
        const double t = t_grid[i];
        const double b = curve.profile.b(t);
        const double abs_db = std::abs(curve.profile.db(t));
        const double c = 1.0 + b - abs_db;
        // c - 1 computed as b - |b'|, which is exact where the two coincide
        update(rep.c_at_least_one, b - abs_db, t, 0.0);

        for (int j = 0; j < s_grid.n; ++j) {
            const double s = s_grid[j];
            const TangentNormSq nsq = tangent_norm_sq(curve, t, s);

            const double regrouped = (0.75 + (s - 0.5) * (s - 0.5)) * c * abs_db +
                                     s * s * (b - abs_db) * (1.0 - abs_db);
            update(rep.regrouped_nonneg, regrouped, t, s);
            // |R|^2 - c^2 - s^2 through its sign-stable expansion
            //   2[(1-s) c |b'| + s^2 b] + (1-s)^2 b'^2 + s^2 b^2,
            // which cannot go negative from rounding the way the direct
            // difference of the two large squares can.
            const double excess = 2.0 * ((1.0 - s) * c * abs_db + s * s * b) +
                                  (1.0 - s) * (1.0 - s) * abs_db * abs_db + s * s * b * b;
            update(rep.norm_exceeds, excess, t, s);

            rep.min_norm_sq = std::min(rep.min_norm_sq, nsq.raw);
            const double gap = std::abs(nsq.raw - nsq.regrouped) /
                               std::max(std::abs(nsq.raw), 1e-300);
            rep.max_form_rel_gap = std::max(rep.max_form_rel_gap, gap);
        }
    }
    rep.c_at_least_one.holds = rep.c_at_least_one.min_margin >= 0.0;
    rep.regrouped_nonneg.holds = rep.regrouped_nonneg.min_margin >= 0.0;
    rep.norm_exceeds.holds = rep.norm_exceeds.min_margin >= 0.0;
    return rep;
}

// --- properness diagnostic ----------------------------------------------

namespace {

double simpson(const SpiralCurve& curve, double a, double b) {
    const double mid = 0.5 * (a + b);
    return (b - a) / 6.0 * (curve.speed(a) + 4.0 * curve.speed(mid) + curve.speed(b));
}

double panel_length(const SpiralCurve& curve, double a, double b) {
    const double mid = 0.5 * (a + b);
    return simpson(curve, a, mid) + simpson(curve, mid, b);
}

// Arc length of the portion of [a, b] with radius(t) <= trap. Panels whose
// three probes agree are integrated whole; crossings are bisected down to
// 1e-12 parameter width.
double trapped_length(const SpiralCurve& curve, double a, double b, double trap, int depth) {
    const double mid = 0.5 * (a + b);
    const bool ia = curve.radius(a) <= trap;
    const bool im = curve.radius(mid) <= trap;
    const bool ib = curve.radius(b) <= trap;
    if (ia == im && im == ib) return ia ? panel_length(curve, a, b) : 0.0;
    if (depth <= 0 || b - a < 1e-12) return im ? panel_length(curve, a, b) : 0.0;
    return trapped_length(curve, a, mid, trap, depth - 1) +
           trapped_length(curve, mid, b, trap, depth - 1);
}

}  // namespace

PropernessReport properness_diagnostic(const SpiralCurve& curve,
                                       const std::vector<double>& T_values,
                                       double trap_radius) {
    if (!(trap_radius > curve.d))
        throw std::invalid_argument(
            "properness_diagnostic: trap_radius must exceed the base radius");
    if (T_values.empty())
        throw std::invalid_argument("properness_diagnostic: no horizons given");

    PropernessReport rep;
    rep.trap_radius = trap_radius;

    std::vector<double> horizons = T_values;
    std::sort(horizons.begin(), horizons.end());

    double prev_T = 0.0, length = 0.0;
    for (double T : horizons) {
        // fixed panel width so refinement decisions are deterministic
        const double panel = 0.25;
        double a = prev_T;
        while (a < T - 1e-15) {
            const double b = std::min(a + panel, T);
            length += trapped_length(curve, a, b, trap_radius, 40);
            a = b;
        }
        rep.rows.push_back({T, length});
        prev_T = T;
    }

    if (rep.rows.size() >= 2) {
        const auto& last = rep.rows[rep.rows.size() - 1];
        const auto& prev = rep.rows[rep.rows.size() - 2];
        rep.last_incremental_slope =
            (last.arc_length_inside - prev.arc_length_inside) / (last.T - prev.T);
        rep.consistent_with_proper =
            (last.arc_length_inside - prev.arc_length_inside) <
            1e-8 * (1.0 + last.arc_length_inside);
    }
    return rep;
}

// --- weighted mean curvature scan ---------------------------------------

WeightedScanReport weighted_mean_curvature_scan(const SpiralCurve& curve,
                                                const Linspace& t_grid) {
    WeightedScanReport rep;
    for (int i = 0; i < t_grid.n; ++i) {
        const double t = t_grid[i];
        const double h = curve.curvature(t);
        const double sup = curve.support(t);
        rep.sup_abs_mean_curv = std::max(rep.sup_abs_mean_curv, std::abs(h));
        rep.sup_abs_support = std::max(rep.sup_abs_support, std::abs(sup));
        rep.sup_abs_weighted = std::max(rep.sup_abs_weighted, std::abs(h + 0.5 * sup));
    }
    return rep;
}

}  // namespace solgeom
