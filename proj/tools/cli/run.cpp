#include "run.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "reports_io.hpp"
#include "solgeom/identities.hpp"
#include "solgeom/version.hpp"

namespace solgeom::cli {

namespace fs = std::filesystem;

namespace {

struct Emitter {
    const RunConfig& config;
    std::ostream& log;
    RunResult result;

    fs::path out(const std::string& name) const { return fs::path(config.out_dir) / name; }

    void note_artifact(const fs::path& p) {
        result.artifacts.push_back(p);
        log << "wrote " << p.string() << "\n";
    }

    void emit_csv(const std::string& name, const std::vector<std::string>& header,
                  const std::vector<std::vector<std::string>>& rows) {
        if (!config.want_csv()) return;
        CsvFile csv(out(name), config, header);
        for (const auto& r : rows) csv.row(r);
        csv.close();
        note_artifact(out(name));
    }

    void emit_json(nlohmann::json body) {
        result.summary = provenance_json(config);
        result.summary.update(body);
        if (!config.want_json()) return;
        const fs::path p = out(config.command + ".json");
        write_json_file(p, result.summary);
        note_artifact(p);
    }

    void emit_svg(const std::string& name, const std::string& content) {
        if (!config.want_svg()) return;
        write_text_file(out(name), content);
        note_artifact(out(name));
    }
};

ParamGrid make_grid(const RunConfig& config, const SurfaceSpec& spec, int def_u = 81,
                    int def_v = 81) {
    const auto counts = config.grid_counts(def_u, def_v);
    auto dom = spec.default_grid_domain();
    if (config.u_range) dom[0] = AxisRange{config.u_range->lo, config.u_range->hi};
    if (config.v_range) dom[1] = AxisRange{config.v_range->lo, config.v_range->hi};
    return ParamGrid::box(dom[0], dom[1], counts.first, counts.second);
}

std::vector<std::string> effective_checks(const RunConfig& config,
                                          const std::vector<std::string>& all) {
    if (config.checks.empty()) return all;
    for (const auto& c : config.checks)
        if (c == "all") return all;
    return config.checks;
}

bool wants(const std::vector<std::string>& checks, const std::string& name) {
    return std::find(checks.begin(), checks.end(), name) != checks.end();
}

nlohmann::json report_json(const IdentityReport& r) {
    nlohmann::json j;
    j["identity"] = r.identity_name;
    j["h"] = r.h;
    j["residual_inf"] = r.residual_inf;
    j["residual_l2"] = r.residual_l2;
    j["coarse_residual_inf"] = r.coarse_residual_inf;
    if (r.order_estimate) j["order_estimate"] = *r.order_estimate;
    j["trivial_field"] = r.trivial_field;
    if (r.max_soliton_residual) j["max_soliton_residual"] = *r.max_soliton_residual;
    if (r.decomposition_inf) j["decomposition_inf"] = *r.decomposition_inf;
    return j;
}

// --- frames ----------------------------------------------------------------

void run_frames(Emitter& em) {
    const RunConfig& config = em.config;
    SurfaceSpec spec = SurfaceSpec::parse(config.surface_text);
    spec.orientation = config.orientation;
    const auto surface = spec.build();
    const ParamGrid grid = make_grid(config, spec);
    const FrameField<2> frames = sample_frames(*surface, grid, config.orientation);

    std::vector<std::vector<std::string>> rows;
    rows.reserve(frames.frames.size());
    double max_residual = 0.0, min_support = 1e300, max_support = -1e300;
    for (int j = 0; j < grid.count(1); ++j)
        for (int i = 0; i < grid.count(0); ++i) {
            const auto node = grid.node(i, j);
            const GeomFrame<2>& fr = frames.at(i, j);
            const double res = soliton_residual(fr, kShrinkerEpsilon);
            max_residual = std::max(max_residual, std::abs(res));
            min_support = std::min(min_support, fr.support);
            max_support = std::max(max_support, fr.support);
            rows.push_back({fmt(node[0]), fmt(node[1]), fmt(fr.position.x()),
                            fmt(fr.position.y()), fmt(fr.position.z()), fmt(fr.normal.x()),
                            fmt(fr.normal.y()), fmt(fr.normal.z()), fmt(fr.support),
                            fmt(fr.mean_curv), fmt(fr.shape_norm_sq), fmt(res)});
        }
    em.emit_csv("frames.csv",
                {"u", "v", "x", "y", "z", "nx", "ny", "nz", "support", "mean_curv",
                 "shape_norm_sq", "shrinker_residual"},
                rows);

    nlohmann::json j;
    j["nodes"] = frames.frames.size();
    j["support_min"] = min_support;
    j["support_max"] = max_support;
    j["max_abs_shrinker_residual"] = max_residual;
    em.emit_json({{"frames", j}});
    em.log << "frames: " << frames.frames.size() << " nodes, support in [" << fmt(min_support)
           << ", " << fmt(max_support) << "]\n";
}

// --- identities --------------------------------------------------------------

void run_identities(Emitter& em) {
    const RunConfig& config = em.config;
    SurfaceSpec spec = SurfaceSpec::parse(config.surface_text);
    spec.orientation = config.orientation;
    const auto surface = spec.build();
    const ParamGrid grid = make_grid(config, spec);
    const auto checks =
        effective_checks(config, {"grad", "div", "master", "shrinker-pde"});

    std::vector<IdentityReport> reports;
    if (wants(checks, "grad"))
        reports.push_back(check_grad_identity(*surface, config.orientation, grid, config.refine));
    if (wants(checks, "div"))
        reports.push_back(check_div_identity(*surface, config.orientation, grid, config.refine));
    if (wants(checks, "master"))
        reports.push_back(
            check_master_identity(*surface, config.orientation, grid, config.refine));
    if (wants(checks, "shrinker-pde"))
        reports.push_back(check_shrinker_pde(*surface, config.orientation, grid, config.refine));

    std::vector<std::vector<std::string>> rows;
    nlohmann::json jreports = nlohmann::json::array();
    std::vector<LogLogSeries> series;
    for (const IdentityReport& r : reports) {
        rows.push_back(
            {r.identity_name, fmt(r.h), fmt(r.residual_inf), fmt(r.residual_l2),
             fmt_opt(r.order_estimate)});
        jreports.push_back(report_json(r));
        if (config.refine)
            series.push_back(LogLogSeries{
                r.identity_name,
                {{2.0 * r.h, r.coarse_residual_inf}, {r.h, r.residual_inf}}});
        em.log << "identity " << r.identity_name << ": residual_inf=" << fmt(r.residual_inf)
               << (r.order_estimate ? " order=" + fmt(*r.order_estimate) : std::string())
               << (r.trivial_field ? " (trivial field)" : "") << "\n";
    }
    em.emit_csv("identities.csv",
                {"identity_name", "h", "residual_inf", "residual_l2", "order_estimate"}, rows);
    if (config.refine) em.emit_svg("residual_vs_h.svg", svg_residual_loglog(config, series));
    em.emit_json({{"identities", jreports}});
}

// --- omission ---------------------------------------------------------------

nlohmann::json certificate_json(const OmissionCertificate& c) {
    nlohmann::json j;
    j["min_support"] = c.min_support;
    j["min_plane_distance"] = c.min_plane_distance;
    j["all_nonzero"] = c.all_nonzero;
    j["cert_tol"] = c.cert_tol;
    j["samples"] = c.sample_count;
    j["max_sample_spacing"] = c.max_sample_spacing;
    return j;
}

void run_omission(Emitter& em) {
    const RunConfig& config = em.config;
    SurfaceSpec spec = SurfaceSpec::parse(config.surface_text);
    spec.orientation = config.orientation;

    const double box_extent = std::max(config.box.x.width(), config.box.y.width());
    const double cert_tol =
        config.cert_tol > 0.0 ? config.cert_tol : kCertTolScale * box_extent;

    nlohmann::json body;
    OmissionCertificate cert;

    if (spec.reduces_to_curve()) {
        // Tangent planes of curve-cross-line surfaces are vertical planes
        // over the tangent lines, so the whole computation lives in the
        // plane and the raster decides the 3D omitted set.
        const auto curve = spec.build_curve();
        const Linspace ts = config.t_range.linspace(2001);
        const std::vector<double> t_samples = ts.values();
        std::vector<ParamPoint<1>> samples;
        samples.reserve(t_samples.size());
        for (double t : t_samples) samples.push_back({t});

        cert = omission_certificate<1>(*curve, config.orientation, samples,
                                       Vec2(config.p0[0], config.p0[1]), cert_tol);
        cert.max_sample_spacing = ts.spacing();

        const auto lines = sample_tangent_lines(*curve, config.orientation, t_samples);
        const CoverageRaster raster =
            coverage_raster(lines, config.box, config.cells_x, config.cells_y, config.cover_tol,
                            config.threads);

        std::vector<std::vector<std::string>> rows;
        rows.reserve(raster.min_dist.size());
        for (int j = 0; j < raster.ny; ++j)
            for (int i = 0; i < raster.nx; ++i) {
                const Vec2 c = raster.center(i, j);
                rows.push_back({fmt(c.x()), fmt(c.y()), fmt(raster.min_dist[raster.index(i, j)]),
                                raster.covered[raster.index(i, j)] ? "1" : "0"});
            }
        em.emit_csv("raster.csv", {"cx", "cy", "min_dist", "covered"}, rows);
        em.emit_svg("raster.svg", svg_raster_heatmap(config, raster));

        nlohmann::json jr;
        jr["cells_x"] = raster.nx;
        jr["cells_y"] = raster.ny;
        jr["cover_tol"] = raster.cover_tol;
        jr["cell_diagonal"] = raster.cell_diagonal();
        jr["planes"] = raster.plane_count;
        jr["plane_spacing"] = ts.spacing();
        jr["covered_cells"] = raster.covered_count();
        jr["covered_fraction_annulus_1.05_1.8"] =
            raster.covered_fraction_in_annulus(1.05, 1.8);
        body["raster"] = jr;
        em.log << "raster: " << raster.covered_count() << "/" << raster.min_dist.size()
               << " covered cells (tol " << fmt(raster.cover_tol) << ")\n";
    } else {
        const auto surface = spec.build();
        const ParamGrid grid = make_grid(config, spec, 101, 101);
        std::vector<ParamPoint<2>> samples;
        for (int j = 0; j < grid.count(1); ++j)
            for (int i = 0; i < grid.count(0); ++i) {
                const auto node = grid.node(i, j);
                const ParamPoint<2> u{node[0], node[1]};
                if (surface->contains(u)) samples.push_back(u);
            }
        cert = omission_certificate<2>(*surface, config.orientation, samples,
                                       Vec3(config.p0[0], config.p0[1], config.p0[2]), cert_tol);
        cert.max_sample_spacing = grid.max_spacing();
        body["raster"] = nullptr;
        em.log << "raster skipped: " << spec.kind << " has no planar reduction\n";
    }

    em.emit_csv("certificate.csv",
                {"min_support", "min_plane_distance", "all_nonzero", "cert_tol", "samples",
                 "max_sample_spacing"},
                {{fmt(cert.min_support), fmt(cert.min_plane_distance),
                  cert.all_nonzero ? "1" : "0", fmt(cert.cert_tol),
                  std::to_string(cert.sample_count), fmt(cert.max_sample_spacing)}});
    body["certificate"] = certificate_json(cert);
    em.emit_json(body);
    em.log << "certificate: min_support=" << fmt(cert.min_support)
           << " all_nonzero=" << (cert.all_nonzero ? "true" : "false") << " over "
           << cert.sample_count << " samples\n";
}

// --- spiral -----------------------------------------------------------------

void run_spiral(Emitter& em) {
    const RunConfig& config = em.config;
    const SpiralCurve curve(parse_profile(config.profile_text), config.base_radius);
    const auto checks = effective_checks(
        config, {"conditions", "chain", "curvature", "properness", "weighted"});
    const bool explicit_checks =
        !config.checks.empty() && std::find(config.checks.begin(), config.checks.end(),
                                            "all") == config.checks.end();

    const Linspace ts = config.t_range.linspace(2001);
    nlohmann::json body;

    if (wants(checks, "conditions")) {
        const double T =
            config.asymptotic_T > 0.0
                ? config.asymptotic_T
                : std::max(std::abs(config.t_range.lo), std::abs(config.t_range.hi));
        const ConditionReport rep = profile_conditions_check(curve.profile, ts, T);
        std::vector<std::vector<std::string>> rows;
        nlohmann::json jc = nlohmann::json::array();
        for (const ConditionRow& r : rep.rows) {
            rows.push_back({r.name, r.holds_on_grid ? "1" : "0", fmt(r.worst_margin),
                            fmt(r.worst_t)});
            jc.push_back({{"name", r.name},
                          {"holds_on_grid", r.holds_on_grid},
                          {"worst_margin", r.worst_margin},
                          {"worst_t", r.worst_t}});
        }
        em.emit_csv("conditions.csv", {"name", "holds_on_grid", "worst_margin", "worst_t"}, rows);
        body["conditions"] = {{"rows", jc},
                              {"unbounded_limit_variant", rep.unbounded_limit_variant},
                              {"all_hold", rep.all_hold()}};
        em.log << "conditions: " << (rep.all_hold() ? "all hold" : "not all hold") << "\n";
    }

    if (wants(checks, "chain")) {
        const Linspace ss = config.s_range.linspace(2001);
        bool ran = false;
        try {
            const ChainReport rep = inequality_chain_check(curve, ts, ss);
            ran = true;
            auto link_row = [](const ChainLink& l) {
                return std::vector<std::string>{l.name, l.holds ? "1" : "0", fmt(l.min_margin),
                                                fmt(l.argmin_t), fmt(l.argmin_s)};
            };
            em.emit_csv("chain.csv", {"link", "holds", "min_margin", "argmin_t", "argmin_s"},
                        {link_row(rep.c_at_least_one), link_row(rep.regrouped_nonneg),
                         link_row(rep.norm_exceeds)});
            auto link_json = [](const ChainLink& l) {
                return nlohmann::json{{"name", l.name},
                                      {"holds", l.holds},
                                      {"min_margin", l.min_margin},
                                      {"argmin_t", l.argmin_t},
                                      {"argmin_s", l.argmin_s}};
            };
            body["chain"] = {{"links",
                              {link_json(rep.c_at_least_one), link_json(rep.regrouped_nonneg),
                               link_json(rep.norm_exceeds)}},
                             {"all_hold", rep.all_hold()},
                             {"min_norm_sq", rep.min_norm_sq},
                             {"max_form_rel_gap", rep.max_form_rel_gap}};
            em.log << "chain: " << (rep.all_hold() ? "all links hold" : "violated")
                   << ", min |R|^2 = " << fmt(rep.min_norm_sq) << "\n";
        } catch (const ConditionsViolatedError& e) {
            if (explicit_checks) throw;  // the user asked for the chain specifically
            body["chain"] = {{"skipped", e.what()}};
            em.log << "chain skipped: " << e.what() << "\n";
        }
    }

    if (wants(checks, "curvature")) {
        std::vector<std::vector<std::string>> rows;
        rows.reserve(std::size_t(ts.n));
        double k_min = 1e300, k_max = -1e300;
        for (int i = 0; i < ts.n; ++i) {
            const double k = curve.curvature(ts[i]);
            k_min = std::min(k_min, k);
            k_max = std::max(k_max, k);
            rows.push_back({fmt(ts[i]), fmt(k)});
        }
        em.emit_csv("curvature.csv", {"t", "curvature"}, rows);
        nlohmann::json jk;
        jk["k_at_t_lo"] = curve.curvature(ts.lo);
        jk["k_at_t_hi"] = curve.curvature(ts.hi);
        jk["k_min"] = k_min;
        jk["k_max"] = k_max;
        jk["upper_bound_1_over_d"] = 1.0 / curve.d;
        if (curve.profile.limit_neg_inf())
            jk["lower_bound_1_over_d_plus_m"] = 1.0 / (curve.d + *curve.profile.limit_neg_inf());
        body["curvature"] = jk;
        em.log << "curvature: k(" << fmt(ts.lo) << ")=" << fmt(curve.curvature(ts.lo)) << ", k("
               << fmt(ts.hi) << ")=" << fmt(curve.curvature(ts.hi)) << "\n";
    }

    if (wants(checks, "properness")) {
        const PropernessReport rep =
            properness_diagnostic(curve, config.horizons, config.trap_radius);
        std::vector<std::vector<std::string>> rows;
        nlohmann::json jrows = nlohmann::json::array();
        for (const PropernessRow& r : rep.rows) {
            rows.push_back({fmt(r.T), fmt(r.arc_length_inside)});
            jrows.push_back({{"T", r.T}, {"arc_length_inside", r.arc_length_inside}});
        }
        em.emit_csv("properness.csv", {"T", "arc_length_inside"}, rows);
        body["properness"] = {{"rows", jrows},
                              {"trap_radius", rep.trap_radius},
                              {"last_incremental_slope", rep.last_incremental_slope},
                              {"consistent_with_proper", rep.consistent_with_proper}};
        em.log << "properness: trapped length at T=" << fmt(rep.rows.back().T) << " is "
               << fmt(rep.rows.back().arc_length_inside)
               << (rep.consistent_with_proper ? " (saturating)" : " (growing)") << "\n";
    }

    if (wants(checks, "weighted")) {
        const WeightedScanReport rep = weighted_mean_curvature_scan(curve, ts);
        em.emit_csv("weighted.csv",
                    {"sup_abs_mean_curv", "sup_abs_support", "sup_abs_weighted_mean_curv"},
                    {{fmt(rep.sup_abs_mean_curv), fmt(rep.sup_abs_support),
                      fmt(rep.sup_abs_weighted)}});
        body["weighted"] = {{"sup_abs_mean_curv", rep.sup_abs_mean_curv},
                            {"sup_abs_support", rep.sup_abs_support},
                            {"sup_abs_weighted_mean_curv", rep.sup_abs_weighted}};
        em.log << "weighted scan: sup|H|=" << fmt(rep.sup_abs_mean_curv)
               << " sup|<X,N>|=" << fmt(rep.sup_abs_support) << "\n";
    }

    if (em.config.want_svg()) {
        std::vector<Vec2> points;
        const int trace_n = std::min(ts.n, 4001);
        const Linspace trace{ts.lo, ts.hi, trace_n};
        points.reserve(std::size_t(trace_n));
        for (int i = 0; i < trace_n; ++i) points.push_back(curve.point(trace[i]));
        std::vector<double> guides{curve.d};
        if (curve.profile.limit_neg_inf() && *curve.profile.limit_neg_inf() > 0.0)
            guides.push_back(curve.d + *curve.profile.limit_neg_inf());
        em.emit_svg("curve.svg", svg_curve_trace(config, points, guides));
    }

    em.emit_json(body);
}

// --- canonical ----------------------------------------------------------------

void run_canonical(Emitter& em) {
    const RunConfig& config = em.config;
    std::vector<int> ps = config.shrinker_p;
    if (ps.empty())
        for (int p = 0; p <= config.dim_n; ++p) ps.push_back(p);
    std::sort(ps.begin(), ps.end());

    const auto counts = config.grid_counts(101, 101);
    std::vector<std::vector<std::string>> rows;
    nlohmann::json jrows = nlohmann::json::array();

    for (int p : ps) {
        double max_res = 0.0, max_shape = 0.0, max_support_err = 0.0;
        std::size_t samples = 0;
        const double expected_support = p > 0 ? -std::sqrt(2.0 * p) : 0.0;

        auto scan2 = [&](const Surface<2>& s, const ParamGrid& grid) {
            const FrameField<2> frames = sample_frames(s, grid, Orientation::Inward);
            for (const auto& fr : frames.frames) {
                max_res = std::max(max_res,
                                   std::abs(soliton_residual(fr, kShrinkerEpsilon)));
                if (p > 0)
                    max_shape = std::max(max_shape, std::abs(fr.shape_norm_sq - 0.5));
                max_support_err =
                    std::max(max_support_err, std::abs(fr.support - expected_support));
            }
            samples += frames.frames.size();
        };
        auto scan1 = [&](const Surface<1>& s, const ParamGrid& grid) {
            const FrameField<1> frames = sample_frames(s, grid, Orientation::Inward);
            for (const auto& fr : frames.frames) {
                max_res = std::max(max_res,
                                   std::abs(soliton_residual(fr, kShrinkerEpsilon)));
                if (p > 0)
                    max_shape = std::max(max_shape, std::abs(fr.shape_norm_sq - 0.5));
                max_support_err =
                    std::max(max_support_err, std::abs(fr.support - expected_support));
            }
            samples += frames.frames.size();
        };

        if (config.dim_n == 2) {
            if (p == 2) {
                // both polar caps of the round sphere
                scan2(*make_sphere_cap(2.0, +1),
                      ParamGrid::box({-0.55, 0.55}, {-0.55, 0.55}, counts.first, counts.second));
                scan2(*make_sphere_cap(2.0, -1),
                      ParamGrid::box({-0.55, 0.55}, {-0.55, 0.55}, counts.first, counts.second));
            } else if (p == 1) {
                scan2(*canonical_shrinker<2>(1),
                      ParamGrid::box({-2.5, 2.5}, {-1.0, 1.0}, counts.first, counts.second));
            } else {
                scan2(*canonical_shrinker<2>(0),
                      ParamGrid::box({-1.0, 1.0}, {-1.0, 1.0}, counts.first, counts.second));
            }
        } else {
            scan1(*canonical_shrinker<1>(p),
                  ParamGrid::line({-2.5, 2.5}, counts.first * counts.second));
        }

        rows.push_back({std::to_string(p), std::to_string(samples), fmt(max_res),
                        fmt(max_support_err), p > 0 ? fmt(max_shape) : std::string()});
        nlohmann::json jr;
        jr["p"] = p;
        jr["samples"] = samples;
        jr["max_abs_shrinker_residual"] = max_res;
        jr["max_abs_support_error"] = max_support_err;
        if (p > 0) jr["max_abs_shape_norm_sq_minus_half"] = max_shape;
        jrows.push_back(jr);
        em.log << "canonical p=" << p << ": max residual " << fmt(max_res) << " over " << samples
               << " samples\n";
    }

    em.emit_csv("canonical.csv",
                {"p", "samples", "max_abs_shrinker_residual", "max_abs_support_error",
                 "max_abs_shape_norm_sq_minus_half"},
                rows);
    em.emit_json({{"canonical", jrows}});
}

}  // namespace

RunResult run(const RunConfig& config, std::ostream& log) {
    config.validate();
    fs::create_directories(config.out_dir);

    Emitter em{config, log, {}};
    if (config.command == "frames")
        run_frames(em);
    else if (config.command == "identities")
        run_identities(em);
    else if (config.command == "omission")
        run_omission(em);
    else if (config.command == "spiral")
        run_spiral(em);
    else if (config.command == "canonical")
        run_canonical(em);
    else
        throw ConfigError("unknown command '" + config.command + "'");
    return std::move(em.result);
}

}  // namespace solgeom::cli
