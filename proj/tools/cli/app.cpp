#include "app.hpp"

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "run.hpp"
#include "solgeom/version.hpp"

namespace solgeom::cli {

namespace {

// Raw option values; parsed into RunConfig after CLI11 runs so every
// malformed value surfaces as a ConfigError with a field name.
struct RawOptions {
    std::string surface, orientation = "inward", grid;
    std::string u, v, t, s, p0 = "0,0,0", box = "-2:2,-2:2", cells = "400";
    double cover_tol = 0.0, cert_tol = 0.0;
    bool refine = true;
    std::string checks;
    std::string profile = "arctan:m=1,a=1";
    double d = 1.0, asymptotic_T = 0.0, trap_radius = 1.2;
    std::string horizons = "50,100,200,400";
    int n = 2;
    std::string p;
    std::string out_dir = "out", format = "csv,json";
    int threads = 1;
};

void add_output_options(CLI::App* cmd, RawOptions& raw) {
    cmd->add_option("--out", raw.out_dir, "Output directory")->capture_default_str();
    cmd->add_option("--format", raw.format, "Comma list of csv,json,svg")
        ->capture_default_str();
    cmd->add_option("--threads", raw.threads, "Worker thread cap (results are independent)")
        ->capture_default_str();
}

void add_surface_options(CLI::App* cmd, RawOptions& raw) {
    cmd->add_option("--surface", raw.surface,
                    "Builder spec, e.g. sphere:r=2, torus:R=2,r=0.5, "
                    "spiral-cylinder:arctan,m=1,a=1")
        ->required();
    cmd->add_option("--orientation", raw.orientation, "inward | outward | as-computed")
        ->capture_default_str();
}

void add_grid_options(CLI::App* cmd, RawOptions& raw) {
    cmd->add_option("--grid", raw.grid, "Grid counts NxM (default per builder)");
    cmd->add_option("--u", raw.u, "First-axis parameter range lo:hi");
    cmd->add_option("--v", raw.v, "Second-axis parameter range lo:hi");
}

std::vector<double> parse_double_list(const std::string& text, const std::string& context) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw ConfigError("bad value '" + tok + "' in " + context);
        }
    }
    return out;
}

std::vector<std::string> parse_string_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(tok);
    return out;
}

RunConfig to_config(const std::string& command, const RawOptions& raw) {
    RunConfig cfg;
    cfg.command = command;
    cfg.surface_text = raw.surface;
    cfg.orientation = parse_orientation(raw.orientation);
    cfg.grid_text = raw.grid;
    if (!raw.u.empty()) cfg.u_range = parse_range(raw.u);
    if (!raw.v.empty()) cfg.v_range = parse_range(raw.v);
    cfg.refine = raw.refine;
    cfg.checks = parse_string_list(raw.checks);
    if (!raw.t.empty()) cfg.t_range = parse_range(raw.t);
    if (!raw.s.empty()) cfg.s_range = parse_range(raw.s);
    cfg.p0 = parse_point(raw.p0);
    cfg.box = parse_box(raw.box);
    const auto cells = parse_cells(raw.cells);
    cfg.cells_x = cells.first;
    cfg.cells_y = cells.second;
    cfg.cover_tol = raw.cover_tol;
    cfg.cert_tol = raw.cert_tol;
    cfg.profile_text = raw.profile;
    cfg.base_radius = raw.d;
    cfg.asymptotic_T = raw.asymptotic_T;
    cfg.trap_radius = raw.trap_radius;
    cfg.horizons = parse_double_list(raw.horizons, "--horizons");
    cfg.dim_n = raw.n;
    for (double p : parse_double_list(raw.p.empty() ? "" : raw.p, "--p"))
        cfg.shrinker_p.push_back(int(p));
    cfg.out_dir = raw.out_dir;
    cfg.format_text = raw.format;
    cfg.threads = raw.threads;
    return cfg;
}

// Values such as -50:50:2001 open with a dash; gluing them onto their flag
// keeps CLI11 from reading them as option names.
std::vector<std::string> glue_dash_values(int argc, const char* const* argv) {
    static const std::vector<std::string> value_flags = {
        "--u",   "--v",       "--t",        "--s",        "--p0",
        "--box", "--horizons"};
    std::vector<std::string> args;
    args.reserve(std::size_t(argc));
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        const bool known = std::find(value_flags.begin(), value_flags.end(), a) !=
                           value_flags.end();
        if (known && i + 1 < argc) {
            args.push_back(a + "=" + argv[i + 1]);
            ++i;
        } else {
            args.push_back(std::move(a));
        }
    }
    return args;
}

}  // namespace

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"solgeom: codimension-one geometry of parametric hypersurfaces -- "
                 "soliton identity checks, tangent-plane coverage, spiral gallery"};
    app.set_version_flag("--version", std::string(version_string()));
    app.require_subcommand(1);
    app.fallthrough();  // --config may follow the subcommand name
    app.set_config("--config", "", "Read options from an INI file ([subcommand] sections)");
    app.allow_config_extras(false);  // unknown keys in the file are rejected

    RawOptions raw;

    CLI::App* frames = app.add_subcommand("frames", "Per-node geometric data of a surface");
    add_surface_options(frames, raw);
    add_grid_options(frames, raw);
    add_output_options(frames, raw);

    CLI::App* identities =
        app.add_subcommand("identities", "Residuals of the tangential-calculus identities");
    add_surface_options(identities, raw);
    add_grid_options(identities, raw);
    identities->add_flag("--refine,!--no-refine", raw.refine,
                         "Also run at halved spacing and report the observed order");
    identities->add_option("--checks", raw.checks,
                           "Comma list of grad,div,master,shrinker-pde (default all)");
    add_output_options(identities, raw);

    CLI::App* omission =
        app.add_subcommand("omission", "Tangent-plane omission certificate and coverage raster");
    add_surface_options(omission, raw);
    add_grid_options(omission, raw);
    omission->add_option("--t", raw.t, "Curve parameter samples lo:hi:count");
    omission->add_option("--p0", raw.p0, "Certificate base point x,y[,z]")
        ->capture_default_str();
    omission->add_option("--box", raw.box, "Raster box xlo:xhi,ylo:yhi")->capture_default_str();
    omission->add_option("--cells", raw.cells, "Raster cells N or NxM")->capture_default_str();
    omission->add_option("--cover-tol", raw.cover_tol,
                         "Coverage tolerance (default 1.5 cell diagonals)");
    omission->add_option("--cert-tol", raw.cert_tol,
                         "Nonvanishing certificate tolerance (default 1e-6 box extent)");
    add_output_options(omission, raw);

    CLI::App* spiral = app.add_subcommand("spiral", "Spiral-cylinder family reports");
    spiral->add_option("--profile", raw.profile, "arctan:m=..,a=.. | exp | zero")
        ->capture_default_str();
    spiral->add_option("--d", raw.d, "Base radius of the spiral")->capture_default_str();
    spiral->add_option("--checks", raw.checks,
                       "Comma list of conditions,chain,curvature,properness,weighted "
                       "(default all)");
    spiral->add_option("--t", raw.t, "t grid lo:hi:count");
    spiral->add_option("--s", raw.s, "s grid lo:hi:count");
    spiral->add_option("--asymptotic-T", raw.asymptotic_T,
                       "Horizon for the limit conditions (default max |t|)");
    spiral->add_option("--trap-radius", raw.trap_radius, "Properness trap radius")
        ->capture_default_str();
    spiral->add_option("--horizons", raw.horizons, "Comma list of properness horizons T")
        ->capture_default_str();
    add_output_options(spiral, raw);

    CLI::App* canonical =
        app.add_subcommand("canonical", "Round shrinker suite S^p(sqrt(2p)) x R^(n-p)");
    canonical->add_option("--n", raw.n, "Intrinsic dimension (1 or 2)")->capture_default_str();
    canonical->add_option("--p", raw.p, "Comma list of p values (default all 0..n)");
    canonical->add_option("--grid", raw.grid, "Sample grid counts NxM");
    add_output_options(canonical, raw);

    std::vector<std::string> args = glue_dash_values(argc, argv);
    try {
        // CLI11 parses reversed argument lists
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << version_string() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "config error: " << e.what() << "\n";
        return 2;
    }

    std::string command;
    for (CLI::App* sub : {frames, identities, omission, spiral, canonical})
        if (sub->parsed()) command = sub->get_name();

    try {
        const RunConfig cfg = to_config(command, raw);
        run(cfg, out);
        return 0;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "config error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "numerical failure in " << command << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "failure in " << command << ": " << e.what() << "\n";
        return 1;
    }
}

}  // namespace solgeom::cli
