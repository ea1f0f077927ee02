#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "solgeom/omission.hpp"
#include "solgeom/profile.hpp"
#include "solgeom/surface_spec.hpp"

namespace solgeom::cli {

// "lo:hi" or "lo:hi:count"
struct RangeSpec {
    double lo = 0.0;
    double hi = 1.0;
    int count = 0;  // 0: unspecified

    Linspace linspace(int default_count) const {
        return Linspace{lo, hi, count > 0 ? count : default_count};
    }
};

RangeSpec parse_range(const std::string& text);           // throws ConfigError
std::pair<int, int> parse_cells(const std::string& text); // "400" or "400x300"
Box2 parse_box(const std::string& text);                  // "xlo:xhi,ylo:yhi"
std::array<double, 3> parse_point(const std::string& text);  // "x,y[,z]"
Orientation parse_orientation(const std::string& text);
RadialProfile parse_profile(const std::string& text);     // "arctan:m=1,a=1" | "exp" | "zero"

// Fully resolved run description. Field defaults are the CLI defaults.
struct RunConfig {
    std::string command;

    // geometry
    std::string surface_text;  // frames/identities/omission
    Orientation orientation = Orientation::Inward;
    std::string grid_text;     // "NxM" counts
    std::optional<RangeSpec> u_range, v_range;

    // identities
    bool refine = true;
    std::vector<std::string> checks;  // empty = all

    // omission / spiral sweeps
    RangeSpec t_range{-50.0, 50.0, 2001};
    RangeSpec s_range{-100.0, 100.0, 2001};
    std::array<double, 3> p0{0.0, 0.0, 0.0};
    Box2 box{{-2.0, 2.0}, {-2.0, 2.0}};
    int cells_x = 400, cells_y = 400;
    double cover_tol = 0.0;  // 0: 1.5 cell diagonals
    double cert_tol = 0.0;   // 0: 1e-6 * box extent

    // spiral
    std::string profile_text = "arctan:m=1,a=1";
    double base_radius = 1.0;
    double asymptotic_T = 0.0;  // 0: max |t|
    double trap_radius = 1.2;
    std::vector<double> horizons{50.0, 100.0, 200.0, 400.0};

    // canonical
    int dim_n = 2;
    std::vector<int> shrinker_p;  // empty = all 0..n

    // output
    std::string out_dir = "out";
    std::string format_text = "csv,json";
    int threads = 1;

    bool want_csv() const;
    bool want_json() const;
    bool want_svg() const;

    std::pair<int, int> grid_counts(int def_u, int def_v) const;

    // Effective settings echoed into every artifact, sorted by key.
    std::vector<std::pair<std::string, std::string>> provenance() const;

    void validate() const;  // throws ConfigError on bad values
};

}  // namespace solgeom::cli
