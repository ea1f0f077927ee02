#include "run_config.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "solgeom/errors.hpp"

namespace solgeom::cli {

namespace {

double to_double(const std::string& text, const std::string& context) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("bad numeric value '" + text + "' in " + context);
    }
}

int to_int(const std::string& text, const std::string& context) {
    int v = 0;
    const auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || p != text.data() + text.size())
        throw ConfigError("bad integer value '" + text + "' in " + context);
    return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, sep)) out.push_back(tok);
    return out;
}

}  // namespace

RangeSpec parse_range(const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.size() < 2 || parts.size() > 3)
        throw ConfigError("range '" + text + "' must be lo:hi or lo:hi:count");
    RangeSpec r;
    r.lo = to_double(parts[0], "range");
    r.hi = to_double(parts[1], "range");
    if (parts.size() == 3) r.count = to_int(parts[2], "range count");
    if (!(r.hi > r.lo)) throw ConfigError("range '" + text + "' needs hi > lo");
    if (parts.size() == 3 && r.count < 2) throw ConfigError("range count must be >= 2");
    return r;
}

std::pair<int, int> parse_cells(const std::string& text) {
    const auto parts = split(text, 'x');
    if (parts.size() == 1) {
        const int n = to_int(parts[0], "cells");
        return {n, n};
    }
    if (parts.size() == 2) return {to_int(parts[0], "cells"), to_int(parts[1], "cells")};
    throw ConfigError("cells '" + text + "' must be N or NxM");
}

Box2 parse_box(const std::string& text) {
    const auto parts = split(text, ',');
    if (parts.size() != 2) throw ConfigError("box '" + text + "' must be xlo:xhi,ylo:yhi");
    const RangeSpec x = parse_range(parts[0]);
    const RangeSpec y = parse_range(parts[1]);
    return Box2{{x.lo, x.hi}, {y.lo, y.hi}};
}

std::array<double, 3> parse_point(const std::string& text) {
    const auto parts = split(text, ',');
    if (parts.size() != 2 && parts.size() != 3)
        throw ConfigError("point '" + text + "' must be x,y or x,y,z");
    std::array<double, 3> p{0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < parts.size(); ++i) p[i] = to_double(parts[i], "point");
    return p;
}

Orientation parse_orientation(const std::string& text) {
    if (text == "inward") return Orientation::Inward;
    if (text == "outward") return Orientation::Outward;
    if (text == "as-computed") return Orientation::AsComputed;
    throw ConfigError("orientation must be inward, outward or as-computed, got '" + text + "'");
}

RadialProfile parse_profile(const std::string& text) {
    const auto colon = text.find(':');
    const std::string family = text.substr(0, colon);
    double m = 1.0, a = 1.0;
    if (colon != std::string::npos) {
        for (const std::string& tok : split(text.substr(colon + 1), ',')) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos)
                throw ConfigError("profile token '" + tok + "' must be key=value");
            const std::string key = tok.substr(0, eq);
            const double val = to_double(tok.substr(eq + 1), "profile " + key);
            if (key == "m")
                m = val;
            else if (key == "a")
                a = val;
            else
                throw ConfigError("unknown profile key '" + key + "'");
        }
        if (family != "arctan")
            throw ConfigError("profile '" + family + "' takes no parameters");
    }
    if (family == "arctan") {
        try {
            return RadialProfile::arctan(m, a);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("profile: ") + e.what());
        }
    }
    if (family == "exp") return RadialProfile::exponential();
    if (family == "zero") return RadialProfile::zero();
    throw ConfigError("unknown profile family '" + family + "'");
}

bool RunConfig::want_csv() const { return format_text.find("csv") != std::string::npos; }
bool RunConfig::want_json() const { return format_text.find("json") != std::string::npos; }
bool RunConfig::want_svg() const { return format_text.find("svg") != std::string::npos; }

std::pair<int, int> RunConfig::grid_counts(int def_u, int def_v) const {
    if (grid_text.empty()) return {def_u, def_v};
    const auto counts = parse_cells(grid_text);
    return counts;
}

void RunConfig::validate() const {
    for (const std::string& f : split(format_text, ','))
        if (f != "csv" && f != "json" && f != "svg")
            throw ConfigError("unknown output format '" + f + "'");
    if (threads < 1) throw ConfigError("--threads must be >= 1");
    if (cells_x < 1 || cells_y < 1) throw ConfigError("--cells must be >= 1");
    if (cover_tol < 0.0) throw ConfigError("--cover-tol must be >= 0");
    if (cert_tol < 0.0) throw ConfigError("--cert-tol must be >= 0");
    if (!(trap_radius > 0.0)) throw ConfigError("--trap-radius must be > 0");
    if (!(base_radius > 0.0)) throw ConfigError("--d must be > 0");
    if (dim_n != 1 && dim_n != 2) throw ConfigError("--n must be 1 or 2");
    for (int p : shrinker_p)
        if (p < 0 || p > dim_n) throw ConfigError("--p values must lie in [0, n]");
    if (horizons.empty()) throw ConfigError("--horizons needs at least one value");
    for (double T : horizons)
        if (!(T > 0.0)) throw ConfigError("--horizons values must be > 0");
    if (!checks.empty()) {
        const std::vector<std::string> legal =
            command == "spiral"
                ? std::vector<std::string>{"conditions", "chain", "curvature", "properness",
                                           "weighted"}
                : std::vector<std::string>{"grad", "div", "master", "shrinker-pde"};
        for (const std::string& c : checks)
            if (c != "all" && std::find(legal.begin(), legal.end(), c) == legal.end())
                throw ConfigError("unknown check '" + c + "' for command " + command);
    }
}

std::vector<std::pair<std::string, std::string>> RunConfig::provenance() const {
    std::vector<std::pair<std::string, std::string>> kv;
    auto num = [](double v) {
        std::ostringstream ss;
        ss << v;
        return ss.str();
    };
    auto range_str = [&](const RangeSpec& r) {
        return num(r.lo) + ":" + num(r.hi) + (r.count > 0 ? ":" + std::to_string(r.count) : "");
    };

    kv.emplace_back("command", command);
    kv.emplace_back("format", format_text);
    kv.emplace_back("threads", std::to_string(threads));

    const bool surface_like =
        command == "frames" || command == "identities" || command == "omission";
    if (surface_like) {
        kv.emplace_back("surface", SurfaceSpec::parse(surface_text).canonical_text());
        kv.emplace_back("orientation", to_string(orientation));
    }
    if (command == "frames" || command == "identities" || command == "canonical") {
        const auto counts = grid_counts(81, 81);
        kv.emplace_back("grid", std::to_string(counts.first) + "x" + std::to_string(counts.second));
        if (u_range) kv.emplace_back("u", range_str(*u_range));
        if (v_range) kv.emplace_back("v", range_str(*v_range));
    }
    if (command == "identities") {
        kv.emplace_back("refine", refine ? "true" : "false");
        std::string cs;
        for (const auto& c : checks) cs += (cs.empty() ? "" : ",") + c;
        kv.emplace_back("checks", cs.empty() ? "all" : cs);
    }
    if (command == "omission") {
        kv.emplace_back("t", range_str(t_range));
        kv.emplace_back("p0", num(p0[0]) + "," + num(p0[1]) + "," + num(p0[2]));
        kv.emplace_back("box", num(box.x.lo) + ":" + num(box.x.hi) + "," + num(box.y.lo) + ":" +
                                   num(box.y.hi));
        kv.emplace_back("cells", std::to_string(cells_x) + "x" + std::to_string(cells_y));
        kv.emplace_back("cover_tol", cover_tol > 0 ? num(cover_tol) : std::string("auto"));
        kv.emplace_back("cert_tol", cert_tol > 0 ? num(cert_tol) : std::string("auto"));
    }
    if (command == "spiral") {
        kv.emplace_back("profile", profile_text);
        kv.emplace_back("d", num(base_radius));
        kv.emplace_back("t", range_str(t_range));
        kv.emplace_back("s", range_str(s_range));
        kv.emplace_back("asymptotic_T",
                        asymptotic_T > 0 ? num(asymptotic_T) : std::string("auto"));
        kv.emplace_back("trap_radius", num(trap_radius));
        std::string hs;
        for (double T : horizons) hs += (hs.empty() ? "" : ",") + num(T);
        kv.emplace_back("horizons", hs);
        std::string cs;
        for (const auto& c : checks) cs += (cs.empty() ? "" : ",") + c;
        kv.emplace_back("checks", cs.empty() ? "all" : cs);
    }
    if (command == "canonical") {
        kv.emplace_back("n", std::to_string(dim_n));
        std::string ps;
        for (int p : shrinker_p) ps += (ps.empty() ? "" : ",") + std::to_string(p);
        kv.emplace_back("p", ps.empty() ? "all" : ps);
    }

    std::sort(kv.begin(), kv.end());
    return kv;
}

}  // namespace solgeom::cli
