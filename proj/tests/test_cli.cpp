#include <charconv>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/app.hpp"
#include "cli/reports_io.hpp"
#include "cli/run.hpp"
#include "cli/run_config.hpp"
#include "doctest.h"

using namespace solgeom;
using namespace solgeom::cli;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir(const std::string& tag) {
        path = fs::temp_directory_path() / ("solgeom_test_" + tag);
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

int run_cli(std::initializer_list<const char*> args, std::string* out_text = nullptr,
            std::string* err_text = nullptr) {
    std::vector<const char*> argv{"solgeom"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out, err;
    const int rc = main_entry(int(argv.size()), argv.data(), out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return rc;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("value parsers accept the documented forms") {
    const RangeSpec r = parse_range("-50:50:2001");
    CHECK(r.lo == -50.0);
    CHECK(r.hi == 50.0);
    CHECK(r.count == 2001);
    CHECK(parse_range("0:1").count == 0);

    CHECK(parse_cells("400") == std::pair<int, int>{400, 400});
    CHECK(parse_cells("400x300") == std::pair<int, int>{400, 300});

    const Box2 b = parse_box("-2:2,-1:3");
    CHECK(b.x.lo == -2.0);
    CHECK(b.y.hi == 3.0);

    const auto p = parse_point("1,2,3");
    CHECK(p[2] == 3.0);
    CHECK(parse_point("1,2")[2] == 0.0);

    CHECK(parse_orientation("outward") == Orientation::Outward);
    CHECK(parse_profile("arctan:m=2,a=0.5").b(0.0) == doctest::Approx(1.0));
    CHECK(parse_profile("exp").b(0.0) == 1.0);
    CHECK(parse_profile("zero").b(7.0) == 0.0);
}

TEST_CASE("value parsers reject malformed input") {
    CHECK_THROWS_AS(parse_range("3:1"), ConfigError);
    CHECK_THROWS_AS(parse_range("1"), ConfigError);
    CHECK_THROWS_AS(parse_range("a:b"), ConfigError);
    CHECK_THROWS_AS(parse_cells("4x4x4"), ConfigError);
    CHECK_THROWS_AS(parse_box("-2:2"), ConfigError);
    CHECK_THROWS_AS(parse_point("1"), ConfigError);
    CHECK_THROWS_AS(parse_orientation("up"), ConfigError);
    CHECK_THROWS_AS(parse_profile("arctan:q=1"), ConfigError);
    CHECK_THROWS_AS(parse_profile("exp:m=1"), ConfigError);
    CHECK_THROWS_AS(parse_profile("spline"), ConfigError);
    CHECK_THROWS_AS(parse_profile("arctan:m=-2"), ConfigError);
}

TEST_CASE("config validation rejects bad field values") {
    RunConfig cfg;
    cfg.command = "spiral";
    cfg.format_text = "csv,yaml";
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.format_text = "csv";
    cfg.threads = 0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.threads = 2;
    cfg.checks = {"chainz"};
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.checks = {"chain"};
    cfg.validate();
}

TEST_CASE("numbers round-trip through the formatter") {
    for (double v : {1.0 / 3.0, 1e-17, 6.02214076e23, -0.0, 2.0, 1.0127712158711228,
                     -1.5707963267948966, 5e-324}) {
        const std::string text = fmt(v);
        double back = 0.0;
        const auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), back);
        CHECK(ec == std::errc());
        CHECK(p == text.data() + text.size());
        CHECK(std::memcmp(&back, &v, sizeof v) == 0);
    }
}

TEST_CASE("identities pipeline end to end") {
    TempDir dir("identities");
    std::string out;
    const int rc = run_cli({"identities", "--surface", "sphere:r=2", "--grid", "41x41",
                            "--refine", "--out", (dir.path / "id").string().c_str()},
                           &out);
    CHECK(rc == 0);
    const std::string csv = slurp(dir.path / "id" / "identities.csv");
    CHECK(csv.find("# schema=1") == 0);
    CHECK(csv.find("identity_name,h,residual_inf,residual_l2,order_estimate") !=
          std::string::npos);
    CHECK(csv.find("grad_support") != std::string::npos);

    // every residual on the round shrinker sits below 1e-8
    std::istringstream lines(csv);
    std::string line;
    int data_rows = 0;
    while (std::getline(lines, line)) {
        if (line.empty() || line[0] == '#' || line.find("identity_name") == 0) continue;
        std::stringstream cells(line);
        std::string name, h, inf;
        std::getline(cells, name, ',');
        std::getline(cells, h, ',');
        std::getline(cells, inf, ',');
        CHECK(std::stod(inf) < 1e-8);
        ++data_rows;
    }
    CHECK(data_rows == 4);
    CHECK(fs::exists(dir.path / "id" / "identities.json"));
}

TEST_CASE("spiral and omission pipelines write their artifacts") {
    TempDir dir("spiral");
    const std::string out_dir = (dir.path / "sp").string();
    const int rc = run_cli({"spiral", "--profile", "arctan:m=1,a=1", "--checks", "all", "--t",
                            "-20:20:401", "--s", "-30:30:201", "--format", "csv,json,svg",
                            "--out", out_dir.c_str()});
    CHECK(rc == 0);
    for (const char* name :
         {"conditions.csv", "chain.csv", "curvature.csv", "properness.csv", "weighted.csv",
          "curve.svg", "spiral.json"})
        CHECK(fs::exists(fs::path(out_dir) / name));

    TempDir dir2("omission");
    const std::string omi_dir = (dir2.path / "om").string();
    const int rc2 = run_cli({"omission", "--surface", "circle:r=1", "--t", "-3.14:3.14:500",
                             "--cells", "50", "--format", "csv,json,svg", "--out",
                             omi_dir.c_str()});
    CHECK(rc2 == 0);
    for (const char* name : {"certificate.csv", "raster.csv", "raster.svg", "omission.json"})
        CHECK(fs::exists(fs::path(omi_dir) / name));
}

TEST_CASE("exit codes distinguish config errors from numerical failures") {
    std::string err;
    CHECK(run_cli({"identities", "--surface", "sphere:radius=2"}, nullptr, &err) == 2);
    CHECK(err.find("config error") != std::string::npos);

    CHECK(run_cli({"identities", "--surface", "sphere:r=2", "--bogus-flag"}, nullptr, &err) == 2);
    CHECK(run_cli({"nonsense"}, nullptr, &err) == 2);
    CHECK(run_cli({"spiral", "--d", "-1"}, nullptr, &err) == 2);

    // chain explicitly requested on a profile violating its preconditions:
    // a numerical failure, not a config error
    TempDir dir("violate");
    const int rc = run_cli({"spiral", "--profile", "arctan:m=4,a=1", "--checks", "chain", "--t",
                            "-5:5:101", "--s", "-5:5:11", "--out",
                            (dir.path / "x").string().c_str()},
                           nullptr, &err);
    CHECK(rc == 1);
    CHECK(err.find("spiral") != std::string::npos);

    // out-of-domain grid: numerical failure naming the operation
    const int rc2 = run_cli({"frames", "--surface", "sphere:r=2", "--u", "0:2", "--out",
                             (dir.path / "y").string().c_str()},
                            nullptr, &err);
    CHECK(rc2 == 1);
}

TEST_CASE("checks=all skips the chain when preconditions fail") {
    TempDir dir("skip");
    std::string out;
    const int rc = run_cli({"spiral", "--profile", "exp", "--t", "-5:50:111", "--s", "-5:5:11",
                            "--checks", "all", "--out", (dir.path / "x").string().c_str()},
                           &out);
    CHECK(rc == 0);
    CHECK(out.find("chain skipped") != std::string::npos);
    const std::string json = slurp(dir.path / "x" / "spiral.json");
    CHECK(json.find("skipped") != std::string::npos);
}

TEST_CASE("repeated runs are byte-identical") {
    TempDir dir("determinism");
    for (const char* sub : {"a", "b"}) {
        const std::string out_dir = (dir.path / sub).string();
        CHECK(run_cli({"identities", "--surface", "torus:R=2,r=0.5", "--grid", "21x21", "--u",
                       "-2:2", "--v", "-2:2", "--out", out_dir.c_str()}) == 0);
        CHECK(run_cli({"canonical", "--grid", "31x31", "--out", out_dir.c_str()}) == 0);
    }
    for (const char* name : {"identities.csv", "identities.json", "canonical.csv",
                             "canonical.json"})
        CHECK(slurp(dir.path / "a" / name) == slurp(dir.path / "b" / name));
}

TEST_CASE("config file values are overridden by flags") {
    TempDir dir("configfile");
    const fs::path ini = dir.path / "run.ini";
    {
        std::ofstream out(ini);
        out << "[canonical]\n";
        out << "grid=31x31\n";
        out << "out=" << (dir.path / "from_file").string() << "\n";
    }
    CHECK(run_cli({"canonical", "--config", ini.string().c_str()}) == 0);
    CHECK(fs::exists(dir.path / "from_file" / "canonical.csv"));

    CHECK(run_cli({"canonical", "--config", ini.string().c_str(), "--out",
                   (dir.path / "from_flag").string().c_str()}) == 0);
    CHECK(fs::exists(dir.path / "from_flag" / "canonical.csv"));

    {
        std::ofstream out(ini, std::ios::app);
        out << "unknown_key=1\n";
    }
    std::string err;
    CHECK(run_cli({"canonical", "--config", ini.string().c_str()}, nullptr, &err) == 2);
}

TEST_CASE("version flag") {
    std::string out;
    CHECK(run_cli({"--version"}, &out) == 0);
    CHECK(out.find("solgeom/") == 0);
}
