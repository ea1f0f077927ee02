#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "run_config.hpp"
#include "solgeom/omission.hpp"
#include "solgeom/spiral.hpp"

namespace solgeom::cli {

// Shortest text form that round-trips the double exactly.
std::string fmt(double v);
std::string fmt_opt(const std::optional<double>& v);

// CSV with '#'-prefixed provenance comments, then a header row.
class CsvFile {
public:
    CsvFile(const std::filesystem::path& path, const RunConfig& config,
            const std::vector<std::string>& header);
    void row(const std::vector<std::string>& cells);
    void close();

private:
    std::string buffer_;
    std::filesystem::path path_;
    std::size_t columns_;
    bool closed_ = false;
};

// Provenance block shared by every format.
std::string provenance_comment(const RunConfig& config);
nlohmann::json provenance_json(const RunConfig& config);

void write_text_file(const std::filesystem::path& path, const std::string& content);
void write_json_file(const std::filesystem::path& path, const nlohmann::json& doc);

// --- SVG emitters (hand-rolled, deterministic) ---------------------------

// Planar curve trace with optional guide circles around the origin.
std::string svg_curve_trace(const RunConfig& config, const std::vector<Vec2>& points,
                            const std::vector<double>& guide_radii);

// Coverage heat map; cells shaded by min distance, run-length merged rows.
std::string svg_raster_heatmap(const RunConfig& config, const CoverageRaster& raster);

// log-log residual vs spacing, one series per identity (two points each).
struct LogLogSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;  // (h, residual)
};
std::string svg_residual_loglog(const RunConfig& config, const std::vector<LogLogSeries>& series);

}  // namespace solgeom::cli
