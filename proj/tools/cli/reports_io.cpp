#include "reports_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

#include "solgeom/errors.hpp"
#include "solgeom/version.hpp"

namespace solgeom::cli {

std::string fmt(double v) {
    char buf[64];
    const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, p);
}

std::string fmt_opt(const std::optional<double>& v) { return v ? fmt(*v) : std::string(); }

std::string provenance_comment(const RunConfig& config) {
    std::string out;
    out += "# schema=1\n";
    out += std::string("# tool=") + version_string() + "\n";
    for (const auto& [k, v] : config.provenance()) out += "# config." + k + "=" + v + "\n";
    return out;
}

nlohmann::json provenance_json(const RunConfig& config) {
    nlohmann::json j;
    j["schema"] = 1;
    j["tool"] = version_string();
    nlohmann::json cfg = nlohmann::json::object();
    for (const auto& [k, v] : config.provenance()) cfg[k] = v;
    j["config"] = cfg;
    return j;
}

CsvFile::CsvFile(const std::filesystem::path& path, const RunConfig& config,
                 const std::vector<std::string>& header)
    : path_(path), columns_(header.size()) {
    buffer_ = provenance_comment(config);
    for (std::size_t i = 0; i < header.size(); ++i)
        buffer_ += (i ? "," : "") + header[i];
    buffer_ += "\n";
}

void CsvFile::row(const std::vector<std::string>& cells) {
    if (cells.size() != columns_)
        throw std::invalid_argument("CsvFile: row width does not match the header");
    for (std::size_t i = 0; i < cells.size(); ++i)
        buffer_ += (i ? "," : "") + cells[i];
    buffer_ += "\n";
}

void CsvFile::close() {
    if (closed_) return;
    write_text_file(path_, buffer_);
    closed_ = true;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output file " + path.string());
    out << content;
    if (!out) throw Error("failed writing " + path.string());
}

void write_json_file(const std::filesystem::path& path, const nlohmann::json& doc) {
    write_text_file(path, doc.dump(2) + "\n");
}

// --- SVG -----------------------------------------------------------------

namespace {

std::string svg_open(double width, double height, const RunConfig& config) {
    std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<!--\n" + provenance_comment(config) + "-->\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) + "\" height=\"" +
         fmt(height) + "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(height) + "\">\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    return s;
}

std::string gray_hex(int level) {
    static const char* digits = "0123456789abcdef";
    const int c = std::clamp(level, 0, 255);
    std::string hex = "#";
    for (int k = 0; k < 3; ++k) {
        hex += digits[c / 16];
        hex += digits[c % 16];
    }
    return hex;
}

}  // namespace

std::string svg_curve_trace(const RunConfig& config, const std::vector<Vec2>& points,
                            const std::vector<double>& guide_radii) {
    const double size = 640.0, margin = 20.0;
    double extent = 1.0;
    for (const Vec2& p : points) extent = std::max({extent, std::abs(p.x()), std::abs(p.y())});
    for (double r : guide_radii) extent = std::max(extent, r);
    const double scale = (size / 2.0 - margin) / extent;
    auto X = [&](double x) { return size / 2.0 + scale * x; };
    auto Y = [&](double y) { return size / 2.0 - scale * y; };

    std::string s = svg_open(size, size, config);
    for (double r : guide_radii)
        s += "<circle cx=\"" + fmt(size / 2.0) + "\" cy=\"" + fmt(size / 2.0) + "\" r=\"" +
             fmt(scale * r) +
             "\" fill=\"none\" stroke=\"#c0c0c0\" stroke-dasharray=\"4 3\"/>\n";
    s += "<polyline fill=\"none\" stroke=\"#1f4e8c\" stroke-width=\"1\" points=\"";
    for (std::size_t k = 0; k < points.size(); ++k) {
        if (k) s += " ";
        s += fmt(X(points[k].x())) + "," + fmt(Y(points[k].y()));
    }
    s += "\"/>\n</svg>\n";
    return s;
}

std::string svg_raster_heatmap(const RunConfig& config, const CoverageRaster& raster) {
    const double cell_px = std::max(1.0, 800.0 / std::max(raster.nx, raster.ny));
    const double width = cell_px * raster.nx, height = cell_px * raster.ny;

    // Distances clipped at the 95th percentile'ish scale for contrast; the
    // uncovered region (min_dist > cover_tol) renders in blue tint.
    double clip = raster.cover_tol * 20.0;
    std::string s = svg_open(width, height, config);
    for (int j = 0; j < raster.ny; ++j) {
        // run-length merge equal colors along the row (y flipped for svg)
        const int row_y = raster.ny - 1 - j;
        int i = 0;
        while (i < raster.nx) {
            const std::size_t k = raster.index(i, j);
            const bool covered = raster.covered[k] != 0;
            const int level =
                int(255.0 * std::clamp(raster.min_dist[k] / clip, 0.0, 1.0));
            int run = 1;
            while (i + run < raster.nx) {
                const std::size_t k2 = raster.index(i + run, j);
                const bool cov2 = raster.covered[k2] != 0;
                const int lev2 =
                    int(255.0 * std::clamp(raster.min_dist[k2] / clip, 0.0, 1.0));
                if (cov2 != covered || lev2 != level) break;
                ++run;
            }
            std::string fill;
            if (covered) {
                fill = gray_hex(40 + level / 2);
            } else {
                // uncovered cells: blue ramp
                fill = "#" + std::string(level < 128 ? "4d6f" : "7da7") +
                       (level < 128 ? "b8" : "d9");
            }
            s += "<rect x=\"" + fmt(i * cell_px) + "\" y=\"" + fmt(row_y * cell_px) +
                 "\" width=\"" + fmt(run * cell_px) + "\" height=\"" + fmt(cell_px) +
                 "\" fill=\"" + fill + "\"/>\n";
            i += run;
        }
    }
    s += "</svg>\n";
    return s;
}

std::string svg_residual_loglog(const RunConfig& config,
                                const std::vector<LogLogSeries>& series) {
    const double size = 480.0, margin = 60.0;
    double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
    for (const auto& s : series)
        for (const auto& [h, r] : s.points) {
            if (h <= 0.0 || r <= 0.0) continue;
            lo_x = std::min(lo_x, std::log10(h));
            hi_x = std::max(hi_x, std::log10(h));
            lo_y = std::min(lo_y, std::log10(r));
            hi_y = std::max(hi_y, std::log10(r));
        }
    if (lo_x > hi_x) {
        lo_x = -2.0;
        hi_x = 0.0;
    }
    if (lo_y > hi_y) {
        lo_y = -12.0;
        hi_y = 0.0;
    }
    const double pad_x = 0.2 * std::max(1e-6, hi_x - lo_x) + 0.1;
    const double pad_y = 0.2 * std::max(1e-6, hi_y - lo_y) + 0.1;
    lo_x -= pad_x;
    hi_x += pad_x;
    lo_y -= pad_y;
    hi_y += pad_y;

    auto X = [&](double logh) {
        return margin + (logh - lo_x) / (hi_x - lo_x) * (size - 2.0 * margin);
    };
    auto Y = [&](double logr) {
        return size - margin - (logr - lo_y) / (hi_y - lo_y) * (size - 2.0 * margin);
    };

    static const char* palette[] = {"#1f4e8c", "#b0413e", "#3e7c4b", "#8a5fa8"};
    std::string s = svg_open(size, size, config);
    s += "<rect x=\"" + fmt(margin) + "\" y=\"" + fmt(margin) + "\" width=\"" +
         fmt(size - 2 * margin) + "\" height=\"" + fmt(size - 2 * margin) +
         "\" fill=\"none\" stroke=\"#404040\"/>\n";
    s += "<text x=\"" + fmt(size / 2) + "\" y=\"" + fmt(size - margin / 3) +
         "\" text-anchor=\"middle\" font-size=\"12\">log10 h</text>\n";
    s += "<text x=\"" + fmt(margin / 3) + "\" y=\"" + fmt(size / 2) +
         "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 " + fmt(margin / 3) +
         " " + fmt(size / 2) + ")\">log10 residual</text>\n";

    int color = 0;
    double label_y = margin + 14.0;
    for (const auto& sr : series) {
        const char* stroke = palette[color % 4];
        std::string pts;
        for (const auto& [h, r] : sr.points) {
            if (h <= 0.0 || r <= 0.0) continue;
            if (!pts.empty()) pts += " ";
            pts += fmt(X(std::log10(h))) + "," + fmt(Y(std::log10(r)));
            s += "<circle cx=\"" + fmt(X(std::log10(h))) + "\" cy=\"" + fmt(Y(std::log10(r))) +
                 "\" r=\"3\" fill=\"" + stroke + "\"/>\n";
        }
        if (!pts.empty())
            s += "<polyline fill=\"none\" stroke=\"" + std::string(stroke) +
                 "\" stroke-width=\"1\" points=\"" + pts + "\"/>\n";
        s += "<text x=\"" + fmt(size - margin - 4) + "\" y=\"" + fmt(label_y) +
             "\" text-anchor=\"end\" font-size=\"11\" fill=\"" + stroke + "\">" + sr.label +
             "</text>\n";
        label_y += 14.0;
        ++color;
    }
    s += "</svg>\n";
    return s;
}

}  // namespace solgeom::cli
