#include "solgeom/omission.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace solgeom {

std::size_t CoverageRaster::covered_count() const {
    return std::size_t(std::count(covered.begin(), covered.end(), 1));
}

double CoverageRaster::covered_fraction_in_annulus(double r_lo, double r_hi) const {
    std::size_t in_annulus = 0, hit = 0;
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            const double r = center(i, j).norm();
            if (r < r_lo || r > r_hi) continue;
            ++in_annulus;
            if (covered[index(i, j)]) ++hit;
        }
    return in_annulus == 0 ? 0.0 : double(hit) / double(in_annulus);
}

CoverageRaster coverage_raster(const std::vector<AffineTangent<1>>& lines, const Box2& box,
                               int nx, int ny, double cover_tol, int threads) {
    if (lines.empty()) throw EmptySampleError("coverage_raster: no tangent planes sampled");
    if (nx < 1 || ny < 1) throw std::invalid_argument("coverage_raster: cells must be >= 1");

    CoverageRaster r;
    r.box = box;
    r.nx = nx;
    r.ny = ny;
    r.plane_count = lines.size();
    r.cover_tol = cover_tol > 0.0 ? cover_tol : kCoverTolDiagonals * r.cell_diagonal();
    r.min_dist.assign(std::size_t(nx) * std::size_t(ny), 0.0);
    r.covered.assign(r.min_dist.size(), 0);

    // Precompute line data as (normal, normal . base).
    struct LineData {
        double nx_, ny_, off_;
    };
    std::vector<LineData> data;
    data.reserve(lines.size());
    for (const auto& l : lines)
        data.push_back({l.normal.x(), l.normal.y(), l.normal.dot(l.base)});

    auto sweep_rows = [&](int j_begin, int j_end) {
        for (int j = j_begin; j < j_end; ++j)
            for (int i = 0; i < nx; ++i) {
                const Vec2 c = r.center(i, j);
                double best = std::numeric_limits<double>::infinity();
                for (const auto& l : data) {
                    const double d = std::abs(c.x() * l.nx_ + c.y() * l.ny_ - l.off_);
                    if (d < best) best = d;
                }
                const std::size_t k = r.index(i, j);
                r.min_dist[k] = best;
                r.covered[k] = best <= r.cover_tol ? 1 : 0;
            }
    };

    // Each cell's minimum is computed over the full line order, so the
    // result is independent of the row partition.
    const int workers = std::max(1, std::min(threads, ny));
    if (workers == 1) {
        sweep_rows(0, ny);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(std::size_t(workers));
        const int chunk = (ny + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const int b = w * chunk;
            const int e = std::min(ny, b + chunk);
            if (b < e) pool.emplace_back(sweep_rows, b, e);
        }
        for (auto& th : pool) th.join();
    }
    return r;
}

std::vector<AffineTangent<1>> sample_tangent_lines(const Surface<1>& curve,
                                                   Orientation orientation,
                                                   const std::vector<double>& t_samples) {
    std::vector<AffineTangent<1>> lines;
    lines.reserve(t_samples.size());
    for (double t : t_samples) {
        const ParamPoint<1> u{t};
        const ImmersionJet<1> jet = eval_jet(curve, u);
        const GeomFrame<1> fr = frame_at(jet, orientation, curve.outward_sign(u));
        lines.push_back(tangent_plane(jet, fr));
    }
    return lines;
}

}  // namespace solgeom
