#pragma once

#include <vector>

#include "solgeom/fields.hpp"
#include "solgeom/surface.hpp"

namespace solgeom {

// Affine tangent subspace X(p) + span(basis): base point, orthonormal
// tangent basis, unit normal.
template <int N>
struct AffineTangent {
    AmbientVec<N> base = AmbientVec<N>::Zero();
    std::array<AmbientVec<N>, N> basis{};
    AmbientVec<N> normal = AmbientVec<N>::Zero();
};

// Builds the affine tangent from a jet and its frame (Gram-Schmidt on the
// chart columns).
template <int N>
AffineTangent<N> tangent_plane(const ImmersionJet<N>& jet, const GeomFrame<N>& frame) {
    AffineTangent<N> plane;
    plane.base = jet.x;
    plane.normal = frame.normal;
    plane.basis[0] = jet.dx[0].normalized();
    if constexpr (N == 2) {
        AmbientVec<N> b1 = jet.dx[1] - jet.dx[1].dot(plane.basis[0]) * plane.basis[0];
        plane.basis[1] = b1.normalized();
    }
    return plane;
}

// Codimension one: the normal component is the full distance.
template <int N>
double point_plane_distance(const AmbientVec<N>& q, const AffineTangent<N>& plane) {
    return std::abs((q - plane.base).dot(plane.normal));
}

template <int N>
AmbientVec<N> project_onto_tangent(const AmbientVec<N>& q, const AffineTangent<N>& plane) {
    return q - (q - plane.base).dot(plane.normal) * plane.normal;
}

// --- omission certificate ------------------------------------------------

// Grid-scale evidence that p0 avoids every sampled tangent plane. This
// certifies omission only at the sampled parameters; the sample count and
// spacing are recorded so the claim stays auditable.
struct OmissionCertificate {
    double min_support = 0.0;         // min over samples of |<X - p0, N>|
    double min_plane_distance = 0.0;  // same quantity via the projection route
    bool all_nonzero = false;         // min_support > cert_tol
    double cert_tol = 0.0;
    std::size_t sample_count = 0;
    double max_sample_spacing = 0.0;  // max gap between consecutive samples, per axis
};

inline constexpr double kCertTolScale = 1e-6;  // cert_tol = scale * box extent

template <int N>
OmissionCertificate omission_certificate(const Surface<N>& surface, Orientation orientation,
                                         const std::vector<ParamPoint<N>>& samples,
                                         const AmbientVec<N>& p0, double cert_tol) {
    if (samples.empty()) throw EmptySampleError("omission_certificate: no parameter samples");
    OmissionCertificate cert;
    cert.cert_tol = cert_tol;
    cert.sample_count = samples.size();
    cert.min_support = std::numeric_limits<double>::infinity();
    cert.min_plane_distance = std::numeric_limits<double>::infinity();
    for (const auto& u : samples) {
        const ImmersionJet<N> jet = eval_jet(surface, u);
        const GeomFrame<N> fr = frame_at(jet, orientation, surface.outward_sign(u));
        cert.min_support = std::min(cert.min_support, std::abs(support_based(fr, p0)));
        const AffineTangent<N> plane = tangent_plane(jet, fr);
        cert.min_plane_distance =
            std::min(cert.min_plane_distance, (project_onto_tangent(p0, plane) - p0).norm());
    }
    cert.all_nonzero = cert.min_support > cert_tol;
    return cert;
}

// --- planar coverage raster ----------------------------------------------

struct Box2 {
    AxisRange x;
    AxisRange y;
};

// Distance field from cell centers to a sampled family of tangent lines.
// Tangent planes of curve-cross-line surfaces are vertical, so the planar
// raster already decides the three-dimensional omitted set.
struct CoverageRaster {
    Box2 box;
    int nx = 0, ny = 0;
    double cover_tol = 0.0;
    std::vector<double> min_dist;     // row-major, x fastest
    std::vector<unsigned char> covered;
    std::size_t plane_count = 0;

    double cell_w() const { return box.x.width() / nx; }
    double cell_h() const { return box.y.width() / ny; }
    double cell_diagonal() const { return std::hypot(cell_w(), cell_h()); }
    Vec2 center(int i, int j) const {
        return Vec2(box.x.lo + (i + 0.5) * cell_w(), box.y.lo + (j + 0.5) * cell_h());
    }
    std::size_t index(int i, int j) const { return std::size_t(j) * std::size_t(nx) + std::size_t(i); }

    std::size_t covered_count() const;
    double covered_fraction_in_annulus(double r_lo, double r_hi) const;
};

// cover_tol <= 0 selects the default 1.5 * cell diagonal.
inline constexpr double kCoverTolDiagonals = 1.5;

CoverageRaster coverage_raster(const std::vector<AffineTangent<1>>& lines, const Box2& box,
                               int nx, int ny, double cover_tol = 0.0, int threads = 1);

// Tangent lines of a planar curve at the given parameter samples.
std::vector<AffineTangent<1>> sample_tangent_lines(const Surface<1>& curve,
                                                   Orientation orientation,
                                                   const std::vector<double>& t_samples);

}  // namespace solgeom
