#pragma once

#include <array>
#include <vector>

#include "solgeom/grid.hpp"
#include "solgeom/jet.hpp"
#include "solgeom/surface.hpp"

namespace solgeom {

// One real per grid node, row-major (u fastest).
struct ScalarField {
    ParamGrid grid;
    std::vector<double> values;

    ScalarField(ParamGrid g, double fill = 0.0)
        : grid(std::move(g)), values(grid.node_count(), fill) {}

    double& at(int i, int j = 0) { return values[grid.index(i, j)]; }
    double at(int i, int j = 0) const { return values[grid.index(i, j)]; }
};

// N contravariant components per node, chart basis.
template <int N>
struct VectorField {
    ParamGrid grid;
    std::array<std::vector<double>, N> comp;

    explicit VectorField(ParamGrid g) : grid(std::move(g)) {
        for (auto& c : comp) c.assign(grid.node_count(), 0.0);
    }
};

// Exact frames per node of a grid, plus the node jets (the affine tangent
// construction needs the chart columns).
template <int N>
struct FrameField {
    ParamGrid grid;
    std::vector<GeomFrame<N>> frames;
    std::vector<ImmersionJet<N>> jets;

    const GeomFrame<N>& at(int i, int j = 0) const { return frames[grid.index(i, j)]; }
};

template <int N>
FrameField<N> sample_frames(const Surface<N>& surface, const ParamGrid& grid,
                            Orientation orientation) {
    if (grid.dim() != N) throw GridMismatchError("sample_frames: grid dimension mismatch");
    FrameField<N> ff{grid, {}, {}};
    ff.frames.reserve(grid.node_count());
    ff.jets.reserve(grid.node_count());
    for (int j = 0; j < (N == 2 ? grid.count(1) : 1); ++j)
        for (int i = 0; i < grid.count(0); ++i) {
            ParamPoint<N> u{};
            const auto node = grid.node(i, j);
            u[0] = node[0];
            if constexpr (N == 2) u[1] = node[1];
            ImmersionJet<N> jet = eval_jet(surface, u);
            ff.frames.push_back(frame_at(jet, orientation, surface.outward_sign(u)));
            ff.jets.push_back(std::move(jet));
        }
    return ff;
}

// Scalar field pulled from per-node frames.
template <int N, class Fn>
ScalarField frame_scalar(const FrameField<N>& frames, Fn fn) {
    ScalarField out(frames.grid);
    for (std::size_t k = 0; k < frames.frames.size(); ++k) out.values[k] = fn(frames.frames[k]);
    return out;
}

}  // namespace solgeom
