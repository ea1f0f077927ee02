#pragma once

#include <array>
#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include "solgeom/grid.hpp"
#include "solgeom/jet.hpp"

namespace solgeom {

template <int N>
using ParamPoint = std::array<double, static_cast<std::size_t>(N)>;

// A parametric immersion with exact analytic jets. Builders never use
// internal differencing; every derivative is closed form.
template <int N>
class Surface {
public:
    virtual ~Surface() = default;

    virtual ImmersionJet<N> jet(const ParamPoint<N>& u) const = 0;

    // Admissible parameter box. Charts with a non-rectangular admissible
    // region additionally override contains().
    virtual std::array<AxisRange, N> domain() const = 0;
    virtual bool contains(const ParamPoint<N>& u) const {
        const auto dom = domain();
        for (int i = 0; i < N; ++i)
            if (!dom[std::size_t(i)].contains(u[std::size_t(i)])) return false;
        return true;
    }

    // +1 when the raw chart normal at u points to the documented outward
    // side of this builder, -1 otherwise.
    virtual double outward_sign(const ParamPoint<N>& u) const = 0;

    virtual std::string describe() const = 0;
};

// Checked jet evaluation: domain test, then rank test.
template <int N>
ImmersionJet<N> eval_jet(const Surface<N>& surface, const ParamPoint<N>& u) {
    if (!surface.contains(u)) {
        std::string msg = "eval_jet: parameter (";
        for (int i = 0; i < N; ++i) msg += (i ? "," : "") + std::to_string(u[std::size_t(i)]);
        msg += ") outside admissible domain of " + surface.describe();
        throw OutOfDomainError(msg);
    }
    ImmersionJet<N> jet = surface.jet(u);
    if (jet.degenerate())
        throw DegenerateJetError("eval_jet: degenerate jet on " + surface.describe());
    return jet;
}

template <int N>
GeomFrame<N> frame_at(const Surface<N>& surface, const ParamPoint<N>& u,
                      Orientation orientation) {
    return frame_at(eval_jet(surface, u), orientation, surface.outward_sign(u));
}

// Jets stored on a grid; evaluation snaps to the nearest node. Used for
// surfaces known only through sampled data.
template <int N>
class TabulatedSurface final : public Surface<N> {
public:
    TabulatedSurface(ParamGrid grid, std::vector<ImmersionJet<N>> jets,
                     double outward = 1.0)
        : grid_(std::move(grid)), jets_(std::move(jets)), outward_(outward) {
        if (grid_.dim() != N)
            throw std::invalid_argument("TabulatedSurface: grid dimension mismatch");
        if (jets_.size() != grid_.node_count())
            throw std::invalid_argument("TabulatedSurface: one jet per grid node required");
    }

    ImmersionJet<N> jet(const ParamPoint<N>& u) const override {
        std::array<int, 2> idx = {0, 0};
        for (int axis = 0; axis < N; ++axis) {
            const double rel = (u[std::size_t(axis)] - grid_.range(axis).lo) / grid_.spacing(axis);
            idx[std::size_t(axis)] = int(std::lround(rel));
        }
        return jets_[grid_.index(idx[0], idx[1])];
    }

    std::array<AxisRange, N> domain() const override {
        std::array<AxisRange, N> d{};
        for (int axis = 0; axis < N; ++axis) d[std::size_t(axis)] = grid_.range(axis);
        return d;
    }

    double outward_sign(const ParamPoint<N>&) const override { return outward_; }

    std::string describe() const override { return "tabulated"; }

private:
    ParamGrid grid_;
    std::vector<ImmersionJet<N>> jets_;
    double outward_;
};

}  // namespace solgeom
