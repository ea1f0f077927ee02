#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "solgeom/errors.hpp"

namespace solgeom {

struct AxisRange {
    double lo = 0.0;
    double hi = 1.0;

    double width() const { return hi - lo; }
    bool contains(double x) const { return x >= lo && x <= hi; }
    friend bool operator==(const AxisRange&, const AxisRange&) = default;
};

// Uniformly spaced sample points of a 1D interval, endpoints included.
struct Linspace {
    double lo = 0.0;
    double hi = 1.0;
    int n = 2;

    double spacing() const { return (hi - lo) / double(n - 1); }
    double operator[](int i) const { return lo + double(i) * spacing(); }
    std::vector<double> values() const {
        std::vector<double> v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = (*this)[i];
        return v;
    }
};

// Tensor-product parameter grid of intrinsic dimension 1 or 2.
// Spacing is derived as (hi - lo)/(count - 1) per axis; counts must be at
// least 5 per axis so second-order interior stencils fit.
class ParamGrid {
public:
    static constexpr int kMinCount = 5;

    static ParamGrid line(AxisRange range, int count);
    static ParamGrid box(AxisRange u_range, AxisRange v_range, int u_count, int v_count);

    int dim() const { return dim_; }
    const AxisRange& range(int axis) const { return range_[std::size_t(axis)]; }
    int count(int axis) const { return count_[std::size_t(axis)]; }
    double spacing(int axis) const { return spacing_[std::size_t(axis)]; }
    double max_spacing() const;

    std::size_t node_count() const;

    // Row-major flat index: u-axis fastest.
    std::size_t index(int i, int j = 0) const {
        return std::size_t(j) * std::size_t(count_[0]) + std::size_t(i);
    }
    std::array<double, 2> node(int i, int j = 0) const {
        return {coord(0, i), dim_ == 2 ? coord(1, j) : 0.0};
    }
    double coord(int axis, int i) const {
        return range_[std::size_t(axis)].lo + double(i) * spacing_[std::size_t(axis)];
    }

    // True when the node is at least `margin` nodes away from every boundary.
    bool is_interior(int i, int j, int margin) const;

    // Same ranges, spacing halved exactly (counts 2c-1 per axis).
    ParamGrid refined() const;

    friend bool operator==(const ParamGrid&, const ParamGrid&) = default;

private:
    ParamGrid(int dim, std::array<AxisRange, 2> r, std::array<int, 2> c);

    int dim_ = 2;
    std::array<AxisRange, 2> range_{};
    std::array<int, 2> count_{};
    std::array<double, 2> spacing_{};
};

}  // namespace solgeom
