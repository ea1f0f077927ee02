#include "solgeom/grid.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace solgeom {

ParamGrid::ParamGrid(int dim, std::array<AxisRange, 2> r, std::array<int, 2> c)
    : dim_(dim), range_(r), count_(c) {
    for (int axis = 0; axis < dim_; ++axis) {
        const auto a = std::size_t(axis);
        if (count_[a] < kMinCount)
            throw std::invalid_argument("ParamGrid: counts must be >= " +
                                        std::to_string(kMinCount) + " per axis");
        if (!(range_[a].hi > range_[a].lo))
            throw std::invalid_argument("ParamGrid: range must have hi > lo");
        spacing_[a] = (range_[a].hi - range_[a].lo) / double(count_[a] - 1);
    }
    if (dim_ == 1) {
        count_[1] = 1;
        spacing_[1] = 0.0;
    }
}

ParamGrid ParamGrid::line(AxisRange range, int count) {
    return ParamGrid(1, {range, AxisRange{0.0, 1.0}}, {count, 1});
}

ParamGrid ParamGrid::box(AxisRange u_range, AxisRange v_range, int u_count, int v_count) {
    return ParamGrid(2, {u_range, v_range}, {u_count, v_count});
}

double ParamGrid::max_spacing() const {
    double h = spacing_[0];
    if (dim_ == 2) h = std::max(h, spacing_[1]);
    return h;
}

std::size_t ParamGrid::node_count() const {
    return std::size_t(count_[0]) * std::size_t(count_[1]);
}

bool ParamGrid::is_interior(int i, int j, int margin) const {
    if (i < margin || i >= count_[0] - margin) return false;
    if (dim_ == 2 && (j < margin || j >= count_[1] - margin)) return false;
    return true;
}

ParamGrid ParamGrid::refined() const {
    if (dim_ == 1) return line(range_[0], 2 * count_[0] - 1);
    return box(range_[0], range_[1], 2 * count_[0] - 1, 2 * count_[1] - 1);
}

}  // namespace solgeom
