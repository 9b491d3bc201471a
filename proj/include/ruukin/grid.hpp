#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

namespace ruukin {

// One sampling axis: `count` evenly spaced values from min to max inclusive
// (count == 1 degenerates to the single value min).
struct AxisSpec {
    double min = 0;
    double max = 0;
    std::size_t count = 2;
};

double axis_value(const AxisSpec& axis, std::size_t i);

using GridFn = std::function<double(const std::array<double, 3>&)>;

// Evaluates fn over the full grid in row-major order (axis 0 slowest). The
// serial kernel is the reference; the parallel kernel distributes rows across
// OpenMP workers and must produce identical output ordering.
std::vector<double> sample_grid_serial(const std::array<AxisSpec, 3>& axes, const GridFn& fn);
std::vector<double> sample_grid_parallel(const std::array<AxisSpec, 3>& axes, const GridFn& fn);

// Worker cap: min(hardware, RUUKIN_THREADS when set and positive).
int worker_count();

}  // namespace ruukin
