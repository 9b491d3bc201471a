#include "ruukin/grid.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ruukin {

double axis_value(const AxisSpec& axis, std::size_t i) {
    if (axis.count <= 1) return axis.min;
    return axis.min + (axis.max - axis.min) * static_cast<double>(i) /
                          static_cast<double>(axis.count - 1);
}

std::vector<double> sample_grid_serial(const std::array<AxisSpec, 3>& axes, const GridFn& fn) {
    std::vector<double> out(axes[0].count * axes[1].count * axes[2].count);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < axes[0].count; ++i)
        for (std::size_t j = 0; j < axes[1].count; ++j)
            for (std::size_t k = 0; k < axes[2].count; ++k)
                out[idx++] = fn({axis_value(axes[0], i), axis_value(axes[1], j),
                                 axis_value(axes[2], k)});
    return out;
}

std::vector<double> sample_grid_parallel(const std::array<AxisSpec, 3>& axes, const GridFn& fn) {
    const std::size_t n0 = axes[0].count, n1 = axes[1].count, n2 = axes[2].count;
    std::vector<double> out(n0 * n1 * n2);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(worker_count())
#endif
    for (long long flat = 0; flat < static_cast<long long>(n0 * n1); ++flat) {
        const std::size_t i = static_cast<std::size_t>(flat) / n1;
        const std::size_t j = static_cast<std::size_t>(flat) % n1;
        const double v0 = axis_value(axes[0], i);
        const double v1 = axis_value(axes[1], j);
        double* row = out.data() + (i * n1 + j) * n2;
        for (std::size_t k = 0; k < n2; ++k) row[k] = fn({v0, v1, axis_value(axes[2], k)});
    }
    return out;
}

int worker_count() {
    int hw = 1;
#ifdef _OPENMP
    hw = omp_get_max_threads();
#endif
    if (const char* env = std::getenv("RUUKIN_THREADS")) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end != env && cap > 0 && cap < hw) hw = static_cast<int>(cap);
    }
    return hw < 1 ? 1 : hw;
}

}  // namespace ruukin
