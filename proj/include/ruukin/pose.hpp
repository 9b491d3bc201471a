#pragma once

#include <array>
#include <cmath>

#include "ruukin/mpoly.hpp"

namespace ruukin {

// A point of the kinematic image space: homogeneous coordinates
// (x0, x1, x2, x3, y0, y1, y2, y3). Stored as doubles; exact poses are handled
// symbolically through MPoly substitution where tests require it.
struct Pose {
    std::array<double, 8> c{};  // x0..x3, y0..y3

    static Pose translational(double y1, double y2, double y3) {
        Pose p;
        p.c = {1, 0, 0, 0, 0, y1, y2, y3};
        return p;
    }

    double study_residual() const {
        return c[0] * c[4] + c[1] * c[5] + c[2] * c[6] + c[3] * c[7];
    }

    double max_abs() const {
        double m = 0;
        for (double v : c) m = std::max(m, std::fabs(v));
        return m;
    }

    // Writes the eight coordinates into a dense evaluation point.
    void fill(std::array<double, kNumVars>& point) const {
        for (int i = 0; i < 8; ++i) point[VX0 + i] = c[i];
    }
};

}  // namespace ruukin
