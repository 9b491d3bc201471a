#pragma once

#include <array>
#include <vector>

#include <gmpxx.h>

#include "ruukin/design.hpp"

namespace ruukin {

// Real input values of one limb at a given platform position: the limb
// equation is quadratic in its own input, so there are 0, 1 or 2 roots.
struct IkLimb {
    std::vector<double> roots;      // ascending
    bool double_root = false;       // discriminant zero within 1e−12 (scaled)
    bool linear = false;            // leading coefficient exactly zero
    bool identically_zero = false;  // whole limb equation vanished (limb self-motion)
};

struct IkSolution {
    std::array<IkLimb, 3> limb;

    // Number of (t1, t2, t3) combinations (0 if any limb has no real root).
    std::size_t combinations() const;
    bool any() const { return combinations() > 0; }
};

// Exact-coefficient inverse kinematics in the translational mode: solves each
// limb quadratic at position (y1, y2, y3). Discriminant signs are decided
// exactly; double roots are tagged per the 1e−12 scaled window.
IkSolution ik(const Design& d, const std::array<mpq_class, 3>& y);

// Forward kinematics: with all three inputs fixed, each limb equation is a
// sphere in (y1, y2, y3); two sphere differences give planes, and the plane
// line meets a sphere in at most two points.
struct FkSolution {
    enum class Tag { none, self_motion_circle, inconsistent };

    std::vector<std::array<double, 3>> points;  // sorted lexicographically
    Tag tag = Tag::none;
    // Set when tag == self_motion_circle. When all three limb spheres
    // coincide (both difference planes vanish), the solution set is the whole
    // common sphere; full_sphere marks that case and center/radius describe
    // the sphere itself.
    std::array<double, 3> circle_center{};
    double circle_radius_sq = 0;
    bool full_sphere = false;
};

FkSolution fk(const Design& d, const std::array<double, 3>& t);

// Drives every IK combination back through FK and reports closure.
struct RoundtripReport {
    bool ik_empty = false;
    std::size_t combinations = 0;
    std::size_t closed = 0;  // combinations whose FK set contains y within tol
    double max_error = 0;    // worst distance from y to its best FK match
    std::vector<std::array<double, 3>> spurious;  // the other FK solutions
    bool all_closed = false;
};

RoundtripReport roundtrip_check(const Design& d, const std::array<mpq_class, 3>& y,
                                double tol = 1e-8);

}  // namespace ruukin
