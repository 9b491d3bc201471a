#pragma once

#include <array>
#include <map>

#include "ruukin/design.hpp"
#include "ruukin/dualquat.hpp"
#include "ruukin/mpoly.hpp"

namespace ruukin {

// Closure equations of one limb (the odd one comes from the linear-in-a1
// canonical equation, the even one from the quadratic-in-a1 equation).
struct LimbEquations {
    MPoly odd;
    MPoly even;
};

// Base/platform anchor displacements of one limb.
struct LimbFrames {
    DualQuaternion base;
    DualQuaternion platform;
};

// The full constraint system: six limb equations plus the Study quadric and
// the affine normalization condition.
//
//   g[0], g[2], g[4] : odd limb equations (limbs 1..3) — vanish on the
//                      translational three-space,
//   g[1], g[3], g[5] : even limb equations (quadratic in t1, t2, t3),
//   g[6]             : x0 y0 + x1 y1 + x2 y2 + x3 y3,
//   g[7]             : x0² + x1² + x2² + x3² − 1.
struct ConstraintSystem {
    std::array<MPoly, 8> g;
    bool numeric_design = false;  // true when design values were substituted

    // Cached symbolic-design system (design lengths stay polynomial variables).
    static const ConstraintSystem& symbolic();
    // System with the design values substituted and re-normalized.
    static ConstraintSystem for_design(const Design& d);
};

// Canonical single-limb equations (the generation seeds; input in the t1 slot).
LimbEquations canonical_constraints();

// Anchor displacements for limb 1..3: a rotation about the base z-axis by
// 0°/+120°/−120°, a translation to the anchor point on the circum-circle of
// radius r0 (base) or r1 (platform), and a fixed axis-alignment rotation
// mapping the canonical joint axes onto the limb axes.
LimbFrames limb_frames(int limb);

// General equations of limb 1..3: the canonical pair under the coordinate
// substitution X ↦ B⁻¹ X P induced by the limb frames, input renamed to t_i,
// both content-normalized.
LimbEquations limb_constraints(int limb);

// Substitution maps for the two linear operation-mode charts.
std::map<int, MPoly> translational_chart();   // x0=1, x1=x2=x3=y0=0
std::map<int, MPoly> twisted_chart();         // x3=1, x0=x1=x2=y3=0

// The three translational-mode equations (even equations under the
// translational chart), symbolic design, content-normalized.
std::array<MPoly, 3> translational_system();

// Same with design values substituted (content re-normalized).
std::array<MPoly, 3> translational_system(const Design& d);

// Input variable of limb 1..3 (VT1..VT3).
int input_var(int limb);

}  // namespace ruukin
