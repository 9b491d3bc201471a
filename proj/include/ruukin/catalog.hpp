#pragma once

#include "ruukin/mpoly.hpp"

namespace ruukin {

// Closed-form reference polynomials of the 3-RUU analysis, hard-coded in the
// exact-expression grammar and parsed once on first use. Every object here is
// cross-validated by the test suite against independently generated
// counterparts (constraint generation, Jacobian factorizations, samplers).
namespace catalog {

// Canonical single-limb closure equations (limb at the origin; the canonical
// input parameter occupies the t1 slot). The odd equation is linear in the
// leg length a1, the even one quadratic.
const MPoly& canonical_odd();
const MPoly& canonical_even();

// The three translational-mode equations (one per limb, quadratic in its own
// input t_i, symbolic design).
const MPoly& translational(int limb);  // limb in 1..3

// Per-limb input-singularity factors p1, p2, p3: the surviving Jacobian minor
// under the translational conditions factors into their product. Each is
// linear in its own input.
const MPoly& input_factor(int limb);  // limb in 1..3

// Limb-1 input-singularity surface in translation coordinates (a spindle
// torus); the limb-2/3 surfaces are its ±120° rotations about the y3-axis.
const MPoly& torus_limb1();

// Leading coefficient of p1 with respect to t1 (degenerate-branch test).
const MPoly& torus_lead_coeff();

// Degree-12 joint-space singularity varieties for the bundled design
// a1=3, a3=5, r0=11, r1=7 (inputs only; one for input-, one for
// output-singular configurations).
const MPoly& joint_input_deg12();
const MPoly& joint_output_deg12();

// The two factors of det(J_o) under the translational conditions, symbolic
// design, both free of a3. "Small" is the factor with fewer terms.
const MPoly& output_factor_small();
const MPoly& output_factor_large();

}  // namespace catalog
}  // namespace ruukin
