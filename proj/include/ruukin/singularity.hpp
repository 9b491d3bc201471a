#pragma once

#include <array>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "ruukin/design.hpp"
#include "ruukin/mpoly.hpp"

namespace ruukin {

// --- Input singularities -----------------------------------------------------

// Factorization of the input-Jacobian rank condition under the translational
// conditions: of the 56 3×3 minors of the 8×3 input block, exactly one
// survives the substitution, and it is an exact multiple of p1·p2·p3.
struct InputFactorization {
    std::array<MPoly, 3> p;  // the three per-limb factors
    MPoly cofactor;          // surviving minor ÷ (p1·p2·p3)
    int vanishing_minors = 0;
    int surviving_minors = 0;
};

// Symbolic-design computation; throws std::logic_error if more than one minor
// survives or the survivor is not divisible by the reference product.
const InputFactorization& input_minors_translational();

// Unique root of the linear factor p_limb in its input at an exact position,
// or nullopt when the leading coefficient vanishes (degenerate branch).
std::optional<ExtScalar> input_sing_root(int limb, const std::array<mpq_class, 3>& y,
                                         const Design& d);

// The two positions where the degenerate branch of limb 1 lives:
// y1 = (r1−r0)/2, y3 = 0, y2 = ±sqrt((a3²−a1²)/4). Real iff a3 ≥ a1.
struct DegeneratePoints {
    bool real = false;
    mpq_class y1, y2_sq;  // y2 = ±sqrt(y2_sq)
    std::array<std::array<double, 3>, 2> points{};
};

DegeneratePoints degenerate_input_points(const Design& d);

// Per-limb input-singularity surface in (y1, y2, y3): the discriminant-type
// combination A·D − (B/2)² of the limb equation A t² + B t + D. Limb 1 is a
// spindle torus of revolution; limbs 2 and 3 are its ±120° rotations about
// the y3-axis.
MPoly torus_equation(int limb);                   // symbolic design
MPoly torus_equation(int limb, const Design& d);  // design substituted

// Common points of all three torus surfaces (found numerically on the
// y3-axis, where the threefold symmetry pins them).
std::vector<std::array<double, 3>> tori_common_points(const Design& d);

// --- Output singularities ----------------------------------------------------

// det(J_o) under the translational conditions factors exactly into the two
// reference factors (both free of a3) times an input-only cofactor.
struct OutputFactorization {
    MPoly s_small, s_large;  // the two factors, fewer/more terms
    MPoly cofactor;          // det ÷ (s_small·s_large)
};

// Symbolic-design computation (cached; the 8×8 determinant takes a moment).
const OutputFactorization& output_det_translational();

// Exact-coefficient evaluation of the degree-12 joint-space singularity
// varieties (valid for the bundled design a1=3, a3=5, r0=11, r1=7 only).
enum class JointKind { input, output };
double joint_poly_eval(JointKind kind, const std::array<double, 3>& t);
// Matching residual scale (sum of |coefficient·monomial|).
double joint_poly_scale(JointKind kind, const std::array<double, 3>& t);

// Successive-resultant elimination of the inputs from the smaller output
// factor together with the three translational equations; returns the
// content-normalized eliminant in (y1, y2, y3). Throws std::domain_error when
// a stage degenerates to zero.
MPoly output_eliminant(const Design& d);

// --- Self-motion ---------------------------------------------------------

struct SelfMotion {
    mpq_class radius_sq;      // (a3² + (r0−r1)² − a1²)/4
    bool exists = false;      // real circle iff radius_sq > 0
    bool r0_equals_r1 = false;
    bool inputs_complex = false;           // a1² < (r0−r1)²
    bool inputs_rational = false;          // fixed inputs are exact rationals
    std::array<mpq_class, 2> fixed_inputs_exact{};  // valid when inputs_rational
    std::array<double, 2> fixed_inputs{};           // valid when !inputs_complex
};

SelfMotion self_motion(const Design& d);

// --- Classification ------------------------------------------------------

struct SingularityReport {
    std::array<double, 3> wt_residual{};   // scaled limb-equation residuals
    std::array<double, 3> p_residual{};    // scaled p1, p2, p3 residuals
    std::array<bool, 3> input_singular{};
    double s_small_residual = 0, s_large_residual = 0;  // scaled
    bool output_singular = false;
    bool self_motion = false;
    double tol = 0;
};

// Evaluates every singularity condition at a translational configuration.
// Throws std::domain_error when (y, t) violates the limb equations beyond
// 100·tol (the point must lie on the constraint variety to be classifiable).
SingularityReport classify(const Design& d, const std::array<double, 3>& y,
                           const std::array<double, 3>& t, double tol = 1e-8);

// --- Singular-configuration samplers (verification oracles) ---------------

// Joint inputs (t1, t2, t3) of configurations constructed to be input-singular
// in limb 1: positions on the limb-1 torus completed by the p1 root and the
// other limbs' inverse kinematics.
std::vector<std::array<double, 3>> sample_input_singular_inputs(const Design& d,
                                                                std::size_t count);

// Joint inputs of configurations where the smaller output factor vanishes on
// an inverse-kinematics branch.
std::vector<std::array<double, 3>> sample_output_singular_inputs(const Design& d,
                                                                 std::size_t count);

}  // namespace ruukin
