// Acceptance gate for the library: ten end-to-end criteria covering the
// exact constraint model, the input elimination, both Jacobian
// factorizations, the joint-space surfaces, the self-motion family, the
// transition curve, and kinematic closure. Prints one PASS/FAIL line per
// criterion and exits nonzero if any of them fails. All tolerances are
// pinned here as named constants.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <string>
#include <utility>

#include "ruukin/catalog.hpp"
#include "ruukin/constraints.hpp"
#include "ruukin/design.hpp"
#include "ruukin/kinematics.hpp"
#include "ruukin/singularity.hpp"
#include "ruukin/workspace.hpp"

using namespace ruukin;

namespace {

constexpr double kSampleVanishTol = 1e-6;   // scaled residual on singular triples
constexpr double kRegularFloor = 1e-3;      // scaled residual floor on regular triples
constexpr double kEliminantTol = 1e-6;      // scaled residual on the circle points
constexpr double kCircleEquationTol = 1e-9; // limb equations on the self-motion circle
constexpr double kMembershipTol = 1e-6;     // workspace membership along the curve
constexpr double kIkDigitsTol = 1e-12;      // inverse-kinematic root accuracy
constexpr double kFkReturnTol = 1e-8;       // forward solution must return the pose
constexpr double kRoundtripTol = 1e-8;      // closure tolerance for fk after ik

int failures = 0;

void report(int idx, const char* label, bool pass, const std::string& detail) {
    std::printf("criterion %2d  %-38s  %s%s%s\n", idx, label, pass ? "PASS" : "FAIL",
                detail.empty() ? "" : "  ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

template <typename Fn>
void criterion(int idx, const char* label, Fn&& fn) {
    try {
        const std::pair<bool, std::string> r = fn();
        report(idx, label, r.first, r.second);
    } catch (const std::exception& e) {
        report(idx, label, false, std::string("exception: ") + e.what());
    }
}

double safe(double s) { return s > 0 ? s : 1.0; }

// Scaled residual of a polynomial at a translational pose / input point.
double residual(const MPoly& q, const Design& d, const std::array<double, 3>& y,
                const std::array<double, 3>& t) {
    std::array<double, kNumVars> pt{};
    d.fill(pt);
    pt[VX0] = 1;
    pt[VY1] = y[0];
    pt[VY2] = y[1];
    pt[VY3] = y[2];
    pt[VT1] = t[0];
    pt[VT2] = t[1];
    pt[VT3] = t[2];
    return std::fabs(q.eval_double(pt)) / safe(q.scale_at(pt));
}

ExtScalar exact_pose_value(const MPoly& q, const mpq_class& y1, const mpq_class& y2,
                           const mpq_class& y3) {
    std::array<ExtScalar, kNumVars> vals{};
    std::array<bool, kNumVars> set{};
    vals[VX0] = ExtScalar(1);
    set[VX0] = true;
    vals[VY1] = ExtScalar(y1);
    set[VY1] = true;
    vals[VY2] = ExtScalar(y2);
    set[VY2] = true;
    vals[VY3] = ExtScalar(y3);
    set[VY3] = true;
    return q.eval_exact(vals, set);
}

// Deterministic 64-bit LCG (Knuth constants); uniform double in [lo, hi].
struct Lcg {
    std::uint64_t state;
    explicit Lcg(std::uint64_t seed) : state(seed) {}
    double uniform(double lo, double hi) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        const double u = static_cast<double>(state >> 11) / 9007199254740992.0;
        return lo + (hi - lo) * u;
    }
};

}  // namespace

int main() {
    const Design d1 = Design::pars();
    const Design d2 = Design::pars2();

    // 1. The generated translational limb system matches the reference
    //    polynomials term for term, in exact arithmetic.
    criterion(1, "translational system, exact", [&] {
        bool ok = true;
        for (int limb = 1; limb <= 3; ++limb)
            ok = ok && translational_system()[(std::size_t)limb - 1] ==
                           catalog::translational(limb);
        return std::pair{ok, std::string(ok ? "term-for-term match, all limbs" : "mismatch")};
    });

    // 2. The input-free workspace equations vanish identically (exact
    //    polynomial zero) on both operation-mode three-spaces, for both
    //    bundled designs.
    criterion(2, "workspace vanishes on both modes", [&] {
        bool ok = true;
        for (const Design* d : {&d1, &d2}) {
            const WorkspaceSystem ws = eliminate_inputs(ConstraintSystem::for_design(*d));
            for (const MPoly* g : {&ws.g12, &ws.g34, &ws.g56}) {
                ok = ok && g->substitute(translational_chart()).is_zero();
                ok = ok && g->substitute(twisted_chart()).is_zero();
            }
        }
        return std::pair{ok, std::string("g12,g34,g56 on both charts, both designs")};
    });

    // 3. Exactly one of the 56 3x3 input-Jacobian minors survives on the
    //    translational mode, and it is an exact constant multiple of
    //    p1 * p2 * p3.
    criterion(3, "input-minor factorization", [&] {
        const InputFactorization& f = input_minors_translational();
        bool ok = f.vanishing_minors == 55 && f.surviving_minors == 1 &&
                  f.cofactor.total_degree() == 0;
        for (int limb = 1; limb <= 3; ++limb)
            ok = ok && f.p[(std::size_t)limb - 1] == catalog::input_factor(limb);
        return std::pair{ok, "survivors=" + std::to_string(f.surviving_minors) +
                                 " cofactor=" + f.cofactor.str()};
    });

    // 4. The limb-1 input-singularity surface equals the reference torus
    //    exactly, and contains both degenerate points of the first design.
    criterion(4, "torus identity and degenerate points", [&] {
        bool ok = torus_equation(1) == catalog::torus_limb1();
        const MPoly tor = torus_equation(1, d1);
        for (long y2 : {2L, -2L})
            ok = ok && exact_pose_value(tor, mpq_class(-2), mpq_class(y2), mpq_class(0)).is_zero();
        return std::pair{ok, std::string(ok ? "exact, zeros at (-2,+-2,0)" : "mismatch")};
    });

    // 5. The output-Jacobian determinant on the translational mode is an
    //    exact constant multiple of the two reference factors, and neither
    //    factor involves the platform radius a3.
    criterion(5, "output-determinant factorization", [&] {
        const OutputFactorization& f = output_det_translational();
        const bool ok = f.s_small == catalog::output_factor_small() &&
                        f.s_large == catalog::output_factor_large() &&
                        f.cofactor.total_degree() == 0 && f.s_small.degree(VA3) == 0 &&
                        f.s_large.degree(VA3) == 0;
        return std::pair{ok, "cofactor=" + f.cofactor.str()};
    });

    // 6. Joint-space surfaces (first design): constant terms 32 and 144;
    //    at least 20 constructed singular triples vanish to 1e-6 (scaled)
    //    on each surface; 20 random triples stay clearly regular.
    criterion(6, "joint-space surface sampling", [&] {
        bool ok = catalog::joint_input_deg12().constant_term() == ExtScalar(32) &&
                  catalog::joint_output_deg12().constant_term() == ExtScalar(144);
        std::string detail = ok ? "constants 32/144" : "constant-term mismatch";

        double worst_in = 0, worst_out = 0;
        const auto in_samples = sample_input_singular_inputs(d1, 20);
        ok = ok && in_samples.size() >= 20;
        for (const auto& t : in_samples)
            worst_in = std::max(worst_in, std::fabs(joint_poly_eval(JointKind::input, t)) /
                                              safe(joint_poly_scale(JointKind::input, t)));
        const auto out_samples = sample_output_singular_inputs(d1, 20);
        ok = ok && out_samples.size() >= 20;
        for (const auto& t : out_samples)
            worst_out = std::max(worst_out, std::fabs(joint_poly_eval(JointKind::output, t)) /
                                                safe(joint_poly_scale(JointKind::output, t)));
        ok = ok && worst_in <= kSampleVanishTol && worst_out <= kSampleVanishTol;

        Lcg rng(0x9e3779b97f4a7c15ULL);
        double floor = 1.0;
        for (int k = 0; k < 20; ++k) {
            const std::array<double, 3> t{rng.uniform(-3, 3), rng.uniform(-3, 3),
                                          rng.uniform(-3, 3)};
            for (JointKind kind : {JointKind::input, JointKind::output})
                floor = std::min(floor, std::fabs(joint_poly_eval(kind, t)) /
                                            safe(joint_poly_scale(kind, t)));
        }
        ok = ok && floor >= kRegularFloor;
        char buf[128];
        std::snprintf(buf, sizeof buf, ", singular worst %.2e/%.2e, regular floor %.2e",
                      worst_in, worst_out, floor);
        return std::pair{ok, detail + buf};
    });

    // 7. The output eliminant of the first design vanishes on the circle
    //    y1^2 + y2^2 = 8, y3 = 0 (three rational witness points).
    criterion(7, "output eliminant on the circle", [&] {
        const MPoly elim = output_eliminant(d1);
        bool ok = !elim.is_zero();
        double worst = 0;
        const mpq_class pts[3][2] = {{mpq_class(2), mpq_class(2)},
                                     {mpq_class(-2), mpq_class(2)},
                                     {mpq_class(14, 5), mpq_class(2, 5)}};
        for (const auto& p : pts) {
            ok = ok && exact_pose_value(elim, p[0], p[1], mpq_class(0)).is_zero();
            std::array<double, kNumVars> pt{};
            pt[VY1] = p[0].get_d();
            pt[VY2] = p[1].get_d();
            worst = std::max(worst, std::fabs(elim.eval_double(pt)) / safe(elim.scale_at(pt)));
        }
        ok = ok && worst <= kEliminantTol;
        char buf[64];
        std::snprintf(buf, sizeof buf, "exact zeros, scaled worst %.2e", worst);
        return std::pair{ok, std::string(buf)};
    });

    // 8. Self motion: the second design carries the circle of radius
    //    sqrt(7)/2 with fixed inputs {-1/2, -2}; twelve circle points
    //    satisfy every limb equation at the locked input. For the first
    //    design the squared radius is 8 and the fixed inputs are complex.
    criterion(8, "self-motion circle and fixed inputs", [&] {
        const SelfMotion sm2 = self_motion(d2);
        bool ok = sm2.exists && sm2.radius_sq == mpq_class(7, 4) && sm2.inputs_rational &&
                  sm2.fixed_inputs_exact[0] == mpq_class(-2) &&
                  sm2.fixed_inputs_exact[1] == mpq_class(-1, 2);
        double worst = 0;
        const double r = std::sqrt(7.0) / 2;
        for (int k = 0; k < 12; ++k) {
            const double theta = 2 * 3.14159265358979323846 * k / 12;
            const std::array<double, 3> y{r * std::cos(theta), r * std::sin(theta), 0};
            for (int limb = 1; limb <= 3; ++limb)
                worst = std::max(
                    worst, residual(catalog::translational(limb), d2, y, {-0.5, -0.5, -0.5}));
        }
        ok = ok && worst <= kCircleEquationTol;
        const SelfMotion sm1 = self_motion(d1);
        ok = ok && sm1.exists && sm1.radius_sq == mpq_class(8) && sm1.inputs_complex;
        char buf[96];
        std::snprintf(buf, sizeof buf, "worst limb residual %.2e at locked input", worst);
        return std::pair{ok, std::string(buf)};
    });

    // 9. Transition curve: anchor C(0) = [1,0,0,0,0,0,0,7/2]; fifty curve
    //    points lie in the workspace of the second design; the curve meets
    //    the translational mode only at t = 0 on a 0.05 grid.
    criterion(9, "transition curve", [&] {
        const CurvePoint c0 = transition_curve_point(0.0);
        bool ok = c0.valid;
        for (int i = 0; i < 7; ++i) ok = ok && c0.pose.c[(std::size_t)i] == (i == 0 ? 1.0 : 0.0);
        ok = ok && std::fabs(c0.pose.c[7] - 3.5) <= 1e-12;

        const WorkspaceSystem ws = eliminate_inputs(ConstraintSystem::for_design(d2));
        double worst = 0;
        for (int k = 0; k < 50; ++k) {
            const double t = -1.0 + 2.0 * k / 49;
            const CurvePoint cp = transition_curve_point(t);
            const MembershipReport m = membership(ws, cp.pose, kMembershipTol);
            ok = ok && cp.valid && m.in_workspace;
            for (std::size_t i = 0; i < m.residuals.size(); ++i)
                worst = std::max(worst, m.residuals[i] / safe(m.scales[i]));
        }
        for (int k = -20; k <= 20; ++k) {
            const OperationMode m = mode_of(transition_curve_point(k * 0.05).pose);
            ok = ok && ((k == 0) == (m == OperationMode::O1));
        }
        char buf[96];
        std::snprintf(buf, sizeof buf, "anchor exact, 50-point worst residual %.2e", worst);
        return std::pair{ok, std::string(buf)};
    });

    // 10. Kinematics: the inverse solution at (0,0,2) gives 3 -+ sqrt(14) to
    //     twelve digits; the forward solution at the lower branch returns the
    //     pose (plus a distinct second assembly point); one hundred random
    //     reachable poses close under fk after ik.
    criterion(10, "inverse/forward closure", [&] {
        const IkSolution sol = ik(d1, {mpq_class(0), mpq_class(0), mpq_class(2)});
        const double lo = 3 - std::sqrt(14.0), hi = 3 + std::sqrt(14.0);
        bool ok = sol.combinations() == 8;
        for (const IkLimb& limb : sol.limb) {
            ok = ok && limb.roots.size() == 2;
            ok = ok && std::fabs(limb.roots[0] - lo) <= kIkDigitsTol;
            ok = ok && std::fabs(limb.roots[1] - hi) <= kIkDigitsTol;
        }

        const FkSolution fwd = fk(d1, {lo, lo, lo});
        ok = ok && fwd.tag == FkSolution::Tag::none && fwd.points.size() == 2;
        double best = 1e9, spread = 0;
        if (fwd.points.size() == 2) {
            for (const auto& p : fwd.points)
                best = std::min(best, std::hypot(p[0], p[1], p[2] - 2.0));
            spread = std::hypot(fwd.points[0][0] - fwd.points[1][0],
                                fwd.points[0][1] - fwd.points[1][1],
                                fwd.points[0][2] - fwd.points[1][2]);
        }
        ok = ok && best <= kFkReturnTol && spread > 1e-3;

        Lcg rng(0x517cc1b727220a95ULL);
        int reachable = 0, trials = 0;
        double worst = 0;
        while (reachable < 100 && trials < 600) {
            ++trials;
            const std::array<mpq_class, 3> y{mpq_class(rng.uniform(-2.5, 2.5)),
                                             mpq_class(rng.uniform(-2.5, 2.5)),
                                             mpq_class(rng.uniform(-3.2, 3.2))};
            const RoundtripReport rep = roundtrip_check(d1, y, kRoundtripTol);
            if (rep.ik_empty) continue;
            ++reachable;
            ok = ok && rep.all_closed;
            worst = std::max(worst, rep.max_error);
        }
        ok = ok && reachable == 100;
        char buf[96];
        std::snprintf(buf, sizeof buf, "%d/100 poses closed, worst error %.2e", reachable, worst);
        return std::pair{ok, std::string(buf)};
    });

    if (failures == 0) {
        std::printf("all 10 criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
}
