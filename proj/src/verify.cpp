#include "ruukin/verify.hpp"

#include <cmath>
#include <cstdint>
#include <exception>
#include <limits>

#include "ruukin/catalog.hpp"
#include "ruukin/constraints.hpp"
#include "ruukin/kinematics.hpp"
#include "ruukin/singularity.hpp"
#include "ruukin/workspace.hpp"

namespace ruukin {

namespace {

double safe_scale(double s) { return std::max(s, std::numeric_limits<double>::min()); }

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

std::vector<CheckResult> verify_suite(const Design& d) {
    std::vector<CheckResult> out;
    auto add = [&](const std::string& name, bool pass, const std::string& detail = "") {
        out.push_back({name, pass, detail});
    };
    auto guard = [&](const std::string& name, auto&& fn) {
        try {
            fn();
        } catch (const std::exception& e) {
            add(name, false, e.what());
        }
    };

    // Generated translational system equals the catalogued one, term for term.
    guard("translational-system-reference", [&] {
        const auto wt = translational_system();
        const bool ok = wt[0] == catalog::translational(1) && wt[1] == catalog::translational(2) &&
                        wt[2] == catalog::translational(3);
        add("translational-system-reference", ok, ok ? "exact match, all limbs" : "mismatch");
    });

    // The rotational-part (odd) limb equations vanish identically on both
    // operation-mode charts with the design symbolic.
    guard("charts-annihilate-odd-equations", [&] {
        const ConstraintSystem& cs = ConstraintSystem::symbolic();
        bool ok = true;
        for (int idx : {0, 2, 4}) {
            ok = ok && cs.g[idx].substitute(translational_chart()).is_zero();
            ok = ok && cs.g[idx].substitute(twisted_chart()).is_zero();
        }
        add("charts-annihilate-odd-equations", ok);
    });

    // The input-free workspace equations vanish identically on both charts for
    // this design (exact polynomial zero, not numeric smallness).
    guard("workspace-vanishes-on-modes", [&] {
        const WorkspaceSystem ws = eliminate_inputs(ConstraintSystem::for_design(d));
        bool ok = true;
        for (const MPoly* g : {&ws.g12, &ws.g34, &ws.g56}) {
            ok = ok && g->substitute(translational_chart()).is_zero();
            ok = ok && g->substitute(twisted_chart()).is_zero();
        }
        add("workspace-vanishes-on-modes", ok);
    });

    // Input-Jacobian minors: exactly one survivor, multiple of p1·p2·p3.
    guard("input-minor-factorization", [&] {
        const InputFactorization& f = input_minors_translational();
        const bool ok = f.vanishing_minors == 55 && f.surviving_minors == 1 &&
                        f.cofactor.total_degree() == 0;
        add("input-minor-factorization", ok,
            "survivors=" + std::to_string(f.surviving_minors) + " cofactor=" + f.cofactor.str());
    });

    // Limb-1 torus identity and quadratic leading coefficient.
    guard("torus-identity", [&] {
        const bool ok = torus_equation(1) == catalog::torus_limb1() &&
                        translational_system()[0].coeffs_in(VT1)[2] == catalog::torus_lead_coeff();
        add("torus-identity", ok);
    });

    // The two degenerate-branch points lie on the limb-1 torus.
    guard("degenerate-points-on-torus", [&] {
        const DegeneratePoints dp = degenerate_input_points(d);
        if (!dp.real) {
            add("degenerate-points-on-torus", true, "degenerate pair complex for this design");
            return;
        }
        const MPoly tor = torus_equation(1, d);
        bool ok = true;
        for (const auto& p : dp.points) {
            std::array<double, kNumVars> pt{};
            pt[VY1] = p[0];
            pt[VY2] = p[1];
            pt[VY3] = p[2];
            ok = ok && std::fabs(tor.eval_double(pt)) <= 1e-9 * safe_scale(tor.scale_at(pt));
        }
        add("degenerate-points-on-torus", ok);
    });

    // Output-Jacobian determinant factors through the two reference factors.
    guard("output-determinant-factorization", [&] {
        const OutputFactorization& f = output_det_translational();
        const bool ok = f.s_small.degree(VA3) == 0 && f.s_large.degree(VA3) == 0 &&
                        f.cofactor.total_degree() == 0;
        add("output-determinant-factorization", ok, "cofactor=" + f.cofactor.str());
    });

    // Joint-space polynomial trailing terms.
    guard("joint-polynomial-constants", [&] {
        const bool ok = catalog::joint_input_deg12().constant_term() == ExtScalar(32) &&
                        catalog::joint_output_deg12().constant_term() == ExtScalar(144);
        add("joint-polynomial-constants", ok);
    });

    // Constructed singular joint triples for THIS design must annihilate the
    // catalogued joint-space polynomials (printed for the bundled design pars).
    guard("joint-input-vanishing-samples", [&] {
        const auto samples = sample_input_singular_inputs(d, 20);
        bool ok = samples.size() >= 20;
        double worst = 0;
        for (const auto& t : samples) {
            const double r = std::fabs(joint_poly_eval(JointKind::input, t)) /
                             safe_scale(joint_poly_scale(JointKind::input, t));
            worst = std::max(worst, r);
            ok = ok && r <= 1e-6;
        }
        add("joint-input-vanishing-samples", ok,
            "n=" + std::to_string(samples.size()) + " worst=" + std::to_string(worst));
    });
    guard("joint-output-vanishing-samples", [&] {
        const auto samples = sample_output_singular_inputs(d, 20);
        bool ok = samples.size() >= 20;
        double worst = 0;
        for (const auto& t : samples) {
            const double r = std::fabs(joint_poly_eval(JointKind::output, t)) /
                             safe_scale(joint_poly_scale(JointKind::output, t));
            worst = std::max(worst, r);
            ok = ok && r <= 1e-6;
        }
        add("joint-output-vanishing-samples", ok,
            "n=" + std::to_string(samples.size()) + " worst=" + std::to_string(worst));
    });

    // Generic joint triples must be clearly regular for both polynomials.
    guard("joint-regular-samples", [&] {
        Lcg rng(0x9e3779b97f4a7c15ULL);
        bool ok = true;
        for (int k = 0; k < 20; ++k) {
            const std::array<double, 3> t{rng.uniform(-3, 3), rng.uniform(-3, 3),
                                          rng.uniform(-3, 3)};
            for (JointKind kind : {JointKind::input, JointKind::output}) {
                const double r = std::fabs(joint_poly_eval(kind, t)) /
                                 safe_scale(joint_poly_scale(kind, t));
                ok = ok && r >= 1e-3;
            }
        }
        add("joint-regular-samples", ok);
    });

    // Output eliminant vanishes on the self-motion circle.
    guard("output-eliminant-circle", [&] {
        const SelfMotion sm = self_motion(d);
        if (!sm.exists) {
            add("output-eliminant-circle", true, "no real self-motion circle for this design");
            return;
        }
        const MPoly elim = output_eliminant(d);
        const double r = std::sqrt(sm.radius_sq.get_d());
        bool ok = !elim.is_zero();
        double worst = 0;
        for (double theta : {0.0, 0.5235987755982988, 0.7853981633974483}) {
            std::array<double, kNumVars> pt{};
            pt[VY1] = r * std::cos(theta);
            pt[VY2] = r * std::sin(theta);
            pt[VY3] = 0;
            const double res = std::fabs(elim.eval_double(pt)) / safe_scale(elim.scale_at(pt));
            worst = std::max(worst, res);
            ok = ok && res <= 1e-6;
        }
        add("output-eliminant-circle", ok, "worst=" + std::to_string(worst));
    });

    // Locked inputs carry the whole circle: one fixed input satisfies every
    // limb equation on 12 circle points.
    guard("self-motion-fixed-inputs", [&] {
        const SelfMotion sm = self_motion(d);
        if (!sm.exists || sm.inputs_complex) {
            add("self-motion-fixed-inputs", true,
                sm.exists ? "fixed inputs complex" : "no real circle");
            return;
        }
        const double r = std::sqrt(sm.radius_sq.get_d());
        bool any_candidate = false;
        double best_worst = std::numeric_limits<double>::infinity();
        for (double f : sm.fixed_inputs) {
            double worst = 0;
            for (int k = 0; k < 12; ++k) {
                const double theta = 2 * 3.14159265358979323846 * k / 12;
                std::array<double, kNumVars> pt{};
                d.fill(pt);
                pt[VX0] = 1;
                pt[VY1] = r * std::cos(theta);
                pt[VY2] = r * std::sin(theta);
                pt[VY3] = 0;
                pt[VT1] = pt[VT2] = pt[VT3] = f;
                for (int limb = 1; limb <= 3; ++limb) {
                    const MPoly& eq = catalog::translational(limb);
                    worst = std::max(worst, std::fabs(eq.eval_double(pt)) /
                                                safe_scale(eq.scale_at(pt)));
                }
            }
            best_worst = std::min(best_worst, worst);
            if (worst <= 1e-9) any_candidate = true;
        }
        add("self-motion-fixed-inputs", any_candidate,
            "best worst-residual=" + std::to_string(best_worst));
    });

    // Transition curve (defined for the bundled design pars2): anchor point,
    // workspace membership along the curve, and mode isolation at t = 0.
    guard("transition-curve", [&] {
        static const WorkspaceSystem ws = eliminate_inputs(ConstraintSystem::for_design(Design::pars2()));
        const CurvePoint c0 = transition_curve_point(0.0);
        bool ok = c0.valid && c0.pose.c[0] == 1 && c0.pose.c[1] == 0 && c0.pose.c[2] == 0 &&
                  c0.pose.c[3] == 0 && c0.pose.c[4] == 0 && c0.pose.c[5] == 0 &&
                  c0.pose.c[6] == 0 && std::fabs(c0.pose.c[7] - 3.5) <= 1e-12;
        for (int k = 0; k < 50 && ok; ++k) {
            const double t = -1.0 + 2.0 * k / 49;
            const CurvePoint cp = transition_curve_point(t);
            ok = ok && cp.valid && membership(ws, cp.pose, 1e-6).in_workspace;
        }
        for (int k = -20; k <= 20 && ok; ++k) {
            const double t = k * 0.05;
            const OperationMode m = mode_of(transition_curve_point(t).pose);
            ok = ok && ((k == 0) == (m == OperationMode::O1));
        }
        add("transition-curve", ok);
    });

    // Inverse/forward kinematics closure on deterministic probe positions.
    guard("kinematic-roundtrip", [&] {
        int reachable = 0;
        bool ok = true;
        double worst = 0;
        for (int iy1 = -2; iy1 <= 2; ++iy1)
            for (int iy3 = 1; iy3 <= 3; ++iy3) {
                const std::array<mpq_class, 3> y{mpq_class(iy1), mpq_class(1), mpq_class(iy3)};
                const IkSolution sol = ik(d, y);
                if (sol.combinations() != 8) continue;  // probe only clearly regular points
                ++reachable;
                const RoundtripReport rep = roundtrip_check(d, y, 1e-8);
                worst = std::max(worst, rep.max_error);
                ok = ok && rep.all_closed;
            }
        add("kinematic-roundtrip", ok && reachable > 0,
            "probes=" + std::to_string(reachable) + " worst=" + std::to_string(worst));
    });

    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace ruukin
