#include "ruukin/singularity.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

#include "ruukin/catalog.hpp"
#include "ruukin/constraints.hpp"
#include "ruukin/jacobian.hpp"
#include "ruukin/kinematics.hpp"
#include "ruukin/polymatrix.hpp"
#include "ruukin/resultant.hpp"

namespace ruukin {

namespace {

PolyMatrix substitute_all(const PolyMatrix& m, const std::map<int, MPoly>& sub) {
    PolyMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j).substitute(sub);
    return out;
}

double safe_scale(double s) { return std::max(s, std::numeric_limits<double>::min()); }

// Quadratic coefficients (A, B, D) of one design-substituted limb equation
// A t² + B t + D as doubles at a numeric position.
struct LimbQuadDouble {
    double a = 0, b = 0, d = 0;
};

LimbQuadDouble limb_quadratic_at(const Design& d, int limb, const std::array<double, 3>& y) {
    std::array<double, kNumVars> pt{};
    d.fill(pt);
    pt[VX0] = 1;
    pt[VY1] = y[0];
    pt[VY2] = y[1];
    pt[VY3] = y[2];
    const MPoly& eq = catalog::translational(limb);
    auto coeffs = eq.coeffs_in(input_var(limb));
    LimbQuadDouble q;
    if (coeffs.size() > 0) q.d = coeffs[0].eval_double(pt);
    if (coeffs.size() > 1) q.b = coeffs[1].eval_double(pt);
    if (coeffs.size() > 2) q.a = coeffs[2].eval_double(pt);
    return q;
}

// Real roots of a univariate polynomial (double coefficients, ascending
// order) inside [lo, hi], located by a sign-change scan plus bisection.
std::vector<double> scan_roots(const std::vector<double>& coef, double lo, double hi,
                               int steps) {
    auto eval = [&](double x) {
        double v = 0;
        for (std::size_t i = coef.size(); i-- > 0;) v = v * x + coef[i];
        return v;
    };
    std::vector<double> roots;
    double prev_x = lo, prev_v = eval(lo);
    for (int k = 1; k <= steps; ++k) {
        const double x = lo + (hi - lo) * k / steps;
        const double v = eval(x);
        if (prev_v == 0) {
            roots.push_back(prev_x);
        } else if (v != 0 && std::signbit(v) != std::signbit(prev_v)) {
            double a = prev_x, b = x;
            for (int it = 0; it < 80; ++it) {
                const double mid = (a + b) / 2;
                const double fm = eval(mid);
                if (fm == 0) {
                    a = b = mid;
                    break;
                }
                if (std::signbit(fm) == std::signbit(eval(a)))
                    a = mid;
                else
                    b = mid;
            }
            roots.push_back((a + b) / 2);
        }
        prev_x = x;
        prev_v = v;
    }
    if (eval(hi) == 0) roots.push_back(hi);
    return roots;
}

}  // namespace

// --- Input singularities ---------------------------------------------------

const InputFactorization& input_minors_translational() {
    static const InputFactorization fact = [] {
        const ConstraintSystem& cs = ConstraintSystem::symbolic();
        const JacobianPair jac = jacobian(cs);
        const PolyMatrix ji = substitute_all(jac.j_i, translational_chart());

        InputFactorization out;
        out.p = {catalog::input_factor(1), catalog::input_factor(2), catalog::input_factor(3)};

        MPoly survivor;
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = i + 1; j < 8; ++j)
                for (std::size_t k = j + 1; k < 8; ++k) {
                    const MPoly det = det_cofactor(ji.submatrix({i, j, k}, {0, 1, 2}));
                    if (det.is_zero()) {
                        ++out.vanishing_minors;
                        continue;
                    }
                    ++out.surviving_minors;
                    survivor = det;
                }
        if (out.surviving_minors != 1)
            throw std::logic_error("input minors: expected exactly one survivor, found " +
                                   std::to_string(out.surviving_minors));
        auto q = div_exact(survivor, out.p[0] * out.p[1] * out.p[2]);
        if (!q)
            throw std::logic_error("input minors: survivor not divisible by the limb factors");
        out.cofactor = std::move(*q);
        return out;
    }();
    return fact;
}

std::optional<ExtScalar> input_sing_root(int limb, const std::array<mpq_class, 3>& y,
                                         const Design& d) {
    auto sub = d.substitution();
    sub[VY1] = MPoly::constant(ExtScalar(y[0]));
    sub[VY2] = MPoly::constant(ExtScalar(y[1]));
    sub[VY3] = MPoly::constant(ExtScalar(y[2]));
    const MPoly p = catalog::input_factor(limb).substitute(sub);
    const int tv = input_var(limb);
    if (p.degree(tv) > 1) throw std::logic_error("input factor: degree > 1 in the input");
    auto coeffs = p.coeffs_in(tv);
    const ExtScalar lead = coeffs.size() > 1 ? coeffs[1].constant_term() : ExtScalar(0);
    if (lead.is_zero()) return std::nullopt;
    const ExtScalar trail = coeffs[0].is_zero() ? ExtScalar(0) : coeffs[0].constant_term();
    return -trail / lead;
}

DegeneratePoints degenerate_input_points(const Design& d) {
    DegeneratePoints out;
    out.y1 = (d.r1 - d.r0) / 2;
    out.y2_sq = (d.a3 * d.a3 - d.a1 * d.a1) / 4;
    out.real = out.y2_sq >= 0;
    if (out.real) {
        const double y2 = std::sqrt(out.y2_sq.get_d());
        out.points[0] = {out.y1.get_d(), y2, 0.0};
        out.points[1] = {out.y1.get_d(), -y2, 0.0};
    }
    return out;
}

MPoly torus_equation(int limb) {
    static const std::array<MPoly, 3> tori = [] {
        const auto wt = translational_system();
        std::array<MPoly, 3> out;
        for (int i = 0; i < 3; ++i) {
            auto c = wt[i].coeffs_in(input_var(i + 1));
            if (c.size() != 3)
                throw std::logic_error("translational equation is not quadratic in its input");
            // A t² + B t + D  →  A·D − (B/2)²
            out[i] = c[2] * c[0] - c[1] * c[1] * ExtScalar(mpq_class(1, 4));
        }
        return out;
    }();
    if (limb < 1 || limb > 3) throw std::invalid_argument("torus_equation: limb must be 1..3");
    return tori[limb - 1];
}

MPoly torus_equation(int limb, const Design& d) {
    return torus_equation(limb).substitute(d.substitution());
}

std::vector<std::array<double, 3>> tori_common_points(const Design& d) {
    // The three surfaces are images of each other under the ±120° rotations
    // about the y3-axis, so axis points common to one are common to all.
    MPoly axis = torus_equation(1, d)
                     .substitute(VY1, ExtScalar(0))
                     .substitute(VY2, ExtScalar(0));
    std::vector<std::array<double, 3>> out;
    if (axis.is_zero()) return out;
    auto coeffs = axis.coeffs_in(VY3);
    std::vector<double> c(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        c[i] = coeffs[i].is_zero() ? 0.0 : coeffs[i].constant_term().to_double();
    while (c.size() > 1 && c.back() == 0) c.pop_back();
    if (c.size() <= 1) return out;
    double bound = 0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) bound = std::max(bound, std::fabs(c[i]));
    bound = 1 + bound / std::fabs(c.back());
    for (double z : scan_roots(c, -bound, bound, 4000)) {
        if (!out.empty() && std::fabs(out.back()[2] - z) < 1e-9) continue;
        out.push_back({0.0, 0.0, z});
    }
    return out;
}

// --- Output singularities ----------------------------------------------------

const OutputFactorization& output_det_translational() {
    static const OutputFactorization fact = [] {
        const ConstraintSystem& cs = ConstraintSystem::symbolic();
        const JacobianPair jac = jacobian(cs);
        const PolyMatrix jo = substitute_all(jac.j_o, translational_chart());
        const MPoly det = det_expansion(jo);

        OutputFactorization out;
        out.s_small = catalog::output_factor_small();
        out.s_large = catalog::output_factor_large();
        auto q1 = div_exact(det, out.s_small);
        if (!q1) throw std::logic_error("output determinant: small factor does not divide");
        auto q2 = div_exact(*q1, out.s_large);
        if (!q2) throw std::logic_error("output determinant: large factor does not divide");
        out.cofactor = std::move(*q2);
        return out;
    }();
    return fact;
}

double joint_poly_eval(JointKind kind, const std::array<double, 3>& t) {
    std::array<double, kNumVars> pt{};
    Design::pars().fill(pt);
    pt[VT1] = t[0];
    pt[VT2] = t[1];
    pt[VT3] = t[2];
    const MPoly& p =
        kind == JointKind::input ? catalog::joint_input_deg12() : catalog::joint_output_deg12();
    return p.eval_double(pt);
}

double joint_poly_scale(JointKind kind, const std::array<double, 3>& t) {
    std::array<double, kNumVars> pt{};
    Design::pars().fill(pt);
    pt[VT1] = t[0];
    pt[VT2] = t[1];
    pt[VT3] = t[2];
    const MPoly& p =
        kind == JointKind::input ? catalog::joint_input_deg12() : catalog::joint_output_deg12();
    return p.scale_at(pt);
}

MPoly output_eliminant(const Design& d) {
    const auto wt = translational_system(d);
    MPoly r = catalog::output_factor_small().substitute(d.substitution());
    for (int i = 0; i < 3; ++i) {
        const int tv = input_var(i + 1);
        if (r.is_zero())
            throw std::domain_error("output eliminant: zero before eliminating input " +
                                    std::to_string(i + 1));
        if (r.degree(tv) == 0) continue;
        r = resultant(r, wt[i], tv);
        if (r.is_zero())
            throw std::domain_error("output eliminant: degenerated eliminating input " +
                                    std::to_string(i + 1));
    }
    return r.content_normalized();
}

// --- Self-motion ---------------------------------------------------------

SelfMotion self_motion(const Design& d) {
    SelfMotion sm;
    const mpq_class dr = d.r0 - d.r1;
    sm.radius_sq = (d.a3 * d.a3 + dr * dr - d.a1 * d.a1) / 4;
    sm.exists = sm.radius_sq > 0;
    sm.r0_equals_r1 = (dr == 0);
    if (sm.r0_equals_r1) {
        sm.inputs_rational = true;
        sm.fixed_inputs_exact = {mpq_class(0), mpq_class(0)};
        sm.fixed_inputs = {0.0, 0.0};
        return sm;
    }
    const mpq_class disc = d.a1 * d.a1 - dr * dr;
    sm.inputs_complex = disc < 0;
    if (sm.inputs_complex) return sm;
    const double s = std::sqrt(disc.get_d());
    const double drd = dr.get_d();
    sm.fixed_inputs = {(-d.a1.get_d() - s) / drd, (-d.a1.get_d() + s) / drd};
    if (sm.fixed_inputs[0] > sm.fixed_inputs[1])
        std::swap(sm.fixed_inputs[0], sm.fixed_inputs[1]);
    sm.inputs_rational = mpz_perfect_square_p(disc.get_num().get_mpz_t()) != 0 &&
                         mpz_perfect_square_p(disc.get_den().get_mpz_t()) != 0;
    if (sm.inputs_rational) {
        mpz_class sn, sd;
        mpz_sqrt(sn.get_mpz_t(), disc.get_num().get_mpz_t());
        mpz_sqrt(sd.get_mpz_t(), disc.get_den().get_mpz_t());
        const mpq_class sq(sn, sd);
        sm.fixed_inputs_exact = {(-d.a1 - sq) / dr, (-d.a1 + sq) / dr};
        if (sm.fixed_inputs_exact[0] > sm.fixed_inputs_exact[1])
            std::swap(sm.fixed_inputs_exact[0], sm.fixed_inputs_exact[1]);
    }
    return sm;
}

// --- Classification ------------------------------------------------------

SingularityReport classify(const Design& d, const std::array<double, 3>& y,
                           const std::array<double, 3>& t, double tol) {
    SingularityReport rep;
    rep.tol = tol;

    std::array<double, kNumVars> pt{};
    d.fill(pt);
    pt[VX0] = 1;
    pt[VY1] = y[0];
    pt[VY2] = y[1];
    pt[VY3] = y[2];
    pt[VT1] = t[0];
    pt[VT2] = t[1];
    pt[VT3] = t[2];

    for (int i = 0; i < 3; ++i) {
        const MPoly& eq = catalog::translational(i + 1);
        rep.wt_residual[i] = std::fabs(eq.eval_double(pt)) / safe_scale(eq.scale_at(pt));
        if (rep.wt_residual[i] > 100 * tol)
            throw std::domain_error(
                "classify: configuration violates the translational constraints (limb " +
                std::to_string(i + 1) + ")");
    }
    for (int i = 0; i < 3; ++i) {
        const MPoly& p = catalog::input_factor(i + 1);
        rep.p_residual[i] = std::fabs(p.eval_double(pt)) / safe_scale(p.scale_at(pt));
        rep.input_singular[i] = rep.p_residual[i] <= tol;
    }
    const MPoly& ss = catalog::output_factor_small();
    const MPoly& sl = catalog::output_factor_large();
    rep.s_small_residual = std::fabs(ss.eval_double(pt)) / safe_scale(ss.scale_at(pt));
    rep.s_large_residual = std::fabs(sl.eval_double(pt)) / safe_scale(sl.scale_at(pt));
    rep.output_singular = rep.s_small_residual <= tol || rep.s_large_residual <= tol;

    const SelfMotion sm = self_motion(d);
    if (sm.exists && !sm.inputs_complex) {
        const double r2 = sm.radius_sq.get_d();
        const bool on_circle = std::fabs(y[2]) <= tol * (1 + std::sqrt(r2)) &&
                               std::fabs(y[0] * y[0] + y[1] * y[1] - r2) <= tol * (1 + r2);
        bool inputs_fixed = false;
        for (double f : sm.fixed_inputs) {
            bool all = true;
            for (double ti : t)
                if (std::fabs(ti - f) > tol * (1 + std::fabs(f))) all = false;
            if (all) inputs_fixed = true;
        }
        rep.self_motion = on_circle && inputs_fixed;
    }
    return rep;
}

// --- Singular-configuration samplers -----------------------------------------

std::vector<std::array<double, 3>> sample_input_singular_inputs(const Design& d,
                                                                std::size_t count) {
    // The joint-space input-singularity variety carries the limb whose input
    // occupies the THIRD coordinate (it is symmetric in the first two): a
    // triple lies on it exactly when some pose compatible with (t1, t2) makes
    // the limb-3 equation's two roots collide at t3. Sample poses on the
    // limb-3 torus, take the vertex input there, and close the other limbs
    // with inverse kinematics.
    std::vector<std::array<double, 3>> out;
    const MPoly tor = torus_equation(3, d);
    static constexpr double kY2[] = {0.0, 0.5, -0.5, 1.0, -1.0, 1.5, -1.5, 2.5, -2.5};
    static constexpr double kY3[] = {0.0, 0.25, -0.25, 0.5, -0.5, 1.0, -1.0};
    for (double y3 : kY3) {
        for (double y2 : kY2) {
            MPoly slice =
                tor.substitute(VY2, ExtScalar(mpq_class(y2))).substitute(VY3, ExtScalar(mpq_class(y3)));
            auto coeffs = slice.coeffs_in(VY1);
            std::vector<double> c(coeffs.size());
            for (std::size_t i = 0; i < coeffs.size(); ++i)
                c[i] = coeffs[i].is_zero() ? 0.0 : coeffs[i].constant_term().to_double();
            for (double y1 : scan_roots(c, -8.0, 8.0, 800)) {
                const std::array<double, 3> y{y1, y2, y3};
                // On the torus the limb-3 equation has a double root at the
                // quadratic's vertex; the degenerate branch (leading
                // coefficient near zero) has no isolated singular input.
                const LimbQuadDouble q = limb_quadratic_at(d, 3, y);
                if (std::fabs(q.a) < 1e-6) continue;
                const double t3 = -q.b / (2 * q.a);
                const IkSolution sol =
                    ik(d, {mpq_class(y1), mpq_class(y2), mpq_class(y3)});
                if (sol.limb[0].roots.empty() || sol.limb[1].roots.empty()) continue;
                for (double t1 : sol.limb[0].roots)
                    for (double t2 : sol.limb[1].roots) {
                        out.push_back({t1, t2, t3});
                        if (out.size() == count) return out;
                    }
            }
        }
    }
    return out;
}

std::vector<std::array<double, 3>> sample_output_singular_inputs(const Design& d,
                                                                 std::size_t count) {
    std::vector<std::array<double, 3>> out;
    const MPoly s = catalog::output_factor_small().substitute(d.substitution());

    std::array<double, kNumVars> pt{};
    d.fill(pt);
    pt[VX0] = 1;

    // s composed with one inverse-kinematics branch; NaN where the branch dies.
    auto branch_value = [&](double y1, double y2, double y3, int b1, int b2, int b3,
                            std::array<double, 3>* t_out) -> double {
        const IkSolution sol = ik(d, {mpq_class(y1), mpq_class(y2), mpq_class(y3)});
        const int idx[3] = {b1, b2, b3};
        std::array<double, 3> t{};
        for (int i = 0; i < 3; ++i) {
            if (sol.limb[i].roots.size() != 2) return std::numeric_limits<double>::quiet_NaN();
            t[i] = sol.limb[i].roots[idx[i]];
        }
        if (t_out) *t_out = t;
        std::array<double, kNumVars> q = pt;
        q[VY1] = y1;
        q[VY2] = y2;
        q[VY3] = y3;
        q[VT1] = t[0];
        q[VT2] = t[1];
        q[VT3] = t[2];
        return s.eval_double(q);
    };

    static constexpr double kY2[] = {0.5, 1.0, 1.5, -0.5, 2.0, -1.0};
    static constexpr double kY3[] = {0.0, 0.3, -0.3};
    for (double y3 : kY3)
        for (double y2 : kY2)
            for (int b1 = 0; b1 < 2; ++b1)
                for (int b2 = 0; b2 < 2; ++b2)
                    for (int b3 = 0; b3 < 2; ++b3) {
                        const int steps = 240;
                        double prev_x = -6.0;
                        double prev_v = branch_value(prev_x, y2, y3, b1, b2, b3, nullptr);
                        for (int k = 1; k <= steps; ++k) {
                            const double x = -6.0 + 12.0 * k / steps;
                            const double v = branch_value(x, y2, y3, b1, b2, b3, nullptr);
                            if (std::isfinite(prev_v) && std::isfinite(v) && prev_v != 0 &&
                                v != 0 && std::signbit(prev_v) != std::signbit(v)) {
                                double a = prev_x, b = x, fa = prev_v;
                                for (int it = 0; it < 60; ++it) {
                                    const double mid = (a + b) / 2;
                                    const double fm =
                                        branch_value(mid, y2, y3, b1, b2, b3, nullptr);
                                    if (!std::isfinite(fm)) break;
                                    if (std::signbit(fm) == std::signbit(fa)) {
                                        a = mid;
                                        fa = fm;
                                    } else {
                                        b = mid;
                                    }
                                }
                                // A sign change can also come from a branch
                                // discontinuity (a limb root escaping to
                                // infinity as its leading coefficient crosses
                                // zero); accept only genuine zeros of s.
                                std::array<double, 3> t{};
                                const double mid = (a + b) / 2;
                                const double res = branch_value(mid, y2, y3, b1, b2, b3, &t);
                                std::array<double, kNumVars> q = pt;
                                q[VY1] = mid;
                                q[VY2] = y2;
                                q[VY3] = y3;
                                q[VT1] = t[0];
                                q[VT2] = t[1];
                                q[VT3] = t[2];
                                const double scale = s.scale_at(q);
                                if (std::isfinite(res) && scale > 0 &&
                                    std::fabs(res) <= 1e-9 * scale) {
                                    out.push_back(t);
                                    if (out.size() == count) return out;
                                }
                            }
                            prev_x = x;
                            prev_v = v;
                        }
                    }
    return out;
}

}  // namespace ruukin
