#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "ruukin/catalog.hpp"
#include "ruukin/constraints.hpp"
#include "ruukin/design.hpp"
#include "ruukin/jacobian.hpp"
#include "ruukin/kinematics.hpp"
#include "ruukin/singularity.hpp"

using namespace ruukin;

namespace {

ExtScalar exact_at(const MPoly& q, const ExtScalar& y1, const ExtScalar& y2,
                   const ExtScalar& y3) {
    std::array<ExtScalar, kNumVars> vals{};
    std::array<bool, kNumVars> set{};
    vals[VX0] = ExtScalar(1);
    set[VX0] = true;
    vals[VY1] = y1;
    set[VY1] = true;
    vals[VY2] = y2;
    set[VY2] = true;
    vals[VY3] = y3;
    set[VY3] = true;
    return q.eval_exact(vals, set);
}

double scaled_at(const MPoly& q, const std::array<double, 3>& y,
                 const std::array<double, 3>& t) {
    std::array<double, kNumVars> pt{};
    pt[VX0] = 1;
    pt[VY1] = y[0];
    pt[VY2] = y[1];
    pt[VY3] = y[2];
    pt[VT1] = t[0];
    pt[VT2] = t[1];
    pt[VT3] = t[2];
    const double s = q.scale_at(pt);
    return std::fabs(q.eval_double(pt)) / (s > 0 ? s : 1.0);
}

}  // namespace

TEST_CASE("input block: 55 vanishing minors, one exact multiple of p1*p2*p3") {
    const InputFactorization& f = input_minors_translational();
    CHECK(f.vanishing_minors == 55);
    CHECK(f.surviving_minors == 1);
    CHECK(f.cofactor == MPoly::constant(ExtScalar(8)));
    for (int limb = 1; limb <= 3; ++limb) CHECK(f.p[limb - 1] == catalog::input_factor(limb));
}

TEST_CASE("input factor root: exact double-root input on the torus") {
    // (-1, 0, 0) is a rational point of the limb-1 torus; the limb equation
    // there is -12 t^2 + 24 t - 12, double root t = 1.
    const auto t1 = input_sing_root(1, {mpq_class(-1), mpq_class(0), mpq_class(0)}, Design::pars());
    REQUIRE(t1.has_value());
    CHECK(*t1 == ExtScalar(1));

    // At a degenerate point the factor p1 has no root in its input at all.
    CHECK_FALSE(
        input_sing_root(1, {mpq_class(-2), mpq_class(2), mpq_class(0)}, Design::pars()).has_value());
}

TEST_CASE("torus surface: reference equality, rational points, rotation images") {
    CHECK(torus_equation(1) == catalog::torus_limb1());

    const MPoly tor1 = torus_equation(1, Design::pars());
    // Degenerate points and the rational slice roots on the y1-axis.
    for (auto [a, b] : {std::pair{-2, 2}, {-2, -2}})
        CHECK(exact_at(tor1, ExtScalar(a), ExtScalar(b), ExtScalar(0)).is_zero());
    for (int y1 : {-6, -3, -1, 2})
        CHECK(exact_at(tor1, ExtScalar(y1), ExtScalar(0), ExtScalar(0)).is_zero());
    CHECK_FALSE(exact_at(tor1, ExtScalar(1), ExtScalar(0), ExtScalar(0)).is_zero());

    // Limbs 2 and 3 are the ±120° rotations: the image of a root of tor1
    // under the rotation taking limb 1's direction to limb 2's lies on tor2.
    // Rotating (-1, 0, 0) by -120° gives (1/2, √3/2, 0); by +120° the mirror.
    const ExtScalar half(mpq_class(1, 2));
    const ExtScalar s3_half(mpq_class(0), mpq_class(1, 2));
    const MPoly tor2 = torus_equation(2, Design::pars());
    const MPoly tor3 = torus_equation(3, Design::pars());
    const bool on2 = exact_at(tor2, half, s3_half, ExtScalar(0)).is_zero();
    const bool on3 = exact_at(tor3, half, s3_half, ExtScalar(0)).is_zero();
    const bool on2m = exact_at(tor2, half, -s3_half, ExtScalar(0)).is_zero();
    const bool on3m = exact_at(tor3, half, -s3_half, ExtScalar(0)).is_zero();
    CHECK(((on2 && on3m) || (on3 && on2m)));
}

TEST_CASE("degenerate input points") {
    const DegeneratePoints dp = degenerate_input_points(Design::pars());
    CHECK(dp.real);
    CHECK(dp.y1 == mpq_class(-2));
    CHECK(dp.y2_sq == mpq_class(4));
    CHECK(dp.points[0][0] == doctest::Approx(-2).epsilon(1e-14));
    CHECK(std::fabs(dp.points[0][1]) == doctest::Approx(2).epsilon(1e-14));
    CHECK(dp.points[0][2] == 0);

    // pars2 has a3 < a1: the degenerate positions move off the real locus.
    CHECK_FALSE(degenerate_input_points(Design::pars2()).real);
}

TEST_CASE("common points of the three tori sit on the symmetry axis") {
    const auto pts = tori_common_points(Design::pars());
    REQUIRE(pts.size() == 2);
    const double z = 2 * std::sqrt(3.0);
    CHECK(pts[0][0] == doctest::Approx(0).epsilon(1e-10));
    CHECK(pts[0][1] == doctest::Approx(0).epsilon(1e-10));
    CHECK(pts[0][2] == doctest::Approx(-z).epsilon(1e-10));
    CHECK(pts[1][2] == doctest::Approx(z).epsilon(1e-10));

    // (0, 0, ±2√3) is an exact common root: check all three tori in ℚ(√3).
    const ExtScalar two_s3(mpq_class(0), mpq_class(2));
    for (int limb = 1; limb <= 3; ++limb) {
        const MPoly tor = torus_equation(limb, Design::pars());
        CHECK(exact_at(tor, ExtScalar(0), ExtScalar(0), two_s3).is_zero());
        CHECK(exact_at(tor, ExtScalar(0), ExtScalar(0), -two_s3).is_zero());
    }
}

TEST_CASE("output determinant: exact factorization, factors free of a3") {
    const OutputFactorization& of = output_det_translational();
    CHECK(of.s_small == catalog::output_factor_small());
    CHECK(of.s_large == catalog::output_factor_large());
    CHECK(of.cofactor == MPoly::constant(ExtScalar(-512)));
    for (const MPoly* q : {&of.s_small, &of.s_large})
        for (const auto& [ex, coeff] : q->terms()) CHECK(ex.e[VA3] == 0);
}

TEST_CASE("joint polynomials: constant terms and frozen checksums") {
    std::array<ExtScalar, kNumVars> vals{};
    std::array<bool, kNumVars> set{};
    for (int v : {VT1, VT2, VT3}) set[(std::size_t)v] = true;

    const MPoly& jin = catalog::joint_input_deg12();
    const MPoly& jout = catalog::joint_output_deg12();
    CHECK(jin.eval_exact(vals, set) == ExtScalar(32));
    CHECK(jout.eval_exact(vals, set) == ExtScalar(144));

    for (int v : {VT1, VT2, VT3}) vals[(std::size_t)v] = ExtScalar(1);
    CHECK(jin.eval_exact(vals, set) == ExtScalar(28812));
    CHECK(jout.eval_exact(vals, set) == ExtScalar(-230496));

    CHECK(joint_poly_eval(JointKind::input, {0, 0, 0}) == 32.0);
    CHECK(joint_poly_eval(JointKind::output, {0, 0, 0}) == 144.0);
}

TEST_CASE("joint input surface carries the limb in the third slot") {
    // Exact limb-1-singular configuration: the pose (-1, 0, 0) with the
    // double-root input t1 = 1; limbs 2 and 3 then solve t^2 + 5t + 1 = 0.
    // The surface holds the triple whose THIRD slot is the singular limb's
    // input (it is symmetric in the first two), so (t2, t3, 1) lies on it
    // while the untransported (1, t2, t3) does not.
    const IkSolution sol = ik(Design::pars(), {mpq_class(-1), mpq_class(0), mpq_class(0)});
    REQUIRE(sol.limb[1].roots.size() == 2);
    REQUIRE(sol.limb[2].roots.size() == 2);
    for (double t2 : sol.limb[1].roots)
        for (double t3 : sol.limb[2].roots) {
            const std::array<double, 3> moved{t2, t3, 1.0};
            const std::array<double, 3> fixed{1.0, t2, t3};
            const double r_moved = std::fabs(joint_poly_eval(JointKind::input, moved)) /
                                   joint_poly_scale(JointKind::input, moved);
            const double r_fixed = std::fabs(joint_poly_eval(JointKind::input, fixed)) /
                                   joint_poly_scale(JointKind::input, fixed);
            CHECK(r_moved <= 1e-12);
            CHECK(r_fixed >= 1e-3);
        }
}

TEST_CASE("constructed singular joint triples vanish on the printed surfaces") {
    const auto in_samples = sample_input_singular_inputs(Design::pars(), 20);
    REQUIRE(in_samples.size() == 20);
    for (const auto& t : in_samples)
        CHECK(std::fabs(joint_poly_eval(JointKind::input, t)) /
                  joint_poly_scale(JointKind::input, t) <=
              1e-6);

    const auto out_samples = sample_output_singular_inputs(Design::pars(), 20);
    REQUIRE(out_samples.size() == 20);
    for (const auto& t : out_samples)
        CHECK(std::fabs(joint_poly_eval(JointKind::output, t)) /
                  joint_poly_scale(JointKind::output, t) <=
              1e-6);
}

TEST_CASE("output eliminant vanishes exactly on the self-motion circle") {
    const MPoly elim = output_eliminant(Design::pars());
    REQUIRE_FALSE(elim.is_zero());
    // Rational points of y1² + y2² = 8, y3 = 0.
    CHECK(exact_at(elim, ExtScalar(2), ExtScalar(2), ExtScalar(0)).is_zero());
    CHECK(exact_at(elim, ExtScalar(-2), ExtScalar(2), ExtScalar(0)).is_zero());
    CHECK(exact_at(elim, ExtScalar(mpq_class(14, 5)), ExtScalar(mpq_class(2, 5)), ExtScalar(0))
              .is_zero());
    // Off the circle it is a fixed (content-normalized) nonzero integer.
    CHECK(exact_at(elim, ExtScalar(1), ExtScalar(1), ExtScalar(0)) ==
          ExtScalar(mpq_class("190185257316768546816")));
}

TEST_CASE("self motion of the bundled designs") {
    const SelfMotion a = self_motion(Design::pars());
    CHECK(a.exists);
    CHECK(a.radius_sq == mpq_class(8));
    CHECK(a.inputs_complex);  // a1² < (r0−r1)²
    CHECK_FALSE(a.r0_equals_r1);

    const SelfMotion b = self_motion(Design::pars2());
    CHECK(b.exists);
    CHECK(b.radius_sq == mpq_class(7, 4));
    CHECK_FALSE(b.inputs_complex);
    CHECK(b.inputs_rational);
    CHECK(b.fixed_inputs_exact[0] == mpq_class(-2));
    CHECK(b.fixed_inputs_exact[1] == mpq_class(-1, 2));

    // r0 == r1 degenerates the fixed-input equation to t = 0.
    const SelfMotion c = self_motion(Design{mpq_class(3), mpq_class(5), mpq_class(7), mpq_class(7)});
    CHECK(c.exists);
    CHECK(c.r0_equals_r1);
    CHECK(c.radius_sq == mpq_class(4));
    CHECK(c.fixed_inputs_exact[0] == 0);
}

TEST_CASE("fixed self-motion inputs solve every limb equation on the circle") {
    const auto wt = translational_system(Design::pars2());
    const double r = std::sqrt(7.0) / 2;
    for (int k = 0; k < 12; ++k) {
        const double th = 2 * std::numbers::pi * k / 12;
        for (double tv : {-0.5, -2.0})
            for (const MPoly& eq : wt)
                CHECK(scaled_at(eq, {r * std::cos(th), r * std::sin(th), 0}, {tv, tv, tv}) <=
                      1e-9);
    }
}

TEST_CASE("classify: torus configuration, regular configuration, self motion") {
    const Design d = Design::pars();
    // Limb-1 torus point with the double-root input: input flag on limb 1.
    const IkSolution sol = ik(d, {mpq_class(-1), mpq_class(0), mpq_class(0)});
    const SingularityReport rep =
        classify(d, {-1, 0, 0}, {1.0, sol.limb[1].roots[0], sol.limb[2].roots[1]});
    CHECK(rep.input_singular[0]);
    CHECK_FALSE(rep.input_singular[1]);
    CHECK_FALSE(rep.input_singular[2]);
    CHECK(rep.p_residual[0] <= 1e-14);
    // This highly symmetric configuration also annihilates both det factors.
    CHECK(rep.output_singular);
    CHECK_FALSE(rep.self_motion);

    // Fully regular configuration.
    const IkSolution reg = ik(d, {mpq_class(0), mpq_class(0), mpq_class(2)});
    const SingularityReport rep2 =
        classify(d, {0, 0, 2}, {reg.limb[0].roots[0], reg.limb[1].roots[0], reg.limb[2].roots[0]});
    for (int i = 0; i < 3; ++i) CHECK_FALSE(rep2.input_singular[i]);
    CHECK_FALSE(rep2.output_singular);
    CHECK_FALSE(rep2.self_motion);

    // Self-motion circle of pars2 with the fixed input locked.
    const double r = std::sqrt(7.0) / 2, th = 0.448798950512827;
    const SingularityReport rep3 =
        classify(Design::pars2(), {r * std::cos(th), r * std::sin(th), 0}, {-0.5, -0.5, -0.5});
    CHECK(rep3.self_motion);
    CHECK(rep3.output_singular);
    CHECK(rep3.s_small_residual <= 1e-12);

    // Off-variety configurations are rejected.
    CHECK_THROWS_AS(classify(d, {0, 0, 2}, {0, 0, 0}), std::domain_error);
}

TEST_CASE("symbolic Jacobian matches central differences") {
    const ConstraintSystem cs = ConstraintSystem::for_design(Design::pars());
    const JacobianPair jac = jacobian(cs);

    std::array<double, kNumVars> pt{};
    Design::pars().fill(pt);
    const double coords[11] = {0.9, 0.1, -0.2, 0.3, 0.15, -0.4, 0.7, 1.2, 0.4, -0.7, 1.1};
    for (int i = 0; i < 8; ++i) pt[VX0 + i] = coords[i];
    pt[VT1] = coords[8];
    pt[VT2] = coords[9];
    pt[VT3] = coords[10];

    const double h = 1e-6;
    for (int row = 0; row < 8; ++row) {
        const MPoly& g = cs.g[(std::size_t)row];
        for (int col = 0; col < 11; ++col) {
            const int var = col < 8 ? VX0 + col : VT1 + (col - 8);
            std::array<double, kNumVars> hi = pt, lo = pt;
            hi[(std::size_t)var] += h;
            lo[(std::size_t)var] -= h;
            const double fd = (g.eval_double(hi) - g.eval_double(lo)) / (2 * h);
            const MPoly& entry = col < 8 ? jac.j_o.at(row, col) : jac.j_i.at(row, col - 8);
            const double sym = entry.eval_double(pt);
            CHECK(sym == doctest::Approx(fd).epsilon(1e-6));
        }
    }
}
