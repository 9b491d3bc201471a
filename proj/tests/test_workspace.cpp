#include <doctest.h>

#include <cmath>
#include <sstream>

#include "ruukin/constraints.hpp"
#include "ruukin/design.hpp"
#include "ruukin/workspace.hpp"

using namespace ruukin;

namespace {

const WorkspaceSystem& ws_pars() {
    static const WorkspaceSystem ws = eliminate_inputs(ConstraintSystem::for_design(Design::pars()));
    return ws;
}

const WorkspaceSystem& ws_pars2() {
    static const WorkspaceSystem ws =
        eliminate_inputs(ConstraintSystem::for_design(Design::pars2()));
    return ws;
}

}  // namespace

TEST_CASE("eliminated equations are free of the inputs") {
    const WorkspaceSystem& ws = ws_pars();
    for (const MPoly* g : {&ws.g12, &ws.g34, &ws.g56}) {
        CHECK(!g->is_zero());
        for (int v : {VT1, VT2, VT3}) CHECK(!g->uses(v));
    }
}

TEST_CASE("workspace equations vanish identically on both mode charts") {
    for (const WorkspaceSystem* ws : {&ws_pars(), &ws_pars2()}) {
        for (const MPoly* g : {&ws->g12, &ws->g34, &ws->g56}) {
            CHECK(g->substitute(translational_chart()).is_zero());
            CHECK(g->substitute(twisted_chart()).is_zero());
        }
    }
}

TEST_CASE("workspace equations do not vanish off the mode varieties") {
    // A generic rigid displacement (quarter turn about x plus translation)
    // must violate at least one eliminated equation.
    Pose p;
    p.c = {0.6, 0.8, 0.0, 0.0, -0.4, 0.3, 0.5, 0.1};
    const MembershipReport rep = membership(ws_pars(), p, 1e-9);
    CHECK(!rep.in_workspace);
}

TEST_CASE("membership is projective") {
    const CurvePoint cp = transition_curve_point(0.25);
    REQUIRE(cp.valid);
    Pose scaled = cp.pose;
    for (auto& c : scaled.c) c *= -17.5;
    const MembershipReport a = membership(ws_pars2(), cp.pose, 1e-6);
    const MembershipReport b = membership(ws_pars2(), scaled, 1e-6);
    CHECK(a.in_workspace);
    CHECK(b.in_workspace);
    CHECK_THROWS(membership(ws_pars2(), Pose{}, 1e-6));
}

TEST_CASE("mode classification on chart points") {
    Pose o1 = Pose::translational(0.3, -1.2, 2.0);
    CHECK(mode_of(o1) == OperationMode::O1);
    Pose o2;
    o2.c = {0, 0, 0, 1, 0.5, -0.25, 1.0, 0};
    CHECK(mode_of(o2) == OperationMode::O2);
    Pose generic;
    generic.c = {0.5, 0.5, 0.5, 0.5, 0, 0, 0, 0};
    CHECK(mode_of(generic) == OperationMode::Other);
    // scaling invariance
    for (auto& c : o1.c) c *= 40;
    CHECK(mode_of(o1) == OperationMode::O1);
}

TEST_CASE("transition curve anchor point and parameter domain") {
    const CurvePoint c0 = transition_curve_point(0.0);
    REQUIRE(c0.valid);
    CHECK(c0.pose.c[0] == 1.0);
    for (int i = 1; i < 7; ++i) CHECK(c0.pose.c[i] == 0.0);
    CHECK(c0.pose.c[7] == doctest::Approx(3.5).epsilon(1e-15));
    CHECK(c0.h == doctest::Approx(14.0).epsilon(1e-15));
    CHECK_THROWS_AS(transition_curve_point(1.5), std::domain_error);
    CHECK_THROWS_AS(transition_curve_point(0.0, 5), std::invalid_argument);
}

TEST_CASE("transition curve stays inside the pars2 workspace") {
    for (int k = 0; k < 50; ++k) {
        const double t = -1.0 + 2.0 * k / 49;
        const CurvePoint cp = transition_curve_point(t);
        REQUIRE(cp.valid);
        CHECK(cp.pose.study_residual() == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(membership(ws_pars2(), cp.pose, 1e-6).in_workspace);
    }
}

TEST_CASE("rotated transition curves stay inside the pars2 workspace") {
    for (int rot : {1, 2}) {
        for (int k = 0; k <= 10; ++k) {
            const double t = -1.0 + 2.0 * k / 10;
            const CurvePoint cp = transition_curve_point(t, rot);
            REQUIRE(cp.valid);
            CHECK(membership(ws_pars2(), cp.pose, 1e-6).in_workspace);
        }
        // the y-part is invariant under the platform symmetry
        const CurvePoint a = transition_curve_point(0.4, 0);
        const CurvePoint b = transition_curve_point(0.4, rot);
        for (int c = 4; c < 8; ++c) CHECK(a.pose.c[c] == doctest::Approx(b.pose.c[c]));
        CHECK(std::fabs(b.pose.c[1]) > 1e-3);  // rotation moved the x-part
    }
}

TEST_CASE("curve meets the translational mode only at t = 0") {
    for (int k = -20; k <= 20; ++k) {
        const double t = k * 0.05;
        const OperationMode m = mode_of(transition_curve_point(t).pose);
        if (k == 0)
            CHECK(m == OperationMode::O1);
        else
            CHECK(m == OperationMode::Other);
    }
}

TEST_CASE("workspace cache round-trips and rejects mismatches") {
    const std::string path = "ws_cache_test.dat";
    workspace_cache_save(path, Design::pars(), ws_pars());
    const auto loaded = workspace_cache_load(path, Design::pars());
    REQUIRE(loaded.has_value());
    CHECK(loaded->g12 == ws_pars().g12);
    CHECK(loaded->g34 == ws_pars().g34);
    CHECK(loaded->g56 == ws_pars().g56);
    CHECK(!workspace_cache_load(path, Design::pars2()).has_value());
    CHECK(!workspace_cache_load("does_not_exist.dat", Design::pars()).has_value());
    // workspace_for_design writes the cache when absent and reuses it after
    const WorkspaceSystem w1 = workspace_for_design(Design::pars(), "ws_cache_test2.dat");
    const WorkspaceSystem w2 = workspace_for_design(Design::pars(), "ws_cache_test2.dat");
    CHECK(w1.g12 == w2.g12);
    std::remove(path.c_str());
    std::remove("ws_cache_test2.dat");
}
