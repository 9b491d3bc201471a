#pragma once

#include <string>
#include <vector>

#include "ruukin/design.hpp"

namespace ruukin {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Runs the full identity/property suite against one design: symbolic
// reproduction of the translational system, operation-mode vanishing of the
// eliminated workspace equations, Jacobian factorizations, torus and
// self-motion invariants, joint-space polynomial sampling, eliminant circle
// checks, transition-curve checks (anchored to the bundled design pars2), and
// kinematic round trips. Design-specific checks run on `d`; the joint-space
// catalogs are printed for the bundled design pars, so a different design is
// expected to fail the sampling checks.
std::vector<CheckResult> verify_suite(const Design& d);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace ruukin
