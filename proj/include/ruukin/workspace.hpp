#pragma once

#include <array>
#include <optional>
#include <string>

#include "ruukin/constraints.hpp"
#include "ruukin/design.hpp"
#include "ruukin/pose.hpp"

namespace ruukin {

// Input-parameter-free description of the workspace: one eliminant per limb
// (the pairwise resultants of the limb equations with respect to their own
// input), together with the Study quadric and normalization referenced from
// the constraint system.
struct WorkspaceSystem {
    MPoly g12, g34, g56;
};

// Eliminates t1, t2, t3 from the limb equation pairs by Sylvester resultants;
// results are content-normalized. Throws if a resultant degenerates (both
// arguments input-free).
WorkspaceSystem eliminate_inputs(const ConstraintSystem& cs);

struct MembershipReport {
    std::array<double, 3> residuals{};  // raw values of g12, g34, g56
    std::array<double, 3> scales{};     // coefficient scales at the pose
    bool in_workspace = false;
};

// Scaled-residual membership test at a pose (projectively normalized first).
// Throws on the zero pose.
MembershipReport membership(const WorkspaceSystem& ws, const Pose& pose, double tol = 1e-9);

enum class OperationMode { O1, O2, Other };

const char* mode_name(OperationMode m);

// Classifies a pose against the two linear operation-mode three-spaces
// (translational: x0 ≠ 0, x1 = x2 = x3 = y0 = 0; twisted translational:
// x3 ≠ 0, x0 = x1 = x2 = y3 = 0) after projective normalization.
OperationMode mode_of(const Pose& pose, double tol = 1e-9);

// One point of the mode-transition curve for the bundled design pars2
// (a1=5, a3=4, r0=11, r1=7): pose [1, 0, t, 0, 0, 0, 0, h/4] with the nested
// radical h(t). `rotation` (0, 1, 2) applies the ±120° platform symmetry
// about the z-axis. Throws for t outside [−1, 1]; a negative inner radicand
// is reported through `valid`, never clamped.
struct CurvePoint {
    double t = 0;
    double h = 0;
    bool valid = false;
    Pose pose;
};

CurvePoint transition_curve_point(double t, int rotation = 0);

// Deterministic disk cache for eliminated workspace systems (sectioned
// polynomial dumps; the header records the design and tool version, and a
// mismatch invalidates the cache).
void workspace_cache_save(const std::string& path, const Design& d, const WorkspaceSystem& ws);
std::optional<WorkspaceSystem> workspace_cache_load(const std::string& path, const Design& d);

// Cached elimination for a design: loads `cache_path` when valid, otherwise
// eliminates and (when a path is given) saves.
WorkspaceSystem workspace_for_design(const Design& d, const std::string& cache_path = "");

}  // namespace ruukin
