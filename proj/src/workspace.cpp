#include "ruukin/workspace.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "ruukin/resultant.hpp"
#include "ruukin/version.hpp"

namespace ruukin {

WorkspaceSystem eliminate_inputs(const ConstraintSystem& cs) {
    WorkspaceSystem ws;
    ws.g12 = resultant(cs.g[0], cs.g[1], VT1);
    ws.g34 = resultant(cs.g[2], cs.g[3], VT2);
    ws.g56 = resultant(cs.g[4], cs.g[5], VT3);
    return ws;
}

MembershipReport membership(const WorkspaceSystem& ws, const Pose& pose, double tol) {
    const double m = pose.max_abs();
    if (m == 0) throw std::invalid_argument("membership: zero pose");
    Pose n = pose;
    for (double& v : n.c) v /= m;

    std::array<double, kNumVars> point{};
    n.fill(point);

    MembershipReport rep;
    const MPoly* eqs[3] = {&ws.g12, &ws.g34, &ws.g56};
    rep.in_workspace = true;
    for (int k = 0; k < 3; ++k) {
        rep.residuals[k] = eqs[k]->eval_double(point);
        rep.scales[k] = eqs[k]->scale_at(point);
        if (rep.scales[k] == 0) rep.scales[k] = 1;
        if (std::fabs(rep.residuals[k]) > tol * rep.scales[k]) rep.in_workspace = false;
    }
    return rep;
}

const char* mode_name(OperationMode m) {
    switch (m) {
        case OperationMode::O1: return "O1";
        case OperationMode::O2: return "O2";
        default: return "other";
    }
}

OperationMode mode_of(const Pose& pose, double tol) {
    const double s = pose.max_abs();
    if (s == 0) throw std::invalid_argument("mode_of: zero pose");
    const double sx = std::max({std::fabs(pose.c[0]), std::fabs(pose.c[1]),
                                std::fabs(pose.c[2]), std::fabs(pose.c[3])});
    // A displacement always has a nonzero rotation part; guard anyway.
    if (sx == 0) return OperationMode::Other;
    const auto small_rot = [&](int i) { return std::fabs(pose.c[i]) <= tol * sx; };
    const auto small_any = [&](int i) { return std::fabs(pose.c[i]) <= tol * s; };
    if (!small_rot(0) && small_rot(1) && small_rot(2) && small_rot(3) && small_any(4))
        return OperationMode::O1;
    if (!small_rot(3) && small_rot(0) && small_rot(1) && small_rot(2) && small_any(7))
        return OperationMode::O2;
    return OperationMode::Other;
}

CurvePoint transition_curve_point(double t, int rotation) {
    if (!(t >= -1.0 && t <= 1.0))
        throw std::domain_error("transition_curve_point: t must lie in [-1, 1]");
    if (rotation < 0 || rotation > 2)
        throw std::invalid_argument("transition_curve_point: rotation must be 0, 1 or 2");

    CurvePoint cp;
    cp.t = t;
    const double t2 = t * t;
    const double s = std::sqrt(25.0 * t2 + 36.0);
    const double num = (-59.0 * t2 * t2 + 212.0 * t2 + 256.0) * s - 600.0 * t2 * t2 * t -
                       864.0 * t2 * t;
    const double den = s * (t2 + 4.0);
    const double radicand = num / den;
    cp.valid = radicand >= 0;
    cp.h = cp.valid ? 18.0 * t + s + std::sqrt(radicand)
                    : std::numeric_limits<double>::quiet_NaN();

    // Base curve [1, 0, t, 0, 0, 0, 0, h/4]; the platform symmetry conjugates
    // the displacement by a ±120° z-rotation, which rotates the (x1, x2)
    // pair and fixes the z-axis translation component.
    double x1 = 0, x2 = t;
    if (rotation == 1) {  // +120°
        x1 = -std::sqrt(3.0) / 2.0 * t;
        x2 = -0.5 * t;
    } else if (rotation == 2) {  // −120°
        x1 = std::sqrt(3.0) / 2.0 * t;
        x2 = -0.5 * t;
    }
    cp.pose.c = {1, x1, x2, 0, 0, 0, 0, cp.h / 4.0};
    return cp;
}

namespace {

std::string design_header(const Design& d) {
    std::ostringstream os;
    os << "# ruukin workspace " << kToolVersion << " | " << d.str();
    return os.str();
}

}  // namespace

void workspace_cache_save(const std::string& path, const Design& d, const WorkspaceSystem& ws) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("workspace cache: cannot write '" + path + "'");
    out << design_header(d) << "\n";
    out << "[g12]\n";
    ws.g12.dump(out);
    out << "[g34]\n";
    ws.g34.dump(out);
    out << "[g56]\n";
    ws.g56.dump(out);
}

std::optional<WorkspaceSystem> workspace_cache_load(const std::string& path, const Design& d) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::string header;
    if (!std::getline(in, header) || header != design_header(d)) return std::nullopt;
    WorkspaceSystem ws;
    std::string section;
    MPoly* slots[3] = {&ws.g12, &ws.g34, &ws.g56};
    for (auto* slot : slots) {
        if (!std::getline(in, section)) return std::nullopt;
        if (section != "[g12]" && section != "[g34]" && section != "[g56]") return std::nullopt;
        try {
            *slot = MPoly::load(in);
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    return ws;
}

WorkspaceSystem workspace_for_design(const Design& d, const std::string& cache_path) {
    if (!cache_path.empty()) {
        if (auto cached = workspace_cache_load(cache_path, d)) return *cached;
    }
    WorkspaceSystem ws = eliminate_inputs(ConstraintSystem::for_design(d));
    if (!cache_path.empty()) workspace_cache_save(cache_path, d, ws);
    return ws;
}

}  // namespace ruukin
