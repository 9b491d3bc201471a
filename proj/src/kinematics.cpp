#include "ruukin/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ruukin/catalog.hpp"
#include "ruukin/constraints.hpp"

namespace ruukin {
namespace {

constexpr double kDoubleRootWindow = 1e-12;
constexpr double kParallelWindow = 1e-10;

// Exact quadratic coefficients a t² + b t + c of one limb equation at an
// exact platform position.
struct LimbQuadratic {
    ExtScalar a, b, c;
};

LimbQuadratic limb_quadratic(const Design& d, const std::array<mpq_class, 3>& y, int limb) {
    std::map<int, MPoly> sub = d.substitution();
    sub[VY1] = MPoly::constant(ExtScalar(y[0]));
    sub[VY2] = MPoly::constant(ExtScalar(y[1]));
    sub[VY3] = MPoly::constant(ExtScalar(y[2]));
    const MPoly p = catalog::translational(limb).substitute(sub);
    const auto coeffs = p.coeffs_in(input_var(limb));
    LimbQuadratic q;
    auto take = [&](std::size_t k) {
        if (k >= coeffs.size()) return ExtScalar(0);
        return coeffs[k].constant_term();
    };
    q.c = take(0);
    q.b = take(1);
    q.a = take(2);
    return q;
}

IkLimb solve_limb(const LimbQuadratic& q) {
    IkLimb out;
    if (q.a.is_zero()) {
        if (q.b.is_zero()) {
            out.identically_zero = q.c.is_zero();
            return out;  // no roots either way; constant nonzero is unreachable
        }
        out.linear = true;
        out.roots.push_back((-q.c * q.b.inverse()).to_double());
        return out;
    }
    const ExtScalar disc = q.b * q.b - q.a * q.c * ExtScalar(4);
    const double a = q.a.to_double();
    const double b = q.b.to_double();
    const double c = q.c.to_double();
    const double disc_d = disc.to_double();
    const double scale = std::max({b * b, std::fabs(4.0 * a * c), 1e-300});
    if (disc.is_zero() || std::fabs(disc_d) < kDoubleRootWindow * scale) {
        out.double_root = true;
        out.roots.push_back(-b / (2.0 * a));
        return out;
    }
    if (disc_d < 0) return out;  // exact negative discriminant: no real inputs
    const double sq = std::sqrt(disc_d);
    if (b == 0) {
        out.roots = {-sq / (2.0 * a), sq / (2.0 * a)};
    } else {
        const double qq = -(b + std::copysign(sq, b)) / 2.0;
        out.roots = {qq / a, c / qq};
    }
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

}  // namespace

std::size_t IkSolution::combinations() const {
    std::size_t n = 1;
    for (const IkLimb& l : limb) n *= l.roots.size();
    return n;
}

IkSolution ik(const Design& d, const std::array<mpq_class, 3>& y) {
    IkSolution s;
    for (int limb = 1; limb <= 3; ++limb)
        s.limb[limb - 1] = solve_limb(limb_quadratic(d, y, limb));
    return s;
}

namespace {

// One limb equation at fixed input, as a sphere s·(y·y) + l·y + c = 0.
struct Sphere {
    double s = 0;
    std::array<double, 3> l{};
    double c = 0;

    std::array<double, 3> center() const {
        return {-l[0] / (2 * s), -l[1] / (2 * s), -l[2] / (2 * s)};
    }
    double radius_sq() const {
        const auto m = center();
        return m[0] * m[0] + m[1] * m[1] + m[2] * m[2] - c / s;
    }
};

double dot(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

std::array<double, 3> cross(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double norm(const std::array<double, 3>& a) { return std::sqrt(dot(a, a)); }

Sphere sphere_at(const MPoly& limb_eq, int tvar, double t) {
    Sphere sp;
    double s_diag[3] = {0, 0, 0};
    for (const auto& [ex, coeff] : limb_eq.terms()) {
        double val = coeff.to_double() * std::pow(t, ex.e[tvar]);
        int ey[3] = {ex.e[VY1], ex.e[VY2], ex.e[VY3]};
        const int deg = ey[0] + ey[1] + ey[2];
        if (deg == 0) {
            sp.c += val;
        } else if (deg == 1) {
            for (int k = 0; k < 3; ++k)
                if (ey[k] == 1) sp.l[k] += val;
        } else if (deg == 2 && (ey[0] == 2 || ey[1] == 2 || ey[2] == 2)) {
            for (int k = 0; k < 3; ++k)
                if (ey[k] == 2) s_diag[k] += val;
        } else {
            throw std::logic_error("fk: limb equation is not in sphere form");
        }
    }
    sp.s = s_diag[0];
    return sp;
}

void sort_points(std::vector<std::array<double, 3>>& pts) {
    std::sort(pts.begin(), pts.end());
}

}  // namespace

FkSolution fk(const Design& d, const std::array<double, 3>& t) {
    const auto wt = translational_system(d);
    Sphere sp[3];
    for (int limb = 0; limb < 3; ++limb)
        sp[limb] = sphere_at(wt[limb], input_var(limb + 1), t[limb]);

    // Normalized sphere differences: planes n·y + dd = 0. A plane can die in
    // two ways: vacuously (its two spheres coincide) or contradictorily (same
    // quadratic part, different constant).
    std::array<double, 3> n[2];
    double dd[2];
    bool live[2];
    bool clash[2];
    for (int k = 0; k < 2; ++k) {
        double nmag = 1.0;
        for (int j = 0; j < 3; ++j) {
            n[k][j] = sp[0].l[j] / sp[0].s - sp[k + 1].l[j] / sp[k + 1].s;
            nmag = std::max({nmag, std::fabs(sp[0].l[j] / sp[0].s),
                             std::fabs(sp[k + 1].l[j] / sp[k + 1].s)});
        }
        dd[k] = sp[0].c / sp[0].s - sp[k + 1].c / sp[k + 1].s;
        const double dmag = std::max(
            {1.0, std::fabs(sp[0].c / sp[0].s), std::fabs(sp[k + 1].c / sp[k + 1].s)});
        live[k] = norm(n[k]) > kParallelWindow * nmag;
        clash[k] = !live[k] && std::fabs(dd[k]) > kParallelWindow * dmag;
    }

    FkSolution out;
    if (clash[0] || clash[1]) {
        out.tag = FkSolution::Tag::inconsistent;
        return out;
    }
    if (!live[0] && !live[1]) {
        // All three spheres coincide: every point of the common sphere solves
        // the system (the two-parameter self-motion at a fixed input).
        const double r_sq = sp[0].radius_sq();
        if (r_sq < 0) {
            out.tag = FkSolution::Tag::inconsistent;
            return out;
        }
        out.tag = FkSolution::Tag::self_motion_circle;
        out.full_sphere = true;
        out.circle_center = sp[0].center();
        out.circle_radius_sq = r_sq;
        return out;
    }
    if (live[0] != live[1]) {
        // Two spheres coincide; the one remaining plane cuts the first sphere
        // in a circle, touches it in a point, or misses it.
        const auto& nn = live[0] ? n[0] : n[1];
        const double d0 = live[0] ? dd[0] : dd[1];
        const double nnn = norm(nn);
        const auto m = sp[0].center();
        const double r_sq = sp[0].radius_sq();
        const double dist = (dot(nn, m) + d0) / nnn;
        const double circ_sq = r_sq - dist * dist;
        const double win = kParallelWindow * std::max(std::fabs(r_sq), 1.0);
        if (circ_sq < -win) {
            out.tag = FkSolution::Tag::inconsistent;
            return out;
        }
        std::array<double, 3> foot{};
        for (int j = 0; j < 3; ++j) foot[j] = m[j] - dist * nn[j] / nnn;
        if (circ_sq <= win) {
            out.points.push_back(foot);
            return out;
        }
        out.tag = FkSolution::Tag::self_motion_circle;
        out.circle_center = foot;
        out.circle_radius_sq = circ_sq;
        return out;
    }

    const auto dir = cross(n[0], n[1]);
    const double n0n = norm(n[0]), n1n = norm(n[1]);
    if (norm(dir) <= kParallelWindow * std::max(n0n * n1n, 1e-300)) {
        // Parallel planes: either a common plane cutting the first sphere in a
        // circle (sphere centers collinear, the self-motion situation) or an
        // empty intersection.
        const double lambda = dot(n[0], n[1]) / (n0n * n0n);
        if (std::fabs(dd[1] - lambda * dd[0]) >
            kParallelWindow * std::max({std::fabs(dd[0]), std::fabs(dd[1]), 1.0})) {
            out.tag = FkSolution::Tag::inconsistent;
            return out;
        }
        const auto m = sp[0].center();
        const double r_sq = sp[0].radius_sq();
        const double dist = (dot(n[0], m) + dd[0]) / n0n;
        const double circ_sq = r_sq - dist * dist;
        if (circ_sq < -kParallelWindow * std::max(std::fabs(r_sq), 1.0)) {
            out.tag = FkSolution::Tag::inconsistent;
            return out;
        }
        out.tag = FkSolution::Tag::self_motion_circle;
        for (int j = 0; j < 3; ++j) out.circle_center[j] = m[j] - dist * n[0][j] / n0n;
        out.circle_radius_sq = std::max(circ_sq, 0.0);
        return out;
    }

    // Particular point: zero the coordinate where the line direction is
    // largest and solve the remaining 2×2 system.
    int drop = 0;
    for (int k = 1; k < 3; ++k)
        if (std::fabs(dir[k]) > std::fabs(dir[drop])) drop = k;
    const int i1 = (drop + 1) % 3, i2 = (drop + 2) % 3;
    const double det = n[0][i1] * n[1][i2] - n[0][i2] * n[1][i1];
    std::array<double, 3> y0{};
    y0[i1] = (-dd[0] * n[1][i2] + dd[1] * n[0][i2]) / det;
    y0[i2] = (-dd[1] * n[0][i1] + dd[0] * n[1][i1]) / det;

    // Intersect the line y0 + u·dir with the first sphere.
    const double qa = sp[0].s * dot(dir, dir);
    const double qb = 2.0 * sp[0].s * dot(y0, dir) + dot(sp[0].l, dir);
    const double qc = sp[0].s * dot(y0, y0) + dot(sp[0].l, y0) + sp[0].c;
    const double disc = qb * qb - 4.0 * qa * qc;
    const double scale = std::max({qb * qb, std::fabs(4.0 * qa * qc), 1e-300});
    if (std::fabs(disc) < kDoubleRootWindow * scale) {
        const double u = -qb / (2.0 * qa);
        out.points.push_back({y0[0] + u * dir[0], y0[1] + u * dir[1], y0[2] + u * dir[2]});
    } else if (disc > 0) {
        const double sq = std::sqrt(disc);
        for (double u : {(-qb - sq) / (2.0 * qa), (-qb + sq) / (2.0 * qa)})
            out.points.push_back({y0[0] + u * dir[0], y0[1] + u * dir[1], y0[2] + u * dir[2]});
    }
    sort_points(out.points);
    return out;
}

RoundtripReport roundtrip_check(const Design& d, const std::array<mpq_class, 3>& y, double tol) {
    RoundtripReport rep;
    const IkSolution s = ik(d, y);
    rep.combinations = s.combinations();
    if (rep.combinations == 0) {
        rep.ik_empty = true;
        return rep;
    }
    const std::array<double, 3> yd = {y[0].get_d(), y[1].get_d(), y[2].get_d()};
    for (double t1 : s.limb[0].roots)
        for (double t2 : s.limb[1].roots)
            for (double t3 : s.limb[2].roots) {
                const FkSolution f = fk(d, {t1, t2, t3});
                double best = std::numeric_limits<double>::infinity();
                std::size_t best_idx = f.points.size();
                for (std::size_t i = 0; i < f.points.size(); ++i) {
                    const auto& p = f.points[i];
                    const double err = std::sqrt((p[0] - yd[0]) * (p[0] - yd[0]) +
                                                 (p[1] - yd[1]) * (p[1] - yd[1]) +
                                                 (p[2] - yd[2]) * (p[2] - yd[2]));
                    if (err < best) {
                        best = err;
                        best_idx = i;
                    }
                }
                if (best_idx < f.points.size() && best <= tol) {
                    ++rep.closed;
                    rep.max_error = std::max(rep.max_error, best);
                    for (std::size_t i = 0; i < f.points.size(); ++i)
                        if (i != best_idx) rep.spurious.push_back(f.points[i]);
                }
            }
    rep.all_closed = rep.closed == rep.combinations;
    return rep;
}

}  // namespace ruukin
