#include "ruukin/constraints.hpp"

#include <stdexcept>

#include "ruukin/catalog.hpp"

namespace ruukin {
namespace {

constexpr int kInputVars[3] = {VT1, VT2, VT3};

void require_limb(int limb) {
    if (limb < 1 || limb > 3) throw std::invalid_argument("constraints: limb must be 1, 2 or 3");
}

// Rotation about the base z-axis by 0°, +120°, −120° for limbs 1..3.
DualQuaternion limb_rotation(int limb) {
    const ExtScalar half(mpq_class(1, 2));
    const ExtScalar sq3_half = ExtScalar::sqrt3() * half;
    switch (limb) {
        case 1: return DualQuaternion::rotation_z(ExtScalar(1), ExtScalar(0));
        case 2: return DualQuaternion::rotation_z(half, sq3_half);
        default: return DualQuaternion::rotation_z(half, -sq3_half);
    }
}

// Axis alignment of the canonical limb: the rotation (1 − i − j − k)/2,
// a −120° turn about (1,1,1)/√3 mapping x̂ → ẑ, ŷ → x̂, ẑ → ŷ.
DualQuaternion axis_alignment() {
    const ExtScalar half(mpq_class(1, 2));
    DualQuaternion q;
    q.p = Quaternion::from_scalars(half, -half, -half, -half);
    return q;
}

}  // namespace

LimbEquations canonical_constraints() {
    return {catalog::canonical_odd(), catalog::canonical_even()};
}

LimbFrames limb_frames(int limb) {
    require_limb(limb);
    const DualQuaternion rz = limb_rotation(limb);
    const DualQuaternion q = axis_alignment();
    const MPoly zero = MPoly::zero();
    const DualQuaternion to_base =
        DualQuaternion::translation_poly(-MPoly::variable(VR0), zero, zero);
    const DualQuaternion to_platform =
        DualQuaternion::translation_poly(-MPoly::variable(VR1), zero, zero);
    return {rz * to_base * q, rz * to_platform * q};
}

LimbEquations limb_constraints(int limb) {
    require_limb(limb);
    const LimbFrames frames = limb_frames(limb);
    const DualQuaternion x = DualQuaternion::generic_study();
    const DualQuaternion image = frames.base.unit_inverse() * x * frames.platform;

    std::map<int, MPoly> sub;
    for (int i = 0; i < 4; ++i) {
        sub[VX0 + i] = image.p.c[i];
        sub[VY0 + i] = image.q.c[i];
    }
    if (limb != 1) sub[VT1] = MPoly::variable(kInputVars[limb - 1]);

    LimbEquations eq = canonical_constraints();
    eq.odd = eq.odd.substitute(sub).content_normalized();
    eq.even = eq.even.substitute(sub).content_normalized();
    return eq;
}

const ConstraintSystem& ConstraintSystem::symbolic() {
    static const ConstraintSystem cs = [] {
        ConstraintSystem s;
        for (int limb = 1; limb <= 3; ++limb) {
            LimbEquations eq = limb_constraints(limb);
            s.g[2 * (limb - 1)] = std::move(eq.odd);
            s.g[2 * (limb - 1) + 1] = std::move(eq.even);
        }
        MPoly study;
        for (int i = 0; i < 4; ++i)
            study += MPoly::variable(VX0 + i) * MPoly::variable(VY0 + i);
        s.g[6] = study;
        MPoly norm = MPoly::constant(ExtScalar(-1));
        for (int i = 0; i < 4; ++i)
            norm += MPoly::variable(VX0 + i) * MPoly::variable(VX0 + i);
        s.g[7] = norm;
        return s;
    }();
    return cs;
}

ConstraintSystem ConstraintSystem::for_design(const Design& d) {
    const ConstraintSystem& base = symbolic();
    ConstraintSystem out;
    out.numeric_design = true;
    const auto sub = d.substitution();
    for (std::size_t i = 0; i < base.g.size(); ++i)
        out.g[i] = base.g[i].substitute(sub).content_normalized();
    return out;
}

std::map<int, MPoly> translational_chart() {
    return {{VX0, MPoly::constant(ExtScalar(1))},
            {VX1, MPoly::zero()},
            {VX2, MPoly::zero()},
            {VX3, MPoly::zero()},
            {VY0, MPoly::zero()}};
}

std::map<int, MPoly> twisted_chart() {
    return {{VX3, MPoly::constant(ExtScalar(1))},
            {VX0, MPoly::zero()},
            {VX1, MPoly::zero()},
            {VX2, MPoly::zero()},
            {VY3, MPoly::zero()}};
}

std::array<MPoly, 3> translational_system() {
    static const std::array<MPoly, 3> wt = [] {
        const ConstraintSystem& cs = ConstraintSystem::symbolic();
        const auto chart = translational_chart();
        std::array<MPoly, 3> out;
        for (int limb = 1; limb <= 3; ++limb)
            out[limb - 1] = cs.g[2 * (limb - 1) + 1].substitute(chart).content_normalized();
        return out;
    }();
    return wt;
}

std::array<MPoly, 3> translational_system(const Design& d) {
    std::array<MPoly, 3> wt = translational_system();
    const auto sub = d.substitution();
    for (MPoly& p : wt) p = p.substitute(sub).content_normalized();
    return wt;
}

int input_var(int limb) {
    require_limb(limb);
    return kInputVars[limb - 1];
}

}  // namespace ruukin
