#include "ruukin/catalog.hpp"

#include <stdexcept>

namespace ruukin {
namespace catalog {
namespace {

#include "catalog_data.inc"

MPoly parsed(const char* text) { return MPoly::parse(text); }

void require_limb(int limb) {
    if (limb < 1 || limb > 3) throw std::invalid_argument("catalog: limb must be 1, 2 or 3");
}

}  // namespace

const MPoly& canonical_odd() {
    static const MPoly p = parsed(kCanonicalOdd);
    return p;
}

const MPoly& canonical_even() {
    static const MPoly p = parsed(kCanonicalEven);
    return p;
}

const MPoly& translational(int limb) {
    require_limb(limb);
    static const MPoly p[3] = {parsed(kTranslational1), parsed(kTranslational2),
                               parsed(kTranslational3)};
    return p[limb - 1];
}

const MPoly& input_factor(int limb) {
    require_limb(limb);
    static const MPoly p[3] = {parsed(kInputFactor1), parsed(kInputFactor2),
                               parsed(kInputFactor3)};
    return p[limb - 1];
}

const MPoly& torus_limb1() {
    static const MPoly p = parsed(kTorusLimb1);
    return p;
}

const MPoly& torus_lead_coeff() {
    static const MPoly p = parsed(kTorusLeadCoeff);
    return p;
}

const MPoly& joint_input_deg12() {
    static const MPoly p = parsed(kJointInput12);
    return p;
}

const MPoly& joint_output_deg12() {
    static const MPoly p = parsed(kJointOutput12);
    return p;
}

const MPoly& output_factor_small() {
    static const MPoly p = parsed(kOutputFactorSmall);
    return p;
}

const MPoly& output_factor_large() {
    static const MPoly p = parsed(kOutputFactorLarge);
    return p;
}

}  // namespace catalog
}  // namespace ruukin
