#pragma once

#include <array>

#include "ruukin/mpoly.hpp"

namespace ruukin {

// Quaternion with polynomial entries (w + x i + y j + z k). Polynomial entries
// let the same type serve both exact numeric displacements and the symbolic
// coordinate transforms applied to the constraint equations.
struct Quaternion {
    std::array<MPoly, 4> c{};  // w, i, j, k

    static Quaternion zero() { return {}; }
    static Quaternion one();
    static Quaternion from_scalars(const ExtScalar& w, const ExtScalar& x,
                                   const ExtScalar& y, const ExtScalar& z);

    Quaternion conjugate() const;
    friend Quaternion operator+(const Quaternion& a, const Quaternion& b);
    friend Quaternion operator-(const Quaternion& a, const Quaternion& b);
    friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
    Quaternion scaled(const ExtScalar& s) const;
    friend bool operator==(const Quaternion& a, const Quaternion& b) { return a.c == b.c; }
};

// Dual quaternion p + eps q: the kinematic image of a rigid displacement.
// Study coordinates of the displacement are (p0..p3, q0..q3).
struct DualQuaternion {
    Quaternion p, q;  // primal, dual

    static DualQuaternion identity();
    // Pure translation by (vx, vy, vz): 1 + eps/2 (vx i + vy j + vz k).
    static DualQuaternion translation(const ExtScalar& vx, const ExtScalar& vy,
                                      const ExtScalar& vz);
    // Same with polynomial displacement components (symbolic anchor radii).
    static DualQuaternion translation_poly(const MPoly& vx, const MPoly& vy, const MPoly& vz);
    // Rotation about the z-axis with exact half-angle cosine/sine.
    static DualQuaternion rotation_z(const ExtScalar& cos_half, const ExtScalar& sin_half);
    // The generic displacement whose Study coordinates are the variables
    // x0..x3, y0..y3 themselves.
    static DualQuaternion generic_study();

    // Inverse of a displacement with unit primal part: conj(p) - eps conj(p) q conj(p).
    DualQuaternion unit_inverse() const;

    // Study quadric residual <p, q> (zero exactly for rigid displacements).
    MPoly study_residual() const;

    friend DualQuaternion operator*(const DualQuaternion& a, const DualQuaternion& b);
    friend bool operator==(const DualQuaternion& a, const DualQuaternion& b) {
        return a.p == b.p && a.q == b.q;
    }
};

// Dual-quaternion product (composition of displacements; the right factor acts
// first when composing frames left-to-root).
DualQuaternion dq_compose(const DualQuaternion& a, const DualQuaternion& b);

}  // namespace ruukin
