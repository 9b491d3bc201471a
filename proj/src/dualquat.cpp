#include "ruukin/dualquat.hpp"

namespace ruukin {

Quaternion Quaternion::one() {
    Quaternion r;
    r.c[0] = MPoly::constant(ExtScalar(1));
    return r;
}

Quaternion Quaternion::from_scalars(const ExtScalar& w, const ExtScalar& x,
                                    const ExtScalar& y, const ExtScalar& z) {
    Quaternion r;
    r.c[0] = MPoly::constant(w);
    r.c[1] = MPoly::constant(x);
    r.c[2] = MPoly::constant(y);
    r.c[3] = MPoly::constant(z);
    return r;
}

Quaternion Quaternion::conjugate() const {
    Quaternion r;
    r.c[0] = c[0];
    for (int i = 1; i < 4; ++i) r.c[i] = c[i] * ExtScalar(-1);
    return r;
}

Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    Quaternion r;
    for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    Quaternion r;
    for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
}

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    const MPoly& aw = a.c[0];
    const MPoly& ax = a.c[1];
    const MPoly& ay = a.c[2];
    const MPoly& az = a.c[3];
    const MPoly& bw = b.c[0];
    const MPoly& bx = b.c[1];
    const MPoly& by = b.c[2];
    const MPoly& bz = b.c[3];
    Quaternion r;
    r.c[0] = aw * bw - ax * bx - ay * by - az * bz;
    r.c[1] = aw * bx + ax * bw + ay * bz - az * by;
    r.c[2] = aw * by - ax * bz + ay * bw + az * bx;
    r.c[3] = aw * bz + ax * by - ay * bx + az * bw;
    return r;
}

Quaternion Quaternion::scaled(const ExtScalar& s) const {
    Quaternion r;
    for (int i = 0; i < 4; ++i) r.c[i] = c[i] * s;
    return r;
}

DualQuaternion DualQuaternion::identity() {
    DualQuaternion r;
    r.p = Quaternion::one();
    return r;
}

DualQuaternion DualQuaternion::translation(const ExtScalar& vx, const ExtScalar& vy,
                                           const ExtScalar& vz) {
    const ExtScalar half(mpq_class(1, 2));
    DualQuaternion r;
    r.p = Quaternion::one();
    r.q = Quaternion::from_scalars(ExtScalar(0), vx * half, vy * half, vz * half);
    return r;
}

DualQuaternion DualQuaternion::translation_poly(const MPoly& vx, const MPoly& vy,
                                                const MPoly& vz) {
    const ExtScalar half(mpq_class(1, 2));
    DualQuaternion r;
    r.p = Quaternion::one();
    r.q.c[1] = vx * half;
    r.q.c[2] = vy * half;
    r.q.c[3] = vz * half;
    return r;
}

DualQuaternion DualQuaternion::rotation_z(const ExtScalar& cos_half, const ExtScalar& sin_half) {
    DualQuaternion r;
    r.p = Quaternion::from_scalars(cos_half, ExtScalar(0), ExtScalar(0), sin_half);
    return r;
}

DualQuaternion DualQuaternion::generic_study() {
    DualQuaternion r;
    r.p.c[0] = MPoly::variable(VX0);
    r.p.c[1] = MPoly::variable(VX1);
    r.p.c[2] = MPoly::variable(VX2);
    r.p.c[3] = MPoly::variable(VX3);
    r.q.c[0] = MPoly::variable(VY0);
    r.q.c[1] = MPoly::variable(VY1);
    r.q.c[2] = MPoly::variable(VY2);
    r.q.c[3] = MPoly::variable(VY3);
    return r;
}

DualQuaternion DualQuaternion::unit_inverse() const {
    DualQuaternion r;
    Quaternion pc = p.conjugate();
    r.p = pc;
    r.q = (pc * q * pc).scaled(ExtScalar(-1));
    return r;
}

MPoly DualQuaternion::study_residual() const {
    MPoly s;
    for (int i = 0; i < 4; ++i) s += p.c[i] * q.c[i];
    return s;
}

DualQuaternion operator*(const DualQuaternion& a, const DualQuaternion& b) {
    DualQuaternion r;
    r.p = a.p * b.p;
    r.q = a.p * b.q + a.q * b.p;
    return r;
}

DualQuaternion dq_compose(const DualQuaternion& a, const DualQuaternion& b) { return a * b; }

}  // namespace ruukin
