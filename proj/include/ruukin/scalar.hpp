#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace ruukin {

// Element of the field Q(sqrt(3)): value = rat + irr*sqrt(3), with exact
// arbitrary-precision rational components. This is the coefficient field of
// every constraint polynomial; sqrt(3) enters through the +-120 degree limb
// placements.
class ExtScalar {
public:
    ExtScalar() : rat_(0), irr_(0) {}
    ExtScalar(long v) : rat_(v), irr_(0) {}  // NOLINT(google-explicit-constructor)
    // The mpq_class ctors accept values in any form (e.g. mpq_class(6, 4))
    // and restore the canonical form GMP arithmetic relies on.
    ExtScalar(const mpq_class& r) : rat_(r), irr_(0) {  // NOLINT(google-explicit-constructor)
        canonicalize();
    }
    ExtScalar(mpq_class r, mpq_class i) : rat_(std::move(r)), irr_(std::move(i)) {
        canonicalize();
    }

    static ExtScalar sqrt3() { return ExtScalar(mpq_class(0), mpq_class(1)); }
    // Parse "p", "p/q", or "p/q s/t" (rational and sqrt3 parts).
    static ExtScalar from_string(const std::string& s);

    const mpq_class& rat() const { return rat_; }
    const mpq_class& irr() const { return irr_; }

    bool is_zero() const { return rat_ == 0 && irr_ == 0; }
    bool is_rational() const { return irr_ == 0; }

    ExtScalar operator-() const {  // negation preserves canonical form
        ExtScalar r;
        r.rat_ = -rat_;
        r.irr_ = -irr_;
        return r;
    }
    ExtScalar& operator+=(const ExtScalar& o);
    ExtScalar& operator-=(const ExtScalar& o);
    ExtScalar& operator*=(const ExtScalar& o);
    ExtScalar& operator/=(const ExtScalar& o);

    friend ExtScalar operator+(ExtScalar a, const ExtScalar& b) { return a += b; }
    friend ExtScalar operator-(ExtScalar a, const ExtScalar& b) { return a -= b; }
    friend ExtScalar operator*(ExtScalar a, const ExtScalar& b) { return a *= b; }
    friend ExtScalar operator/(ExtScalar a, const ExtScalar& b) { return a /= b; }

    friend bool operator==(const ExtScalar& a, const ExtScalar& b) {
        return a.rat_ == b.rat_ && a.irr_ == b.irr_;
    }
    friend bool operator!=(const ExtScalar& a, const ExtScalar& b) { return !(a == b); }

    // Multiplicative inverse; throws std::domain_error on zero.
    ExtScalar inverse() const;

    double to_double() const;

    // "p/q" when purely rational, else "p/q+r/s*sqrt3" (signs folded in).
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const ExtScalar& v);

private:
    void canonicalize() {
        rat_.canonicalize();
        irr_.canonicalize();
    }

    mpq_class rat_, irr_;
};

}  // namespace ruukin
