#include "ruukin/scalar.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ruukin {

ExtScalar& ExtScalar::operator+=(const ExtScalar& o) {
    rat_ += o.rat_;
    irr_ += o.irr_;
    return *this;
}

ExtScalar& ExtScalar::operator-=(const ExtScalar& o) {
    rat_ -= o.rat_;
    irr_ -= o.irr_;
    return *this;
}

ExtScalar& ExtScalar::operator*=(const ExtScalar& o) {
    // (a + b s)(c + d s) = (ac + 3bd) + (ad + bc) s  with s^2 = 3
    mpq_class r = rat_ * o.rat_ + 3 * irr_ * o.irr_;
    mpq_class i = rat_ * o.irr_ + irr_ * o.rat_;
    rat_ = std::move(r);
    irr_ = std::move(i);
    return *this;
}

ExtScalar ExtScalar::inverse() const {
    // 1/(a + b s) = (a - b s)/(a^2 - 3 b^2); a^2 = 3 b^2 with rational a, b only at 0
    mpq_class norm = rat_ * rat_ - 3 * irr_ * irr_;
    if (norm == 0) throw std::domain_error("ExtScalar: inverse of zero");
    ExtScalar r;  // mpq division keeps the components canonical
    r.rat_ = rat_ / norm;
    r.irr_ = -irr_ / norm;
    return r;
}

ExtScalar& ExtScalar::operator/=(const ExtScalar& o) { return *this *= o.inverse(); }

double ExtScalar::to_double() const {
    static const double kSqrt3 = std::sqrt(3.0);
    return rat_.get_d() + irr_.get_d() * kSqrt3;
}

ExtScalar ExtScalar::from_string(const std::string& s) {
    std::istringstream is(s);
    std::string a, b;
    is >> a;
    if (!is) throw std::invalid_argument("ExtScalar: empty string");
    is >> b;
    mpq_class rat(a);
    rat.canonicalize();
    mpq_class irr(0);
    if (is) {
        irr = mpq_class(b);
        irr.canonicalize();
    }
    return ExtScalar(rat, irr);
}

std::string ExtScalar::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExtScalar& v) {
    if (v.irr() == 0) return os << v.rat();
    if (v.rat() == 0) return os << v.irr() << "*sqrt3";
    os << v.rat();
    if (v.irr() > 0) os << "+";
    return os << v.irr() << "*sqrt3";
}

}  // namespace ruukin
