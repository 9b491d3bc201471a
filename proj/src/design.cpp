#include "ruukin/design.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ruukin {
namespace {

mpq_class parse_rational(const nlohmann::json& v, const std::string& key) {
    if (v.is_number_integer()) return mpq_class(static_cast<long>(v.get<long long>()));
    if (v.is_string()) {
        mpq_class q;
        if (q.set_str(v.get<std::string>(), 10) != 0)
            throw std::invalid_argument("design: malformed rational for '" + key + "'");
        q.canonicalize();
        return q;
    }
    throw std::invalid_argument("design: value for '" + key + "' must be an integer or a rational string");
}

}  // namespace

Design Design::pars() { return Design{3, 5, 11, 7}; }
Design Design::pars2() { return Design{5, 4, 11, 7}; }

Design Design::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("design: cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("design: invalid JSON in '" + path + "': " + e.what());
    }
    Design d;
    for (const auto& [key, field] : {std::pair<const char*, mpq_class*>{"a1", &d.a1},
                                     {"a3", &d.a3},
                                     {"r0", &d.r0},
                                     {"r1", &d.r1}}) {
        if (!j.contains(key)) throw std::invalid_argument(std::string("design: missing key '") + key + "'");
        *field = parse_rational(j.at(key), key);
    }
    d.validate();
    return d;
}

void Design::validate() const {
    if (a1 <= 0 || a3 <= 0 || r0 <= 0 || r1 <= 0)
        throw std::invalid_argument("design: all lengths must be positive");
}

std::map<int, MPoly> Design::substitution() const {
    return {{VA1, MPoly::constant(ExtScalar(a1))},
            {VA3, MPoly::constant(ExtScalar(a3))},
            {VR0, MPoly::constant(ExtScalar(r0))},
            {VR1, MPoly::constant(ExtScalar(r1))}};
}

void Design::fill(std::array<double, kNumVars>& point) const {
    point[VA1] = a1.get_d();
    point[VA3] = a3.get_d();
    point[VR0] = r0.get_d();
    point[VR1] = r1.get_d();
}

std::string Design::str() const {
    std::ostringstream os;
    os << "a1=" << a1 << " a3=" << a3 << " r0=" << r0 << " r1=" << r1;
    return os.str();
}

bool operator==(const Design& a, const Design& b) {
    return a.a1 == b.a1 && a.a3 == b.a3 && a.r0 == b.r0 && a.r1 == b.r1;
}

}  // namespace ruukin
