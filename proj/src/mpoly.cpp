#include "ruukin/mpoly.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ruukin {

const std::array<std::string, kNumVars>& var_names() {
    static const std::array<std::string, kNumVars> names = {
        "x0", "x1", "x2", "x3", "y0", "y1", "y2", "y3",
        "t1", "t2", "t3", "a1", "a3", "r0", "r1"};
    return names;
}

int var_index(std::string_view name) {
    const auto& names = var_names();
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return -1;
}

bool grevlex_less(const Expo& a, const Expo& b) {
    int ta = a.total(), tb = b.total();
    if (ta != tb) return ta < tb;
    for (int i = kNumVars - 1; i >= 0; --i) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    }
    return false;
}

void MPoly::add_term(const Expo& e, const ExtScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPoly MPoly::constant(ExtScalar c) {
    MPoly p;
    if (!c.is_zero()) p.terms_.emplace(Expo{}, std::move(c));
    return p;
}

MPoly MPoly::variable(int var) {
    if (var < 0 || var >= static_cast<int>(kNumVars))
        throw std::invalid_argument("MPoly: bad variable index");
    Expo e;
    e.e[var] = 1;
    MPoly p;
    p.terms_.emplace(e, ExtScalar(1));
    return p;
}

MPoly MPoly::variable(std::string_view name) {
    int i = var_index(name);
    if (i < 0) throw std::invalid_argument("MPoly: unknown variable " + std::string(name));
    return variable(i);
}

MPoly MPoly::term(ExtScalar c, const Expo& e) {
    MPoly p;
    if (!c.is_zero()) p.terms_.emplace(e, std::move(c));
    return p;
}

int MPoly::degree(int var) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.e[var]));
    return d;
}

int MPoly::total_degree() const {
    if (terms_.empty()) return -1;
    // grevlex leading term has maximal total degree
    return terms_.begin()->first.total();
}

std::vector<int> MPoly::vars_used() const {
    std::array<bool, kNumVars> used{};
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < kNumVars; ++i)
            if (e.e[i]) used[i] = true;
    std::vector<int> out;
    for (std::size_t i = 0; i < kNumVars; ++i)
        if (used[i]) out.push_back(static_cast<int>(i));
    return out;
}

const std::pair<const Expo, ExtScalar>& MPoly::leading() const {
    if (terms_.empty()) throw std::domain_error("MPoly: leading term of zero");
    return *terms_.begin();
}

ExtScalar MPoly::constant_term() const {
    auto it = terms_.find(Expo{});
    return it == terms_.end() ? ExtScalar(0) : it->second;
}

MPoly MPoly::operator-() const {
    MPoly p;
    for (const auto& [e, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), e, -c);
    return p;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly out;
    if (a.is_zero() || b.is_zero()) return out;
    // iterate over the smaller operand outside for fewer map rebalances
    const MPoly& small = a.nterms() <= b.nterms() ? a : b;
    const MPoly& big = a.nterms() <= b.nterms() ? b : a;
    for (const auto& [ea, ca] : small.terms_) {
        for (const auto& [eb, cb] : big.terms_) {
            Expo e;
            for (std::size_t i = 0; i < kNumVars; ++i)
                e.e[i] = static_cast<std::uint16_t>(ea.e[i] + eb.e[i]);
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MPoly operator*(MPoly a, const ExtScalar& c) {
    if (c.is_zero()) return MPoly();
    for (auto& [e, v] : a.terms_) v *= c;
    return a;
}

MPoly MPoly::pow(unsigned k) const {
    MPoly r = MPoly::constant(ExtScalar(1));
    MPoly b = *this;
    while (k) {
        if (k & 1u) r = r * b;
        b = b * b;
        k >>= 1u;
    }
    return r;
}

MPoly MPoly::diff(int var) const {
    MPoly p;
    for (const auto& [e, c] : terms_) {
        if (e.e[var] == 0) continue;
        Expo e2 = e;
        e2.e[var] -= 1;
        p.terms_.emplace(e2, c * ExtScalar(static_cast<long>(e.e[var])));
    }
    return p;
}

std::vector<MPoly> MPoly::coeffs_in(int var) const {
    int d = degree(var);
    std::vector<MPoly> out(static_cast<std::size_t>(d) + 1);
    for (const auto& [e, c] : terms_) {
        Expo e2 = e;
        int k = e2.e[var];
        e2.e[var] = 0;
        out[k].terms_.emplace(e2, c);
    }
    return out;
}

ExtScalar MPoly::eval_exact(const std::array<ExtScalar, kNumVars>& values,
                            const std::array<bool, kNumVars>& assigned) const {
    for (int v : vars_used())
        if (!assigned[v])
            throw std::invalid_argument("MPoly: eval_exact missing variable " + var_names()[v]);
    ExtScalar total(0);
    for (const auto& [e, c] : terms_) {
        ExtScalar t = c;
        for (std::size_t i = 0; i < kNumVars; ++i) {
            for (int k = 0; k < e.e[i]; ++k) t *= values[i];
        }
        total += t;
    }
    return total;
}

double MPoly::eval_double(const std::array<double, kNumVars>& values) const {
    double total = 0.0;
    for (const auto& [e, c] : terms_) {
        double t = c.to_double();
        for (std::size_t i = 0; i < kNumVars; ++i) {
            if (e.e[i]) t *= std::pow(values[i], e.e[i]);
        }
        total += t;
    }
    return total;
}

double MPoly::scale_at(const std::array<double, kNumVars>& values) const {
    double total = 0.0;
    for (const auto& [e, c] : terms_) {
        double t = std::fabs(c.to_double());
        for (std::size_t i = 0; i < kNumVars; ++i) {
            if (e.e[i]) t *= std::pow(std::fabs(values[i]), e.e[i]);
        }
        total += t;
    }
    return total;
}

MPoly MPoly::substitute(const std::map<int, MPoly>& assignment) const {
    MPoly out;
    // cache powers of each substituted polynomial
    std::map<std::pair<int, int>, MPoly> powers;
    for (const auto& [e, c] : terms_) {
        MPoly term = MPoly::constant(c);
        for (std::size_t i = 0; i < kNumVars; ++i) {
            if (!e.e[i]) continue;
            auto it = assignment.find(static_cast<int>(i));
            if (it == assignment.end()) {
                Expo mono;
                mono.e[i] = e.e[i];
                term = term * MPoly::term(ExtScalar(1), mono);
            } else {
                auto key = std::make_pair(static_cast<int>(i), static_cast<int>(e.e[i]));
                auto pit = powers.find(key);
                if (pit == powers.end())
                    pit = powers.emplace(key, it->second.pow(e.e[i])).first;
                term = term * pit->second;
            }
        }
        out += term;
    }
    return out;
}

MPoly MPoly::substitute(int var, const MPoly& value) const {
    return substitute(std::map<int, MPoly>{{var, value}});
}

MPoly MPoly::substitute(int var, const ExtScalar& value) const {
    return substitute(var, MPoly::constant(value));
}

MPoly MPoly::content_normalized() const {
    if (terms_.empty()) return MPoly();
    // rational content: gcd of all numerators / lcm of all denominators over
    // both components of every coefficient
    mpz_class g(0), l(1);
    for (const auto& [e, c] : terms_) {
        for (const mpq_class* q : {&c.rat(), &c.irr()}) {
            if (*q == 0) continue;
            mpz_class num = abs(q->get_num());
            mpz_class den = q->get_den();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        }
    }
    mpq_class content(g, l);
    content.canonicalize();
    const ExtScalar& lead = terms_.begin()->second;
    bool negative = lead.rat() != 0 ? lead.rat() < 0 : lead.irr() < 0;
    mpq_class scale = (negative ? mpq_class(-1) : mpq_class(1)) / content;
    MPoly out;
    for (const auto& [e, c] : terms_)
        out.terms_.emplace_hint(out.terms_.end(), e, c * ExtScalar(scale));
    return out;
}

// ---------------------------------------------------------------------------
// parsing

class MPolyParser {
public:
    explicit MPolyParser(std::string_view text) : s_(text) {}

    MPoly parse() {
        MPoly p = sum();
        skip_ws();
        if (pos_ != s_.size())
            throw std::invalid_argument("MPoly parse: trailing input at '" +
                                        std::string(s_.substr(pos_, 16)) + "'");
        return p;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    MPoly sum() {
        bool neg = false;
        char c = peek();
        if (c == '+' || c == '-') {
            neg = c == '-';
            ++pos_;
        }
        MPoly p = product();
        if (neg) p = -p;
        while (true) {
            c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            MPoly q = product();
            if (c == '-') p -= q; else p += q;
        }
        return p;
    }

    MPoly product() {
        MPoly p = factor();
        while (peek() == '*') {
            ++pos_;
            p = p * factor();
        }
        return p;
    }

    MPoly factor() {
        MPoly base = atom();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) throw std::invalid_argument("MPoly parse: exponent expected");
            unsigned k = static_cast<unsigned>(
                std::strtoul(std::string(s_.substr(start, pos_ - start)).c_str(), nullptr, 10));
            base = base.pow(k);
        }
        return base;
    }

    MPoly atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            MPoly p = sum();
            if (peek() != ')') throw std::invalid_argument("MPoly parse: ')' expected");
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            }
            mpq_class q(std::string(s_.substr(start, pos_ - start)));
            q.canonicalize();
            return MPoly::constant(ExtScalar(q));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            if (name == "sqrt3") return MPoly::constant(ExtScalar::sqrt3());
            int idx = var_index(name);
            if (idx < 0) throw std::invalid_argument("MPoly parse: unknown name " + name);
            return MPoly::variable(idx);
        }
        throw std::invalid_argument(std::string("MPoly parse: unexpected character '") + c + "'");
    }
};

MPoly MPoly::parse(std::string_view text) { return MPolyParser(text).parse(); }

// ---------------------------------------------------------------------------
// printing and the dump format

std::string MPoly::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MPoly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        ExtScalar coeff = c;
        bool neg = coeff.rat() != 0 ? coeff.rat() < 0 : coeff.irr() < 0;
        if (neg) coeff = -coeff;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        std::vector<std::string> factors;
        if (coeff.irr() == 0) {
            if (coeff.rat() != 1 || e.total() == 0)
                factors.push_back(coeff.rat().get_str());
        } else if (coeff.rat() == 0) {
            if (coeff.irr() != 1) factors.push_back(coeff.irr().get_str());
            factors.push_back("sqrt3");
        } else {
            std::ostringstream cs;
            cs << "(" << coeff << ")";
            factors.push_back(cs.str());
        }
        for (std::size_t i = 0; i < kNumVars; ++i) {
            if (!e.e[i]) continue;
            std::string f = var_names()[i];
            if (e.e[i] > 1) f += "^" + std::to_string(e.e[i]);
            factors.push_back(f);
        }
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) os << "*";
            os << factors[i];
        }
    }
    return os;
}

void MPoly::dump(std::ostream& os) const {
    std::vector<int> used = vars_used();
    for (std::size_t i = 0; i < used.size(); ++i) {
        if (i) os << " ";
        os << var_names()[used[i]];
    }
    os << "\n";
    for (const auto& [e, c] : terms_) {
        os << c.rat() << " " << c.irr() << " :";
        for (int v : used) os << " " << e.e[v];
        os << "\n";
    }
    os << ";\n";
}

MPoly MPoly::load(std::istream& is) {
    std::string line;
    // header: variable names (may be empty for a constant/zero polynomial)
    if (!std::getline(is, line)) throw std::invalid_argument("MPoly load: missing header");
    std::istringstream hs(line);
    std::vector<int> vars;
    std::string name;
    while (hs >> name) {
        int idx = var_index(name);
        if (idx < 0) throw std::invalid_argument("MPoly load: unknown variable " + name);
        vars.push_back(idx);
    }
    MPoly p;
    while (std::getline(is, line)) {
        if (line == ";") return p;
        std::istringstream ls(line);
        std::string rat_s, irr_s, colon;
        if (!(ls >> rat_s >> irr_s >> colon) || colon != ":")
            throw std::invalid_argument("MPoly load: malformed term line: " + line);
        mpq_class rat(rat_s), irr(irr_s);
        rat.canonicalize();
        irr.canonicalize();
        Expo e;
        for (int v : vars) {
            int k;
            if (!(ls >> k)) throw std::invalid_argument("MPoly load: missing exponent: " + line);
            e.e[v] = static_cast<std::uint16_t>(k);
        }
        p.add_term(e, ExtScalar(rat, irr));
    }
    throw std::invalid_argument("MPoly load: missing ';' terminator");
}

// ---------------------------------------------------------------------------

std::optional<MPoly> div_exact(const MPoly& num, const MPoly& den) {
    if (den.is_zero()) throw std::domain_error("div_exact: zero divisor");
    MPoly q;
    MPoly r = num;
    const auto& [dlt, dlc] = den.leading();
    while (!r.is_zero()) {
        const auto& [rlt, rlc] = r.leading();
        Expo e;
        for (std::size_t i = 0; i < kNumVars; ++i) {
            if (rlt.e[i] < dlt.e[i]) return std::nullopt;
            e.e[i] = static_cast<std::uint16_t>(rlt.e[i] - dlt.e[i]);
        }
        MPoly t = MPoly::term(rlc / dlc, e);
        q += t;
        r -= t * den;
    }
    return q;
}

}  // namespace ruukin
