#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ruukin/scalar.hpp"

namespace ruukin {

// Fixed, ordered variable universe shared by all polynomials:
//   x0..x3, y0..y3  Study coordinates
//   t1..t3          input parameters (tangent half-angles)
//   a1, a3, r0, r1  design parameters
inline constexpr std::size_t kNumVars = 15;
const std::array<std::string, kNumVars>& var_names();
// Index of a variable name, or -1 if the name is unknown.
int var_index(std::string_view name);

enum VarId : int {
    VX0 = 0, VX1, VX2, VX3, VY0, VY1, VY2, VY3,
    VT1, VT2, VT3, VA1, VA3, VR0, VR1,
};

// Exponent vector over the fixed universe.
struct Expo {
    std::array<std::uint16_t, kNumVars> e{};
    int total() const {
        int s = 0;
        for (auto v : e) s += v;
        return s;
    }
    friend bool operator==(const Expo& a, const Expo& b) { return a.e == b.e; }
};

// Graded reverse lexicographic order: higher total degree ranks higher; ties are
// broken by the last differing variable, where the SMALLER exponent ranks higher.
bool grevlex_less(const Expo& a, const Expo& b);

struct GrevlexGreater {
    bool operator()(const Expo& a, const Expo& b) const { return grevlex_less(b, a); }
};

// Sparse multivariate polynomial over Q(sqrt3). Terms are kept in canonical
// graded-reverse-lexicographic order (leading term first); zero coefficients
// are never stored. Immutable in spirit: all operations return new values.
class MPoly {
public:
    using TermMap = std::map<Expo, ExtScalar, GrevlexGreater>;

    MPoly() = default;

    static MPoly zero() { return MPoly(); }
    static MPoly constant(ExtScalar c);
    static MPoly variable(int var);
    static MPoly variable(std::string_view name);
    static MPoly term(ExtScalar c, const Expo& e);

    // Parse an expression: + - * ^ ( ), integer or p/q rational literals,
    // `sqrt3`, and universe variable names. No division operator; rationals
    // are single literals ("3/2*y1" is (3/2)*y1).
    static MPoly parse(std::string_view text);

    bool is_zero() const { return terms_.empty(); }
    std::size_t nterms() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    int degree(int var) const;
    int total_degree() const;  // -1 for the zero polynomial
    std::vector<int> vars_used() const;
    bool uses(int var) const { return degree(var) > 0; }

    // Leading (grevlex-greatest) term; polynomial must be nonzero.
    const std::pair<const Expo, ExtScalar>& leading() const;
    ExtScalar constant_term() const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(MPoly a, const ExtScalar& c);
    MPoly pow(unsigned k) const;

    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    // Formal partial derivative.
    MPoly diff(int var) const;

    // Coefficients with respect to one variable: result[k] is the coefficient
    // polynomial of var^k (free of var). Size = degree(var)+1; {0} for zero.
    std::vector<MPoly> coeffs_in(int var) const;

    // Exact full evaluation; throws std::invalid_argument when some used
    // variable has no assignment (assigned[i] true means values[i] valid).
    ExtScalar eval_exact(const std::array<ExtScalar, kNumVars>& values,
                         const std::array<bool, kNumVars>& assigned) const;
    // IEEE-double evaluation over all 15 slots (unused slots ignored).
    double eval_double(const std::array<double, kNumVars>& values) const;
    // Sum of |coefficient| * |monomial| at the point: the natural residual scale.
    double scale_at(const std::array<double, kNumVars>& values) const;

    // Substitute polynomials (or constants) for a subset of variables;
    // remaining variables stay. This is `eval` in substitute mode.
    MPoly substitute(const std::map<int, MPoly>& assignment) const;
    MPoly substitute(int var, const MPoly& value) const;
    MPoly substitute(int var, const ExtScalar& value) const;

    // Divide by the rational content and fix the sign so the leading
    // coefficient has positive rational part (positive sqrt3 part when the
    // rational part is zero). Zero stays zero.
    MPoly content_normalized() const;

    // Human-readable canonical expression (round-trips through parse()).
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const MPoly& p);

    // Dump format: header line with the used variable names, then one term
    // per line `coeff_rat coeff_irr : e1 e2 ... ek` in canonical order,
    // terminated by a line containing only `;`. Bit-exact round-trip.
    void dump(std::ostream& os) const;
    static MPoly load(std::istream& is);

private:
    TermMap terms_;
    void add_term(const Expo& e, const ExtScalar& c);
    friend class MPolyParser;
};

// Exact division: q with num == q*den, or nullopt when not divisible.
// Throws std::domain_error when den is zero.
std::optional<MPoly> div_exact(const MPoly& num, const MPoly& den);

}  // namespace ruukin
