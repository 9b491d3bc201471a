#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "ruukin/mpoly.hpp"

namespace ruukin {

// Geometric design of the manipulator: platform/base circumradii r1/r0 and the
// two leg segment lengths a1 (proximal) and a3 (distal). All exact rationals.
struct Design {
    mpq_class a1, a3, r0, r1;

    // Bundled example designs (also shipped as designs/pars.json, pars2.json).
    static Design pars();   // a1=3,  a3=5, r0=11, r1=7
    static Design pars2();  // a1=5,  a3=4, r0=11, r1=7

    // Loads a design from a JSON file with keys a1, a3, r0, r1. Values may be
    // integers or exact-rational strings like "7/2". Throws on missing keys,
    // malformed values, or non-positive lengths.
    static Design load(const std::string& path);

    // Throws std::invalid_argument unless all four lengths are positive.
    void validate() const;

    // Substitution map assigning the design variables a1, a3, r0, r1.
    std::map<int, MPoly> substitution() const;

    // Same data as a dense evaluation point (other slots untouched).
    void fill(std::array<double, kNumVars>& point) const;

    std::string str() const;
};

bool operator==(const Design& a, const Design& b);

}  // namespace ruukin
