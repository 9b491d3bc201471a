#pragma once

#include "ruukin/polymatrix.hpp"

namespace ruukin {

// Sylvester matrix of f and g with respect to variable var. Both inputs must
// have positive degree in var; rows carry the coefficient sequences (leading
// coefficient first), deg(g) rows of f-coefficients then deg(f) rows of
// g-coefficients.
PolyMatrix sylvester_matrix(const MPoly& f, const MPoly& g, int var);

// Resultant of f and g in var: determinant of the Sylvester matrix, free of
// var. The result is content-normalized (rational content divided out,
// leading coefficient sign fixed positive) unless it is a constant, which is
// returned unchanged. Degree-0 cases: Res(f, c) = c^{deg_v f} (and
// symmetrically); both degree 0 throws std::invalid_argument.
MPoly resultant(const MPoly& f, const MPoly& g, int var);

// The raw Sylvester determinant without normalization (sign-convention tests).
MPoly resultant_raw(const MPoly& f, const MPoly& g, int var);

}  // namespace ruukin
