#pragma once

#include "ruukin/constraints.hpp"
#include "ruukin/polymatrix.hpp"

namespace ruukin {

// Symbolic Jacobian of the full constraint system, split into the block of
// derivatives with respect to the eight image-space coordinates (output) and
// the block with respect to the three inputs. Rows follow the system order
// g1..g8; columns are x0..x3, y0..y3 and t1..t3 respectively. Both blocks are
// built from the full system before any operation-mode substitution.
struct JacobianPair {
    PolyMatrix j_o{8, 8};
    PolyMatrix j_i{8, 3};
};

JacobianPair jacobian(const ConstraintSystem& cs);

}  // namespace ruukin
