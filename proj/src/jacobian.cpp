#include "ruukin/jacobian.hpp"

namespace ruukin {

JacobianPair jacobian(const ConstraintSystem& cs) {
    JacobianPair jp;
    for (std::size_t row = 0; row < 8; ++row) {
        for (int col = 0; col < 8; ++col)
            jp.j_o.at(row, col) = cs.g[row].diff(VX0 + col);
        for (int col = 0; col < 3; ++col)
            jp.j_i.at(row, col) = cs.g[row].diff(VT1 + col);
    }
    return jp;
}

}  // namespace ruukin
