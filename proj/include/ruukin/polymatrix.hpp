#pragma once

#include <cstddef>
#include <vector>

#include "ruukin/mpoly.hpp"

namespace ruukin {

// Rectangular grid of polynomials; determinants defined for square matrices.
class PolyMatrix {
public:
    PolyMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    MPoly& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const MPoly& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    PolyMatrix submatrix(const std::vector<std::size_t>& rows,
                         const std::vector<std::size_t>& cols) const;

private:
    std::size_t rows_, cols_;
    std::vector<MPoly> data_;
};

// Exact determinant by fraction-free Bareiss elimination with sparsest-pivot
// selection; dimension capped at 16 (the largest Sylvester stage).
// Throws std::invalid_argument for non-square or oversized input.
MPoly polymatrix_det(const PolyMatrix& m);

// Cofactor-expansion determinant, the independent oracle for n <= 4.
MPoly det_cofactor(const PolyMatrix& m);

// Division-free determinant by row-by-row Laplace expansion with column-subset
// memoization (O(2^n) partial minors). Preferred over Bareiss when entries are
// sparse multivariate polynomials, where exact division dominates the cost;
// rows are processed sparsest-first so zero branches prune early.
MPoly det_expansion(const PolyMatrix& m);

}  // namespace ruukin
