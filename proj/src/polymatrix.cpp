#include "ruukin/polymatrix.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace ruukin {

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& rows,
                                 const std::vector<std::size_t>& cols) const {
    PolyMatrix out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            out.at(i, j) = at(rows[i], cols[j]);
    return out;
}

namespace {

// Laplace expansion along the sparsest row or column when it has at most two
// nonzero entries; keeps structured matrices (near-empty gradient rows) from
// feeding large blocks into the fraction-free elimination.
bool sparsest_line(const PolyMatrix& m, bool& is_row, std::size_t& index, std::size_t& count) {
    const std::size_t n = m.rows();
    count = n + 1;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t row_nz = 0, col_nz = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (!m.at(i, j).is_zero()) ++row_nz;
            if (!m.at(j, i).is_zero()) ++col_nz;
        }
        if (row_nz < count) { count = row_nz; is_row = true; index = i; }
        if (col_nz < count) { count = col_nz; is_row = false; index = i; }
    }
    return count <= 2;
}

}  // namespace

MPoly polymatrix_det(const PolyMatrix& m) {
    if (!m.square()) throw std::invalid_argument("polymatrix_det: non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return MPoly::constant(ExtScalar(1));
    if (n > 16) throw std::invalid_argument("polymatrix_det: dimension > 16");
    if (n == 1) return m.at(0, 0);

    bool is_row = true;
    std::size_t line = 0, nz = 0;
    if (sparsest_line(m, is_row, line, nz)) {
        if (nz == 0) return MPoly::zero();
        MPoly det;
        std::vector<std::size_t> sub_rows, sub_cols;
        for (std::size_t k = 0; k < n; ++k) {
            const MPoly& entry = is_row ? m.at(line, k) : m.at(k, line);
            if (entry.is_zero()) continue;
            sub_rows.clear();
            sub_cols.clear();
            for (std::size_t r = 0; r < n; ++r)
                if (r != (is_row ? line : k)) sub_rows.push_back(r);
            for (std::size_t c = 0; c < n; ++c)
                if (c != (is_row ? k : line)) sub_cols.push_back(c);
            MPoly contrib = entry * polymatrix_det(m.submatrix(sub_rows, sub_cols));
            if ((line + k) % 2) det -= contrib; else det += contrib;
        }
        return det;
    }

    // working copy
    std::vector<std::vector<MPoly>> a(n, std::vector<MPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);

    bool negate = false;
    MPoly prev = MPoly::constant(ExtScalar(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        // pivot: the nonzero entry in column k with the fewest terms
        std::size_t piv = n;
        for (std::size_t i = k; i < n; ++i) {
            if (a[i][k].is_zero()) continue;
            if (piv == n || a[i][k].nterms() < a[piv][k].nterms()) piv = i;
        }
        if (piv == n) return MPoly::zero();
        if (piv != k) {
            std::swap(a[piv], a[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MPoly t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                auto q = div_exact(t, prev);
                if (!q)
                    throw std::logic_error("polymatrix_det: fraction-free step not divisible");
                a[i][j] = std::move(*q);
            }
            a[i][k] = MPoly::zero();
        }
        prev = a[k][k];
    }
    MPoly det = a[n - 1][n - 1];
    return negate ? -det : det;
}

MPoly det_expansion(const PolyMatrix& m) {
    if (!m.square()) throw std::invalid_argument("det_expansion: non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return MPoly::constant(ExtScalar(1));
    if (n > 16) throw std::invalid_argument("det_expansion: dimension > 16");

    // Process rows sparsest-first; the permutation of rows contributes a sign.
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    auto nonzeros = [&](std::size_t r) {
        std::size_t c = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (!m.at(r, j).is_zero()) ++c;
        return c;
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return nonzeros(a) < nonzeros(b); });
    bool negate = false;
    std::vector<std::size_t> perm = order;  // parity of the row permutation
    for (std::size_t i = 0; i < n; ++i) {
        while (perm[i] != i) {
            std::swap(perm[i], perm[perm[i]]);
            negate = !negate;
        }
    }

    // partial[mask] = signed minor of the processed rows on column set `mask`.
    std::map<std::uint32_t, MPoly> partial;
    partial[0] = MPoly::constant(ExtScalar(1));
    for (std::size_t step = 0; step < n; ++step) {
        const std::size_t r = order[step];
        std::map<std::uint32_t, MPoly> next;
        for (const auto& [mask, minor] : partial) {
            for (std::size_t c = 0; c < n; ++c) {
                const std::uint32_t bit = 1u << c;
                if (mask & bit) continue;
                const MPoly& entry = m.at(r, c);
                if (entry.is_zero()) continue;
                MPoly contrib = entry * minor;
                // Expanding the (step+1)-row minor along its last row: the
                // cofactor sign is (-1)^(row position + column position),
                // with c sitting at sorted position popcount below it.
                const int swaps =
                    static_cast<int>(step) + __builtin_popcount(mask & (bit - 1));
                auto& slot = next[mask | bit];
                if (swaps % 2) slot -= contrib; else slot += contrib;
            }
        }
        partial.clear();
        for (auto& [mask, p] : next)
            if (!p.is_zero()) partial.emplace(mask, std::move(p));
        if (partial.empty()) return MPoly::zero();
    }
    MPoly det = partial.begin()->second;
    return negate ? -det : det;
}

MPoly det_cofactor(const PolyMatrix& m) {
    if (!m.square()) throw std::invalid_argument("det_cofactor: non-square matrix");
    const std::size_t n = m.rows();
    if (n > 4) throw std::invalid_argument("det_cofactor: oracle limited to n <= 4");
    if (n == 0) return MPoly::constant(ExtScalar(1));
    if (n == 1) return m.at(0, 0);
    MPoly det;
    std::vector<std::size_t> all_rows, sub_cols;
    for (std::size_t i = 1; i < n; ++i) all_rows.push_back(i);
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        sub_cols.clear();
        for (std::size_t c = 0; c < n; ++c)
            if (c != j) sub_cols.push_back(c);
        MPoly minor = det_cofactor(m.submatrix(all_rows, sub_cols));
        MPoly contrib = m.at(0, j) * minor;
        if (j % 2) det -= contrib; else det += contrib;
    }
    return det;
}

}  // namespace ruukin
