#include "ruukin/resultant.hpp"

#include <stdexcept>

namespace ruukin {

PolyMatrix sylvester_matrix(const MPoly& f, const MPoly& g, int var) {
    const int m = f.degree(var);
    const int n = g.degree(var);
    if (m <= 0 || n <= 0)
        throw std::invalid_argument("sylvester_matrix: both inputs need positive degree");
    auto fc = f.coeffs_in(var);  // [c0 .. cm]
    auto gc = g.coeffs_in(var);
    const std::size_t size = static_cast<std::size_t>(m + n);
    PolyMatrix s(size, size);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s.at(i, i + j) = fc[static_cast<std::size_t>(m - j)];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s.at(n + i, i + j) = gc[static_cast<std::size_t>(n - j)];
    return s;
}

MPoly resultant_raw(const MPoly& f, const MPoly& g, int var) {
    const int m = f.degree(var);
    const int n = g.degree(var);
    if (m <= 0 && n <= 0)
        throw std::invalid_argument("resultant: both inputs degree 0 in the variable");
    if (m <= 0) return f.pow(static_cast<unsigned>(n));
    if (n <= 0) return g.pow(static_cast<unsigned>(m));
    return polymatrix_det(sylvester_matrix(f, g, var));
}

MPoly resultant(const MPoly& f, const MPoly& g, int var) {
    MPoly r = resultant_raw(f, g, var);
    // constants are meaningful values (e.g. Res over a shared root test);
    // normalizing them away would erase the information
    if (r.is_zero() || r.total_degree() == 0) return r;
    return r.content_normalized();
}

}  // namespace ruukin
