#include <vector>

#include "pfol/polyfn.hpp"

namespace pfol {

namespace {

// fraction-free (Bareiss) determinant; entries stay polynomial throughout
MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>>& m, const FieldSpec& field) {
    const std::size_t n = m.size();
    if (n == 0) return MultiPoly::constant(Scalar::one(field));
    int sign = 1;
    MultiPoly prev = MultiPoly::constant(Scalar::one(field));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k].is_zero()) ++pivot;
        if (pivot == n) return MultiPoly::zero(field);
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = divide_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = MultiPoly::zero(field);
        }
        prev = m[k][k];
    }
    MultiPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

MultiPoly sylvester_determinant(const MultiPoly& f, const MultiPoly& g, Var v) {
    const FieldSpec& field = f.field();
    long m = f.degree_in(v);
    long n = g.degree_in(v);
    std::size_t size = static_cast<std::size_t>(m + n);
    if (size == 0) return MultiPoly::constant(Scalar::one(field));
    auto fc = f.coefficients_in(v);
    auto gc = g.coefficients_in(v);
    auto get = [&](std::map<long, MultiPoly>& c, long k) {
        auto it = c.find(k);
        return it == c.end() ? MultiPoly::zero(field) : it->second;
    };
    std::vector<std::vector<MultiPoly>> mat(size,
                                            std::vector<MultiPoly>(size, MultiPoly::zero(field)));
    for (long row = 0; row < n; ++row)
        for (long k = 0; k <= m; ++k) mat[row][row + k] = get(fc, m - k);
    for (long row = 0; row < m; ++row)
        for (long k = 0; k <= n; ++k) mat[n + row][row + k] = get(gc, n - k);
    return bareiss_determinant(mat, field);
}

}  // namespace

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, Var v) {
    if (f.degree_in(v) <= 0 || g.degree_in(v) <= 0)
        throw MathError("DegreeZero", "resultant requires positive degree in " +
                                          std::string(var_name(v)));
    return sylvester_determinant(f, g, v);
}

MultiPoly resultant_relaxed(const MultiPoly& f, const MultiPoly& g, Var v) {
    const FieldSpec& field = f.field();
    long m = f.degree_in(v);
    long n = g.degree_in(v);
    if (f.is_zero() || g.is_zero()) return MultiPoly::zero(field);
    if (m <= 0 && n <= 0) return MultiPoly::constant(Scalar::one(field));
    if (n <= 0) return g.pow(m);
    if (m <= 0) return f.pow(n);
    return sylvester_determinant(f, g, v);
}

}  // namespace pfol
