/**
 * @file linalg.hh
 * @brief Exact dense linear algebra over an abstract field context
 *        (Gaussian elimination, kernel bases, linear solves).
 */
#ifndef GALMODEL_LINALG_HH
#define GALMODEL_LINALG_HH

#include <galmodel/upoly.hh>

#include <optional>
#include <vector>

namespace galmodel {

template <class F>
using Mat = std::vector<std::vector<typename F::Elem>>;

/// in-place reduced row echelon form; returns the pivot column of each pivot row
template <class F>
std::vector<size_t> rref(const F& K, Mat<F>& m) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    const size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = rows;
        for (size_t i = r; i < rows; ++i) {
            if (!K.is_zero(m[i][c])) { sel = i; break; }
        }
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        typename F::Elem piv_inv = K.inv(m[r][c]);
        for (size_t j = c; j < cols; ++j) m[r][j] = K.mul(m[r][j], piv_inv);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || K.is_zero(m[i][c])) continue;
            typename F::Elem f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] = K.sub(m[i][j], K.mul(f, m[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
size_t rank(const F& K, Mat<F> m) {
    return rref(K, m).size();
}

/// basis of { x : M x = 0 }
template <class F>
Mat<F> kernel_basis(const F& K, Mat<F> m) {
    if (m.empty()) return {};
    const size_t cols = m[0].size();
    std::vector<size_t> pivots = rref(K, m);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    Mat<F> basis;
    for (size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<typename F::Elem> v(cols, K.zero());
        v[c] = K.one();
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = K.neg(m[r][c]);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// one solution of M x = b, or nullopt when inconsistent
template <class F>
std::optional<std::vector<typename F::Elem>> solve(const F& K, const Mat<F>& m,
                                                   const std::vector<typename F::Elem>& b) {
    if (m.empty()) return std::vector<typename F::Elem>{};
    const size_t rows = m.size(), cols = m[0].size();
    Mat<F> aug = m;
    for (size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
    std::vector<size_t> pivots = rref(K, aug);
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == cols) return std::nullopt; // pivot in the augmented column
    }
    std::vector<typename F::Elem> x(cols, K.zero());
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
    return x;
}

} // namespace galmodel

#endif
