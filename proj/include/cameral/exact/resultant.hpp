#pragma once

#include <vector>

#include "cameral/errors.hpp"
#include "cameral/exact/poly.hpp"

namespace cameral {

template <class R>
using Matrix = std::vector<std::vector<R>>;

/// Determinant over any commutative ring (no divisions), by Berkowitz's
/// algorithm: the last entry of the characteristic-polynomial vector of M.
template <class R>
R berkowitz_determinant(const Matrix<R>& m) {
    const std::size_t n = m.size();
    if (n == 0) return R(1);
    // vec holds the coefficients of det(x I - A_k) for the trailing k x k block,
    // highest degree first; grow it one row/column at a time.
    std::vector<R> vec{R(1), -m[n - 1][n - 1]};
    for (std::size_t k = 2; k <= n; ++k) {
        const std::size_t top = n - k;  // new leading row/column index
        const std::size_t sub = k - 1;  // size of the trailing block
        // Column C = m[top+1.., top], row Rw = m[top, top+1..], block A = m[top+1.., top+1..].
        std::vector<R> diags;
        diags.reserve(k + 1);
        diags.push_back(R(1));
        diags.push_back(-m[top][top]);
        std::vector<R> col(sub);
        for (std::size_t i = 0; i < sub; ++i) col[i] = m[top + 1 + i][top];
        for (std::size_t p = 0; p + 1 < k; ++p) {
            R dot{};
            for (std::size_t i = 0; i < sub; ++i) dot += m[top][top + 1 + i] * col[i];
            diags.push_back(-dot);
            if (p + 2 < k) {
                std::vector<R> next(sub);
                for (std::size_t i = 0; i < sub; ++i) {
                    R acc{};
                    for (std::size_t j = 0; j < sub; ++j) acc += m[top + 1 + i][top + 1 + j] * col[j];
                    next[i] = std::move(acc);
                }
                col = std::move(next);
            }
        }
        // Toeplitz (k+1) x k lower-triangular matrix times vec (length k).
        std::vector<R> out(k + 1);
        for (std::size_t i = 0; i <= k; ++i) {
            R acc{};
            for (std::size_t j = 0; j < k && j <= i; ++j) acc += diags[i - j] * vec[j];
            out[i] = std::move(acc);
        }
        vec = std::move(out);
    }
    R det = vec.back();
    if (n % 2 == 1) det = -det;
    return det;
}

/// Sylvester matrix of p (degree m) and q (degree n), size (m+n) x (m+n).
template <class R>
Matrix<R> sylvester_matrix(const Poly<R>& p, const Poly<R>& q) {
    const int m = p.degree();
    const int n = q.degree();
    const std::size_t size = static_cast<std::size_t>(m + n);
    Matrix<R> s(size, std::vector<R>(size));
    for (int row = 0; row < n; ++row)
        for (int i = 0; i <= m; ++i) s[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + i)] = p.coeff(m - i);
    for (int row = 0; row < m; ++row)
        for (int i = 0; i <= n; ++i)
            s[static_cast<std::size_t>(n + row)][static_cast<std::size_t>(row + i)] = q.coeff(n - i);
    return s;
}

/// Res(p, q) = lead(p)^deg(q) * prod q(roots of p), computed as the Sylvester
/// determinant over the coefficient ring R (which may itself be polynomial or
/// dual).
template <class R>
R resultant(const Poly<R>& p, const Poly<R>& q) {
    if (p.is_zero() || q.is_zero()) throw MathError("resultant with the zero polynomial");
    if (p.degree() == 0 && q.degree() == 0) return R(1);
    if (p.var() != q.var() && !p.is_constant() && !q.is_constant())
        throw MathError("resultant of polynomials in different variables");
    return berkowitz_determinant(sylvester_matrix(p, q));
}

/// Discriminant of a polynomial in lambda under the convention
/// Res_lambda(P, dP/dlambda), with no sign or leading-coefficient
/// normalization. For monic P this equals prod_{i != j} (lambda_i - lambda_j).
template <class R>
R char_discriminant(const Poly<R>& p) {
    if (p.degree() < 1) throw MathError("discriminant of a constant polynomial");
    return resultant(p, p.derivative());
}

}  // namespace cameral
