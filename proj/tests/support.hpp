#pragma once

// Deterministic generators and independent oracles shared by the test suites.
// Nothing here calls the determinant, root-isolation or series machinery of
// the library; the oracles are deliberately naive.

#include <cstdint>
#include <random>
#include <vector>

#include "cameral/cubic.hpp"
#include "cameral/exact.hpp"

namespace cameral::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    /// Uniform integer in [lo, hi] (portable: no std distributions).
    long integer(long lo, long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(rng_() % span);
    }
    Rational rational(long max_num = 5, long max_den = 3) {
        return Rational(integer(-max_num, max_num), integer(1, max_den));
    }
    Rational nonzero_rational(long max_num = 5, long max_den = 3) {
        for (;;) {
            Rational r = rational(max_num, max_den);
            if (!r.is_zero()) return r;
        }
    }
    Poly<Rational> poly(int max_degree, long max_num = 4, long max_den = 2, const char* var = "z") {
        std::vector<Rational> cs;
        const int d = static_cast<int>(integer(0, max_degree));
        for (int i = 0; i <= d; ++i) cs.push_back(rational(max_num, max_den));
        return Poly<Rational>(std::move(cs), var);
    }
    Poly<Rational> monic_poly(int degree, long max_num = 4) {
        std::vector<Rational> cs;
        for (int i = 0; i < degree; ++i) cs.push_back(rational(max_num, 1));
        cs.push_back(Rational(1));
        return Poly<Rational>(std::move(cs), "z");
    }
    /// Distinct small rationals.
    std::vector<Rational> distinct_rationals(int count, long max_num = 6, long max_den = 2) {
        std::vector<Rational> out;
        while (static_cast<int>(out.size()) < count) {
            Rational r = rational(max_num, max_den);
            bool fresh = true;
            for (const auto& x : out) fresh = fresh && x != r;
            if (fresh) out.push_back(r);
        }
        return out;
    }
    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline Poly<Rational> poly_from_roots(const std::vector<Rational>& roots, const Rational& lead = Rational(1)) {
    Poly<Rational> p(lead, "z");
    for (const auto& r : roots) p = p * Poly<Rational>(std::vector<Rational>{-r, Rational(1)}, "z");
    return p;
}

inline Poly<Rational> P(std::initializer_list<long> cs, const char* var = "z") {
    std::vector<Rational> v;
    for (long c : cs) v.emplace_back(c);
    return Poly<Rational>(std::move(v), var);
}

/// Determinant by cofactor expansion along the first row (any commutative ring).
template <class R>
R cofactor_determinant(const std::vector<std::vector<R>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return R(1);
    if (n == 1) return m[0][0];
    R acc{};
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<std::vector<R>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<R> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != col) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        R term = m[0][col] * cofactor_determinant(minor);
        if (col % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

/// Sylvester matrix written out independently of the library helper.
template <class R>
std::vector<std::vector<R>> naive_sylvester(const std::vector<R>& p_desc, const std::vector<R>& q_desc) {
    const std::size_t m = p_desc.size() - 1;
    const std::size_t n = q_desc.size() - 1;
    std::vector<std::vector<R>> s(m + n, std::vector<R>(m + n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i <= m; ++i) s[r][r + i] = p_desc[i];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t i = 0; i <= n; ++i) s[n + r][r + i] = q_desc[i];
    return s;
}

template <class R>
R oracle_resultant(const Poly<R>& p, const Poly<R>& q) {
    std::vector<R> pd(p.coeffs().rbegin(), p.coeffs().rend());
    std::vector<R> qd(q.coeffs().rbegin(), q.coeffs().rend());
    return cofactor_determinant(naive_sylvester(pd, qd));
}

/// lambda^2 = A prod (z - a_i): distinct rational a_i, 1 <= count <= 6.
inline CoverModel random_rank1_cover(Gen& g, int max_roots = 6) {
    const int count = static_cast<int>(g.integer(1, max_roots));
    const auto q = poly_from_roots(g.distinct_rationals(count, 4, 2), g.nonzero_rational(3, 2));
    return build_cover(LieType::A, 1, {-q});
}

/// lambda^3 - 3k^2 lambda + (a z + c): branch points where a z + c = +-2k^3,
/// double root +-k with spectator -+2k.
inline CoverModel rank2_cover(const Rational& k, const Rational& a, const Rational& c) {
    const Poly<Rational> c2(Rational(-3) * k * k, "z");
    const Poly<Rational> c3(std::vector<Rational>{c, a}, "z");
    return build_cover(LieType::A, 2, {c2, c3});
}

inline CoverModel random_rank2_cover(Gen& g) {
    return rank2_cover(g.nonzero_rational(3, 2), g.nonzero_rational(4, 3), g.rational(4, 2));
}

inline TangentVector random_tangent(Gen& g, std::size_t len, int max_degree = 3) {
    TangentVector v;
    for (std::size_t i = 0; i < len; ++i) v.b.push_back(g.poly(max_degree, 3, 2));
    return v;
}

inline TangentVector constant_tangent(std::initializer_list<long> cs) {
    TangentVector v;
    for (long c : cs) v.b.emplace_back(Rational(c), "z");
    return v;
}

inline CoverModel rank1(std::initializer_list<long> q_coeffs) {
    return build_cover(LieType::A, 1, {-P(q_coeffs)});
}

// Closed form at a simple branch point (mu, z0) with local model
// a (lambda - mu)^2 + b (z - z0) + ... = 0:
//   2 B_beta(mu, z0) B_gamma(mu, z0) B_delta(mu, z0) / (a b^2).
// Derived by hand from the two-sheet model; evaluates the invariants directly.
inline Rational eval_char(const std::vector<ZPoly>& c, const Rational& lambda, const Rational& z, int derivative_lambda,
                          bool derivative_z) {
    const int n = static_cast<int>(c.size()) + 1;
    std::vector<Rational> coeff(static_cast<std::size_t>(n + 1));  // coefficient of lambda^e
    coeff[static_cast<std::size_t>(n)] = derivative_z ? Rational(0) : Rational(1);
    for (int k = 2; k <= n; ++k) {
        const ZPoly& ck = c[static_cast<std::size_t>(k - 2)];
        coeff[static_cast<std::size_t>(n - k)] = derivative_z ? ck.derivative()(z) : ck(z);
    }
    Rational acc(0);
    for (int e = derivative_lambda; e <= n; ++e) {
        Rational falling(1);
        for (int i = 0; i < derivative_lambda; ++i) falling *= Rational(e - i);
        Rational power(1);
        for (int i = 0; i < e - derivative_lambda; ++i) power *= lambda;
        acc += coeff[static_cast<std::size_t>(e)] * falling * power;
    }
    return acc;
}

inline Rational eval_b(const TangentVector& v, const Rational& lambda, const Rational& z) {
    const int n = static_cast<int>(v.b.size()) + 1;
    Rational acc(0);
    for (int k = 2; k <= n; ++k) {
        Rational power(1);
        for (int i = 0; i < n - k; ++i) power *= lambda;
        acc += v.b[static_cast<std::size_t>(k - 2)](z) * power;
    }
    return acc;
}

inline Rational hand_oracle(const CoverModel& cover, const BranchPoint& bp, const TangentVector& beta,
                            const TangentVector& gamma, const TangentVector& delta) {
    const Rational a = eval_char(cover.invariants, bp.mu, bp.z0, 2, false) / Rational(2);
    const Rational b = eval_char(cover.invariants, bp.mu, bp.z0, 0, true);
    return Rational(2) * eval_b(beta, bp.mu, bp.z0) * eval_b(gamma, bp.mu, bp.z0) * eval_b(delta, bp.mu, bp.z0) /
           (a * b * b);
}

}  // namespace cameral::testing
