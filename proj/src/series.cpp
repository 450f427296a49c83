#include "cameral/exact/series.hpp"

namespace cameral {

Series<QuadExt> series_sqrt(const Series<Rational>& s) {
    if (s.is_known_zero()) throw MathError("series_sqrt of a series with no known nonzero coefficient");
    const int v = s.val();
    if (v % 2 != 0)
        throw MathError("series_sqrt needs an even leading exponent (got " + std::to_string(v) +
                        "); substitute a ramified coordinate first");
    const Rational c = s.lead();
    const Rational inv_c = inverse(c);
    // sqrt(u) for u = s / (c t^v) = 1 + u_1 t + ..., via r_k = (u_k - sum r_i r_{k-i}) / 2.
    const int terms = s.is_exact() ? (s.last_exponent() == v ? 1 : -1) : s.precision() - v;
    if (terms < 0) throw MathError("series_sqrt of an exact non-monomial series needs a truncation order");
    std::vector<Rational> r(static_cast<std::size_t>(terms));
    r[0] = Rational(1);
    for (int k = 1; k < terms; ++k) {
        Rational acc = s.coeff(v + k) * inv_c;
        for (int i = 1; i < k; ++i) acc -= r[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(k - i)];
        r[static_cast<std::size_t>(k)] = acc / Rational(2);
    }
    const QuadExt root = QuadExt::sqrt_of(c);
    std::vector<QuadExt> out;
    out.reserve(r.size());
    for (const auto& x : r) out.push_back(root * QuadExt(x));
    const int prec = s.is_exact() ? kExact : v / 2 + terms;
    return Series<QuadExt>(v / 2, std::move(out), prec);
}

}  // namespace cameral
