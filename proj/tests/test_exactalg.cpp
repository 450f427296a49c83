#include "doctest.h"
#include "support.hpp"

using namespace cameral;
using cameral::testing::Gen;
using cameral::testing::P;

namespace {

using RSeries = Series<Rational>;

RSeries rs(int start, std::initializer_list<long> cs, int prec) {
    std::vector<Rational> v;
    for (long c : cs) v.emplace_back(c);
    return RSeries(start, std::move(v), prec);
}

RSeries random_series(Gen& g, int start, int terms, int prec) {
    std::vector<Rational> v;
    v.push_back(g.nonzero_rational());
    for (int i = 1; i < terms; ++i) v.push_back(g.rational());
    return RSeries(start, std::move(v), prec);
}

}  // namespace

TEST_CASE("rational parse and print round trip") {
    CHECK(Rational::parse("3/6")->str() == "1/2");
    CHECK(Rational::parse("-4")->str() == "-4");
    CHECK(Rational::parse("+7/1")->str() == "7");
    CHECK_FALSE(Rational::parse("1.5"));
    CHECK_FALSE(Rational::parse("1/0"));
    CHECK_FALSE(Rational::parse(" 1"));
    CHECK_FALSE(Rational::parse(""));
    CHECK_FALSE(Rational::parse("1/-2"));
    Gen g(7);
    for (int i = 0; i < 100; ++i) {
        const Rational r = g.rational(1000, 97);
        CHECK(*Rational::parse(r.str()) == r);
    }
    CHECK_THROWS_AS(Rational(1) / Rational(0), MathError);
}

TEST_CASE("simplest rational between") {
    CHECK(simplest_between(Rational(1, 3), Rational(1, 2)) == Rational(1, 2));
    CHECK(simplest_between(Rational(2, 7), Rational(3, 8)) == Rational(1, 3));
    CHECK(simplest_between(Rational(-5, 2), Rational(-7, 3)) == Rational(-5, 2));
    CHECK(simplest_between(Rational(-1, 2), Rational(1, 2)) == Rational(0));
    CHECK(exact_sqrt(Rational(9, 16)) == Rational(3, 4));
    CHECK_FALSE(is_square(Rational(2)));
    CHECK_THROWS_AS(exact_sqrt(Rational(-4)), MathError);
}

TEST_CASE("ring axioms on random triples") {
    Gen g(11);
    for (int i = 0; i < 200; ++i) {
        const Rational a = g.rational(), b = g.rational(), c = g.rational();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);

        const DualNumber x(a, b), y(c, a), w(b, c);
        CHECK((x * y) * w == x * (y * w));
        CHECK(x * (y + w) == x * y + x * w);
        CHECK((x * y).slope() == a * a + b * c);

        const Rational m(g.integer(2, 7) == 4 ? 3 : g.integer(2, 7));
        const QuadExt p(a, b, m), q(c, a, m), r(b, c, m);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        if (!is_zero(p)) CHECK(p * inverse(p) == QuadExt(1));
    }
}

TEST_CASE("quadratic extension basics") {
    const QuadExt s2 = QuadExt::sqrt_of(Rational(2));
    CHECK(s2 * s2 == QuadExt(2));
    CHECK_FALSE(s2.is_rational());
    CHECK_THROWS_AS(s2.to_rational(), InternalAssertion);
    CHECK(QuadExt::sqrt_of(Rational(9, 4)).is_rational());
    CHECK(QuadExt::sqrt_of(Rational(9, 4)).to_rational() == Rational(3, 2));
    CHECK_THROWS_AS(s2 + QuadExt::sqrt_of(Rational(3)), MathError);
    CHECK(s2 + QuadExt(1) == QuadExt(1, 1, 2));
    CHECK((s2 + QuadExt(1)).norm() == Rational(-1));
}

TEST_CASE("polynomial arithmetic examples") {
    CHECK(gcd(P({-1, 0, 1}), P({-1, 1})) == P({-1, 1}));
    CHECK(P({0, 0, 0, 1}).derivative() == P({0, 0, 3}));
    const auto p = P({-1, 1}) * P({-1, 1}) * P({2, 1});
    CHECK(squarefree_part(p) == P({-1, 1}) * P({2, 1}));
    const auto dec = squarefree_decomposition(p);
    REQUIRE(dec.size() == 2);
    CHECK(dec[0] == P({2, 1}));
    CHECK(dec[1] == P({-1, 1}));
    CHECK_THROWS_AS(divmod(P({1, 1}), Poly<Rational>()), MathError);
    CHECK_THROWS_AS(P({0, 1}, "z") + P({0, 1}, "w"), MathError);

    Gen g(3);
    for (int i = 0; i < 100; ++i) {
        const auto a = g.poly(6), b = g.poly(4);
        if (b.is_zero()) continue;
        const auto [q, r] = divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("resultant examples") {
    CHECK(resultant(P({-1, 0, 1}), P({-2, 1})) == Rational(3));
    // Sign symmetry Res(p,q) = (-1)^(deg p deg q) Res(q,p), tested on random input.
    Gen g(5);
    for (int i = 0; i < 60; ++i) {
        const auto p = g.poly(4), q = g.poly(4);
        if (p.degree() < 1 || q.degree() < 1) continue;
        const int sign = (p.degree() * q.degree()) % 2 == 0 ? 1 : -1;
        CHECK(resultant(p, q) == resultant(q, p) * Rational(sign));
        CHECK(resultant(p, q) == testing::oracle_resultant(p, q));
    }
}

TEST_CASE("Berkowitz determinant agrees with cofactor expansion") {
    Gen g(13);
    for (int n = 1; n <= 6; ++n)
        for (int rep = 0; rep < 10; ++rep) {
            Matrix<Rational> m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
            for (auto& row : m)
                for (auto& x : row) x = g.rational(6, 3);
            CHECK(berkowitz_determinant(m) == testing::cofactor_determinant(m));
        }
}

TEST_CASE("resultant over dual-number polynomial coefficients") {
    using D = Dual<Poly<Rational>>;
    const Poly<Rational> z = Poly<Rational>::variable("z");
    // lambda^2 - (z + eps), against 2 lambda.
    const Poly<D> p(std::vector<D>{D(-z, Poly<Rational>(Rational(-1))), D(0), D(1)}, "lambda");
    const Poly<D> q(std::vector<D>{D(0), D(2)}, "lambda");
    const D res = resultant(p, q);
    // Hand expansion of the 3x3 Sylvester determinant: -4(z + eps).
    CHECK(res.value() == z * Rational(-4));
    CHECK(res.slope() == Poly<Rational>(Rational(-4)));
    CHECK(res == testing::oracle_resultant(p, q));
}

TEST_CASE("characteristic discriminants under the Res(P, P') convention") {
    using PZ = Poly<Rational>;
    const PZ z = PZ::variable("z");
    auto lam = [](std::vector<PZ> cs) { return Poly<PZ>(std::move(cs), "lambda"); };
    CHECK(char_discriminant(lam({-z, PZ(0), PZ(1)})) == z * Rational(-4));
    CHECK(char_discriminant(lam({-(z * z - PZ(1)), PZ(0), PZ(1)})) == (z * z - PZ(1)) * Rational(-4));
    CHECK(char_discriminant(lam({z * Rational(2), PZ(-3), PZ(0), PZ(1)})) == (z * z * Rational(108) - PZ(108)));
    Gen g(17);
    for (int i = 0; i < 20; ++i) {
        const Rational p = g.rational(), q = g.rational();
        const Poly<Rational> cubic(std::vector<Rational>{q, p, Rational(0), Rational(1)}, "lambda");
        CHECK(char_discriminant(cubic) == Rational(4) * p * p * p + Rational(27) * q * q);
    }
}

TEST_CASE("resultant multiplicativity") {
    Gen g(19);
    for (int i = 0; i < 40; ++i) {
        const auto p = g.monic_poly(static_cast<int>(g.integer(1, 4)));
        const auto q = g.monic_poly(static_cast<int>(g.integer(1, 4)));
        const auto r = g.monic_poly(static_cast<int>(g.integer(1, 4)));
        CHECK(resultant(p * q, r) == resultant(p, r) * resultant(q, r));
    }
}

TEST_CASE("rational roots") {
    auto rr = rational_roots(P({-1, 0, 1}));
    REQUIRE(rr.roots.size() == 2);
    CHECK(rr.roots[0] == RationalRoot{Rational(-1), 1});
    CHECK(rr.roots[1] == RationalRoot{Rational(1), 1});
    CHECK(rr.remaining_degree == 0);

    rr = rational_roots(P({0, 0, 1}));
    REQUIRE(rr.roots.size() == 1);
    CHECK(rr.roots[0] == RationalRoot{Rational(0), 2});

    rr = rational_roots(P({-2, 0, 1}));
    CHECK(rr.roots.empty());
    CHECK(rr.remaining_degree == 2);

    // Random products of linear factors times an irreducible quadratic.
    Gen g(23);
    for (int i = 0; i < 40; ++i) {
        const auto roots = g.distinct_rationals(static_cast<int>(g.integer(1, 4)), 9, 5);
        auto p = testing::poly_from_roots(roots, g.nonzero_rational(7, 3));
        const bool doubled = g.integer(0, 1) == 1;
        if (doubled) p = p * Poly<Rational>(std::vector<Rational>{-roots[0], Rational(1)}, "z");
        p = p * P({3, 0, 1});
        const auto found = rational_roots(p);
        CHECK(found.remaining_degree == 2);
        auto sorted = roots;
        std::sort(sorted.begin(), sorted.end());
        REQUIRE(found.roots.size() == sorted.size());
        for (std::size_t k = 0; k < sorted.size(); ++k) {
            CHECK(found.roots[k].value == sorted[k]);
            CHECK(found.roots[k].multiplicity == ((doubled && sorted[k] == roots[0]) ? 2 : 1));
        }
    }
    CHECK(count_real_roots(P({-2, 0, 1}), Rational(0), Rational(2)) == 1);
}

TEST_CASE("series arithmetic tracks precision") {
    const RSeries a = rs(0, {1, 1}, 5);  // 1 + t + O(t^5)
    const RSeries inv = inverse(a);
    CHECK(inv.precision() == 5);
    CHECK(inv == rs(0, {1, -1, 1, -1, 1}, 5));
    CHECK_THROWS_AS(inv.coeff(5), TruncationError);
    CHECK_THROWS_AS(inverse(rs(0, {1, 1}, kExact)), MathError);
    CHECK(inverse(rs(2, {3}, kExact)) == RSeries::monomial(Rational(1, 3), -2));
    const RSeries prod = rs(-1, {1}, kExact) * a;  // t^-1 + 1 + O(t^4)
    CHECK(prod.precision() == 4);
    CHECK(prod.coeff(-1) == Rational(1));
    CHECK((a - a).is_known_zero());
    CHECK((a - a).precision() == 5);
}

TEST_CASE("series square roots") {
    // sqrt(1 + s) = 1 + s/2 - s^2/8 + s^3/16 ...
    const auto r = series_sqrt(rs(0, {1, 1}, 4));
    CHECK(r.coeff(0) == QuadExt(1));
    CHECK(r.coeff(1) == QuadExt(Rational(1, 2)));
    CHECK(r.coeff(2) == QuadExt(Rational(-1, 8)));
    CHECK(r.coeff(3) == QuadExt(Rational(1, 16)));
    CHECK(series_sqrt(rs(2, {4}, kExact)) == Series<QuadExt>::monomial(QuadExt(2), 1));
    // sqrt(2 + s) = sqrt2 (1 + s/4 - s^2/32); squaring must return 2 + s.
    const auto r2 = series_sqrt(rs(0, {2, 1}, 3));
    CHECK(r2.coeff(0) == QuadExt::sqrt_of(Rational(2)));
    CHECK(r2.coeff(1) == QuadExt::sqrt_of(Rational(2)) * QuadExt(Rational(1, 4)));
    CHECK(r2.coeff(2) == QuadExt::sqrt_of(Rational(2)) * QuadExt(Rational(-1, 32)));
    CHECK(r2 * r2 == rs(0, {2, 1}, 3).cast<QuadExt>());
    CHECK_THROWS_AS(series_sqrt(rs(1, {1}, 5)), MathError);

    Gen g(29);
    for (int i = 0; i < 40; ++i) {
        const int v = 2 * static_cast<int>(g.integer(-2, 2));
        const RSeries s = random_series(g, v, 8, v + 8);
        const auto root = series_sqrt(s);
        CHECK(root * root == s.cast<QuadExt>());
    }
}

TEST_CASE("composition and reversion") {
    const RSeries t = RSeries::variable();
    const RSeries one(Rational(1));
    CHECK(compose(rs(2, {1}, kExact), t + one) == rs(0, {1, 2, 1}, kExact));
    const RSeries s = rs(1, {1, 1}, 6);
    const RSeries r = reversion(s);
    CHECK(r == rs(1, {1, -1, 2, -5, 14}, 6));
    CHECK(agree(compose(r, s), t.truncated(6)));
    CHECK(agree(compose(s, r), t.truncated(6)));
    CHECK(reversion(rs(1, {2}, kExact)) == RSeries::monomial(Rational(1, 2), 1));
    CHECK_THROWS_AS(reversion(rs(2, {1}, 6)), MathError);

    Gen g(31);
    for (int i = 0; i < 20; ++i) {
        const RSeries a = random_series(g, 1, 7, 7);
        const RSeries b = reversion(a);
        CHECK(agree(compose(a, b), t.truncated(7)));
        CHECK(agree(compose(b, a), t.truncated(7)));
    }
}

TEST_CASE("residues") {
    CHECK(residue(LocalDifferential<Rational>(rs(-1, {3, 5, 1}, kExact), 1)) == Rational(3));
    CHECK(residue(LocalDifferential<Rational>(rs(-2, {1}, kExact), 1)) == Rational(0));
    // (f beta / lambda) d lambda with f = beta = 1.
    CHECK(residue(LocalDifferential<Rational>(rs(-1, {1}, kExact), 1)) == Rational(1));
    CHECK_THROWS_AS(residue(LocalDifferential<Rational>(rs(-3, {1}, -1), 1)), TruncationError);
    CHECK_THROWS_AS(residue(LocalDifferential<Rational>(rs(-1, {1}, kExact), 2)), MathError);

    CHECK(quadratic_residue(LocalDifferential<Rational>(rs(-2, {7, 1}, kExact), 2)) == Rational(7));
    // f (beta / lambda^2) (d lambda)^2 with f = beta = 1.
    CHECK(quadratic_residue(LocalDifferential<Rational>(rs(-2, {1}, kExact), 2)) == Rational(1));
    CHECK(quadratic_residue(LocalDifferential<Rational>(rs(0, {1, 4}, 5), 2)) == Rational(0));
    CHECK_THROWS_AS(quadratic_residue(LocalDifferential<Rational>(rs(-3, {1}, kExact), 2)), NonSimpleBranch);
}

TEST_CASE("residues are invariant under coordinate changes") {
    Gen g(37);
    for (int i = 0; i < 40; ++i) {
        // t = w u(w), u(0) != 0, u of degree <= 4.
        std::vector<Rational> u{g.nonzero_rational()};
        for (int k = 1; k <= 4; ++k) u.push_back(g.rational());
        const RSeries phi(1, u, 14);

        const LocalDifferential<Rational> one_form(random_series(g, -3, 8, 5), 1);
        CHECK(residue(one_form.pullback(phi)) == residue(one_form));

        const LocalDifferential<Rational> quad(random_series(g, -2, 8, 6), 2);
        CHECK(quadratic_residue(quad.pullback(phi)) == quadratic_residue(quad));
    }
}

TEST_CASE("residue theorem on the affine chart") {
    Gen g(41);
    for (int i = 0; i < 30; ++i) {
        const int n = static_cast<int>(g.integer(2, 5));
        const auto poles = g.distinct_rationals(n, 6, 3);
        const auto den = testing::poly_from_roots(poles, g.nonzero_rational());
        const auto num = g.poly(n - 2);
        Rational total(0);
        Rational oracle(0);
        for (const auto& a : poles) {
            // Expand num/den in w = z - a.
            const RSeries ns = RSeries::from_poly(num.shift(a));
            const RSeries ds = RSeries::from_poly(den.shift(a)).truncated(8);
            total += residue(LocalDifferential<Rational>(ns / ds, 1));
            oracle += num(a) / den.derivative()(a);
        }
        CHECK(total == Rational(0));
        CHECK(oracle == Rational(0));
    }
}
