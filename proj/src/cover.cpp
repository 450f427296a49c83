#include "cameral/cover.hpp"

#include <algorithm>

namespace cameral {

namespace {

const char* const kLambda = "lambda";

ZPoly as_z(const ZPoly& p) { return p.with_var("z"); }

Rational eval2(const LambdaPoly& p, const Rational& lambda, const Rational& z) { return fiber_polynomial(p, z)(lambda); }

LambdaPoly z_derivative(const LambdaPoly& p) {
    std::vector<ZPoly> cs;
    for (const auto& c : p.coeffs()) cs.push_back(c.derivative());
    return LambdaPoly(std::move(cs), p.var());
}

/// Q(x, s) = P(base + x, z0 + s), as a polynomial in x with coefficients in s.
LambdaPoly recentre(const LambdaPoly& p, const Rational& base, const Rational& z0) {
    const LambdaPoly shifted = p.shift(ZPoly(base, "z"));
    std::vector<ZPoly> cs;
    for (const auto& c : shifted.coeffs()) cs.push_back(c.shift(z0));
    return LambdaPoly(std::move(cs), p.var());
}

/// Horner evaluation of Q(x, s(t)) for an x series, keeping t^(<cap).
template <class T>
Series<T> evaluate_truncated(const std::vector<Series<T>>& q_of_t, const Series<T>& x, int cap) {
    Series<T> acc = q_of_t.back().truncated(cap);
    for (std::size_t i = q_of_t.size() - 1; i-- > 0;) acc = (acc * x + q_of_t[i]).truncated(cap);
    return acc;
}

QSeries colliding_sheet(const LambdaPoly& q, const Rational& mu, const Rational& radicand, int sign, int n_known) {
    // lambda = mu + t y(t); y_k = -[t^(k+2)] Q(t y_(<k), t^2) / (2 a y_0).
    std::vector<QSeries> q_of_t;
    for (const auto& c : q.coeffs()) q_of_t.push_back(Series<Rational>::from_poly(c).stretch(2).cast<QuadExt>());
    const QuadExt a = QuadExt(q.coeff(2).coeff(0));
    const QuadExt y0 = QuadExt::sqrt_of(radicand) * QuadExt(sign);
    const QuadExt denom = QuadExt(2) * a * y0;
    std::vector<QuadExt> y{y0};
    for (int k = 1; k < n_known - 1; ++k) {
        const QSeries ty(1, y, kExact);
        const QSeries g = evaluate_truncated(q_of_t, ty, k + 3);
        y.push_back(-(g.coeff(k + 2) / denom));
    }
    return QSeries(1, std::move(y), n_known) + QSeries(QuadExt(mu));
}

QSeries spectator_sheet(const LambdaPoly& q, const Rational& rho, int n_known) {
    // Simple root: lambda = rho + x(s), x_k = -[s^k] Q(x_(<k), s) / Q_x(0, 0), s = t^2.
    std::vector<Series<Rational>> q_of_s;
    for (const auto& c : q.coeffs()) q_of_s.push_back(Series<Rational>::from_poly(c));
    const Rational c = q.coeff(1).coeff(0);
    const int m = (n_known + 1) / 2;
    std::vector<Rational> x{Rational(0)};
    for (int k = 1; k < m; ++k) {
        const Series<Rational> xs(0, x, kExact);
        const Series<Rational> g = evaluate_truncated(q_of_s, xs, k + 1);
        x.push_back(-(g.coeff(k) / c));
    }
    const Series<Rational> in_s(0, std::move(x), m);
    return (in_s.stretch(2).truncated(n_known) + Series<Rational>(rho)).cast<QuadExt>();
}

}  // namespace

LambdaPoly characteristic_polynomial(const std::vector<ZPoly>& invariants) {
    const std::size_t n = invariants.size() + 1;
    std::vector<ZPoly> cs(n + 1, ZPoly(std::vector<Rational>{}, "z"));
    cs[n] = ZPoly(Rational(1), "z");
    for (std::size_t k = 2; k <= n; ++k) cs[n - k] = as_z(invariants[k - 2]);
    return LambdaPoly(std::move(cs), kLambda);
}

ZPoly fiber_polynomial(const LambdaPoly& p, const Rational& z) {
    std::vector<Rational> cs;
    for (const auto& c : p.coeffs()) cs.push_back(c(z));
    return ZPoly(std::move(cs), kLambda);
}

CoverModel build_cover(LieType type, int rank, std::vector<ZPoly> invariants) {
    if (type != LieType::A)
        throw InputError("cover geometry is only available for lie_type A (got " + to_string(type) + ")");
    if (static_cast<int>(invariants.size()) != rank)
        throw InputError("type A rank " + std::to_string(rank) + " needs " + std::to_string(rank) +
                         " invariants, got " + std::to_string(invariants.size()));
    if (std::all_of(invariants.begin(), invariants.end(), [](const ZPoly& c) { return c.is_constant(); }))
        throw InputError("all invariants are constant: the cover does not vary over the chart");

    CoverModel cover;
    cover.root_system = build_root_system(type, rank);
    for (auto& c : invariants) c = as_z(c);
    cover.invariants = std::move(invariants);
    cover.char_poly = characteristic_polynomial(cover.invariants);
    cover.disc = as_z(char_discriminant(cover.char_poly));

    const ZPoly& d = cover.disc;
    if (d.is_zero()) throw NonSimpleBranch("the discriminant vanishes identically: two sheets coincide everywhere");
    if (d.is_constant()) return cover;
    const ZPoly repeated = gcd(d, d.derivative());
    if (!repeated.is_constant())
        throw NonSimpleBranch("the discriminant " + d.str() + " has a repeated factor " + repeated.str() +
                              ": some branch point is not simple");
    const RationalRoots roots = rational_roots(d);
    if (roots.remaining_degree > 0)
        throw IrrationalBranchPoint("the discriminant " + d.str() + " has a factor of degree " +
                                    std::to_string(roots.remaining_degree) +
                                    " with no rational roots; choose invariants whose discriminant splits over Q");

    const LambdaPoly p_lambda2 = cover.char_poly.derivative().derivative();
    const LambdaPoly p_z = z_derivative(cover.char_poly);
    for (const auto& root : roots.roots) {
        BranchPoint bp;
        bp.z0 = root.value;
        const ZPoly f = fiber_polynomial(cover.char_poly, bp.z0);
        const ZPoly g = gcd(f, f.derivative());
        if (g.degree() != 1)
            throw NonSimpleBranch("at z = " + bp.z0.str() + " the fiber " + f.str() + " is not a single double root");
        bp.mu = -g.coeff(0);
        const ZPoly line(std::vector<Rational>{-bp.mu, Rational(1)}, kLambda);
        const RationalRoots rest = rational_roots(exact_div(f, line * line));
        if (rest.remaining_degree > 0)
            throw IrrationalBranchPoint("at z = " + bp.z0.str() + " the spectator sheets are irrational");
        for (const auto& r : rest.roots) {
            if (r.multiplicity != 1 || r.value == bp.mu)
                throw NonSimpleBranch("at z = " + bp.z0.str() + " more than two sheets meet");
            bp.spectators.push_back(r.value);
        }
        const Rational a = eval2(p_lambda2, bp.mu, bp.z0) / Rational(2);
        const Rational b = eval2(p_z, bp.mu, bp.z0);
        if (a.is_zero() || b.is_zero())
            throw NonSimpleBranch("the cover is singular over z = " + bp.z0.str());
        bp.radicand = -b / a;
        cover.branch_points.push_back(std::move(bp));
    }
    return cover;
}

const ZPoly& global_discriminant(const CoverModel& cover) { return cover.disc; }

int genus(const CoverModel& cover) {
    if (cover.root_system.rank != 1) throw InputError("genus is only reported for rank 1 (hyperelliptic) covers");
    const int d = cover.invariants[0].degree();
    return (d + 1) / 2 - 1;
}

Series<Rational> chart_pullback(const ZPoly& f, const Rational& z0) {
    return Series<Rational>::from_poly(f.shift(z0)).stretch(2);
}

QSeries char_poly_on_sheet(const LambdaPoly& p, const QSeries& lambda, const Rational& z0) {
    QSeries acc;
    for (std::size_t i = p.coeffs().size(); i-- > 0;)
        acc = acc * lambda + chart_pullback(p.coeffs()[i], z0).cast<QuadExt>();
    return acc;
}

SheetExpansion sheet_expansions(const CoverModel& cover, const BranchPoint& bp, int order) {
    if (order < 4) throw InputError("expansion order must be at least 4 (got " + std::to_string(order) + ")");
    const int n_known = order + 1;
    SheetExpansion out;
    out.branch_point = bp;
    out.order = order;
    const LambdaPoly at_mu = recentre(cover.char_poly, bp.mu, bp.z0);
    out.sheets.push_back(colliding_sheet(at_mu, bp.mu, bp.radicand, 1, n_known));
    out.sheets.push_back(colliding_sheet(at_mu, bp.mu, bp.radicand, -1, n_known));
    for (const auto& rho : bp.spectators)
        out.sheets.push_back(spectator_sheet(recentre(cover.char_poly, rho, bp.z0), rho, n_known));
    for (const auto& s : out.sheets)
        if (!char_poly_on_sheet(cover.char_poly, s, bp.z0).is_known_zero())
            throw InternalAssertion("sheet expansion at z = " + bp.z0.str() + " does not solve the cover equation");
    return out;
}

Series<Rational> require_rational(const QSeries& s, const std::string& what) {
    return s.map([&](const QuadExt& c) {
        if (!c.is_rational())
            throw InternalAssertion(what + " has an irrational coefficient " + c.str() + " (sqrt did not cancel)");
        return c.base();
    });
}

}  // namespace cameral
