#include "cameral/deform.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

namespace cameral {

namespace {

const char* const kLambda = "lambda";

void require_pole_order(const QSeries& s, int max_pole, const char* what, const Rational& z0) {
    if (!s.is_known_zero() && s.val() < -max_pole)
        throw InternalAssertion(std::string(what) + " at z = " + z0.str() + " has a pole of order " +
                                std::to_string(-s.val()) + " (expected at most " + std::to_string(max_pole) + ")");
}

// Rationals enumerated by height max(|p|, q), smallest first.
std::vector<Rational> rationals_of_height(long h) {
    std::vector<Rational> out;
    if (h == 0) return {Rational(0)};
    for (long q = 1; q <= h; ++q)
        for (long p = -h; p <= h; ++p) {
            if (std::max(std::labs(p), q) != h) continue;
            if (std::gcd(std::labs(p), q) != 1) continue;
            out.emplace_back(p, q);
        }
    return out;
}

}  // namespace

void check_tangent(const CoverModel& cover, const TangentVector& v) {
    if (v.b.size() != cover.invariants.size())
        throw InputError("a tangent vector needs " + std::to_string(cover.invariants.size()) +
                         " deformation polynomials, got " + std::to_string(v.b.size()));
}

LambdaPoly deformation_polynomial(const CoverModel& cover, const TangentVector& v) {
    check_tangent(cover, v);
    std::vector<ZPoly> b = v.b;
    for (auto& p : b) p = p.with_var("z");
    return characteristic_polynomial(b) - LambdaPoly::monomial(ZPoly(Rational(1), "z"), cover.sheets(), kLambda);
}

TangentVector operator+(const TangentVector& a, const TangentVector& b) {
    if (a.b.size() != b.b.size()) throw MathError("adding tangent vectors of different lengths");
    TangentVector out;
    for (std::size_t i = 0; i < a.b.size(); ++i) out.b.push_back(a.b[i].with_var("z") + b.b[i].with_var("z"));
    return out;
}

TangentVector operator*(const Rational& c, const TangentVector& v) {
    TangentVector out;
    for (const auto& p : v.b) out.b.push_back(p * c);
    return out;
}

BranchLocal prepare_branch(const CoverModel& cover, const BranchPoint& bp, int order) {
    BranchLocal local;
    local.expansion = sheet_expansions(cover, bp, order);
    const auto& sheets = local.expansion.sheets;
    const LambdaPoly dp = cover.char_poly.derivative();
    for (const auto& s : sheets) local.inv_dp.push_back(inverse(char_poly_on_sheet(dp, s, bp.z0)));
    local.inv_diff.assign(sheets.size(), std::vector<QSeries>(sheets.size()));
    for (std::size_t i = 0; i < sheets.size(); ++i)
        for (std::size_t j = 0; j < sheets.size(); ++j)
            if (i != j) local.inv_diff[i][j] = inverse(sheets[i] - sheets[j]);
    local.inv_sheet_speed = inverse(sheets[0].derivative() - sheets[1].derivative());
    local.inv_disc = inverse(chart_pullback(cover.disc, bp.z0).truncated(order + 2));
    return local;
}

std::vector<BranchLocal> prepare_branches(const CoverModel& cover, int order) {
    std::vector<BranchLocal> out;
    for (const auto& bp : cover.branch_points) out.push_back(prepare_branch(cover, bp, order));
    return out;
}

CartanVector<QSeries> sheet_variation(const CoverModel& cover, const BranchLocal& local, const TangentVector& v) {
    const LambdaPoly b = deformation_polynomial(cover, v);
    const auto& sheets = local.expansion.sheets;
    const Rational& z0 = local.branch_point().z0;
    CartanVector<QSeries> out;
    for (std::size_t i = 0; i < sheets.size(); ++i) {
        out.coords.push_back(char_poly_on_sheet(b, sheets[i], z0) * local.inv_dp[i]);
        require_pole_order(out.coords.back(), i < 2 ? 1 : 0, "a sheet variation", z0);
    }
    return out;
}

Series<Rational> ks_cocycle(const CoverModel& cover, const BranchLocal& local, const TangentVector& v) {
    const auto dl = sheet_variation(cover, local, v);
    const QSeries theta = (dl.coords[0] - dl.coords[1]) * local.inv_sheet_speed * QuadExt(2);
    require_pole_order(theta, 1, "the Kodaira-Spencer field", local.branch_point().z0);
    return require_rational(theta, "the Kodaira-Spencer field");
}

Series<Rational> ks_cocycle_local(const ZPoly& q, const ZPoly& b, const Rational& z0, int order) {
    if (!q(z0).is_zero()) throw InputError("z0 = " + z0.str() + " is not a zero of q");
    if (q.derivative()(z0).is_zero()) throw NonSimpleBranch("z0 = " + z0.str() + " is a multiple zero of q");
    const int p = order + 3;
    const QSeries lambda = series_sqrt(chart_pullback(q, z0).truncated(p));
    const QSeries theta =
        chart_pullback(b, z0).cast<QuadExt>() * inverse(lambda) * inverse(lambda.derivative());
    return require_rational(theta, "the local Kodaira-Spencer field");
}

Rational RationalFunction::operator()(const Rational& z) const {
    const Rational d = den(z);
    if (d.is_zero()) throw MathError("rational function evaluated at a pole z = " + z.str());
    return num(z) / d;
}

RationalFunction discriminant_ratio(const CoverModel& cover, const TangentVector& v) {
    using D = Dual<ZPoly>;
    const LambdaPoly b = deformation_polynomial(cover, v);
    std::vector<D> cs;
    for (int i = 0; i <= cover.char_poly.degree(); ++i) cs.emplace_back(cover.char_poly.coeff(i), -b.coeff(i));
    const D disc = char_discriminant(Poly<D>(std::move(cs), kLambda));
    return {disc.slope().with_var("z"), disc.value().with_var("z")};
}

std::optional<SplitPoint> split_fiber(const CoverModel& cover, const Rational& z) {
    if (cover.disc(z).is_zero()) return std::nullopt;
    const ZPoly f = fiber_polynomial(cover.char_poly, z);
    const RationalRoots rr = rational_roots(f);
    SplitPoint out{z, {}};
    ZPoly rest = f;
    for (const auto& r : rr.roots) {
        out.roots.emplace_back(r.value);
        rest = exact_div(rest, ZPoly(std::vector<Rational>{-r.value, Rational(1)}, kLambda));
    }
    if (rest.degree() > 2) return std::nullopt;
    if (rest.degree() == 2) {
        // Monic quadratic x^2 + b x + c: (-b +- sqrt(b^2 - 4c)) / 2.
        const Rational bq = rest.coeff(1), cq = rest.coeff(0);
        const Rational d = bq * bq - Rational(4) * cq;
        out.roots.emplace_back(-bq / Rational(2), Rational(1, 2), d);
        out.roots.emplace_back(-bq / Rational(2), Rational(-1, 2), d);
    }
    return out;
}

std::vector<SplitPoint> find_split_points(const CoverModel& cover, int count) {
    std::vector<SplitPoint> out;
    std::set<Rational> seen;
    auto consider = [&](const Rational& z) {
        if (static_cast<int>(out.size()) >= count || !seen.insert(z).second) return;
        if (auto p = split_fiber(cover, z)) out.push_back(std::move(*p));
    };
    for (long h = 0; h <= 40 && static_cast<int>(out.size()) < count; ++h) {
        for (const auto& z : rationals_of_height(h)) consider(z);
        if (cover.sheets() <= 2) continue;
        // Fibers containing a prescribed rational sheet lambda1.
        for (const auto& l1 : rationals_of_height(h)) {
            ZPoly in_z(std::vector<Rational>{}, "z");
            for (int i = cover.char_poly.degree(); i >= 0; --i) in_z = in_z * ZPoly(l1, "z") + cover.char_poly.coeff(i);
            if (in_z.is_constant()) continue;
            for (const auto& r : rational_roots(in_z).roots) consider(r.value);
        }
    }
    return out;
}

Rational discriminant_ratio_via_roots(const CoverModel& cover, const TangentVector& v, const SplitPoint& point) {
    const ZPoly b = fiber_polynomial(deformation_polynomial(cover, v), point.z);
    const ZPoly dp = fiber_polynomial(cover.char_poly, point.z).derivative();
    std::vector<QuadExt> dl;
    for (const auto& r : point.roots) dl.push_back(b.evaluate(r) / dp.evaluate(r));
    QuadExt sum(0);
    for (std::size_t i = 0; i < dl.size(); ++i)
        for (std::size_t j = 0; j < dl.size(); ++j)
            if (i != j) sum += (dl[i] - dl[j]) / (point.roots[i] - point.roots[j]);
    if (!sum.is_rational()) throw InternalAssertion("root-sum discriminant ratio is irrational at z = " + point.z.str());
    return sum.base();
}

FirstOrderCheck verify_first_order_family(const CoverModel& cover, const TangentVector& v) {
    const RationalFunction ratio = discriminant_ratio(cover, v);
    const LambdaPoly b = deformation_polynomial(cover, v);
    FirstOrderCheck out;
    out.value = ratio.den;
    out.slope = ratio.num;
    const int samples = 2 * cover.sheets();
    std::vector<ZPoly> values;
    for (int h = 0; h < samples; ++h) values.push_back(char_discriminant(cover.char_poly - b * Rational(h)).with_var("z"));
    // Derivative at 0 of the Lagrange interpolant through (h, values[h]).
    ZPoly slope(std::vector<Rational>{}, "z");
    for (int k = 0; k < samples; ++k) {
        Rational denom(1);
        for (int j = 0; j < samples; ++j)
            if (j != k) denom *= Rational(k - j);
        Rational deriv(0);
        for (int m = 0; m < samples; ++m) {
            if (m == k) continue;
            Rational prod(1);
            for (int j = 0; j < samples; ++j)
                if (j != k && j != m) prod *= Rational(-j);
            deriv += prod;
        }
        slope += values[static_cast<std::size_t>(k)] * (deriv / denom);
    }
    out.interpolated_slope = slope;
    out.value_matches = values[0] == out.value;
    out.slope_matches = slope == out.slope;
    return out;
}

}  // namespace cameral
