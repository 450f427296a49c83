#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cameral/exact.hpp"
#include "cameral/rootsys.hpp"

namespace cameral {

using ZPoly = Poly<Rational>;
/// Polynomial in lambda whose coefficients are polynomials in z.
using LambdaPoly = Poly<ZPoly>;
using QSeries = Series<QuadExt>;

/// A simple zero of the discriminant: two sheets meet in a double root mu,
/// the remaining sheets pass through the spectator roots.
struct BranchPoint {
    Rational z0;
    std::pair<int, int> colliding_pair{0, 1};
    Rational mu;
    std::vector<Rational> spectators;
    /// lambda_pm = mu +- t sqrt(radicand) + O(t^2) in the chart z = z0 + t^2.
    Rational radicand;
};

/// Spectral model of a type-A cameral cover on the affine z-line:
/// lambda^n + c_2 lambda^(n-2) + ... + c_n = 0.
struct CoverModel {
    RootSystem root_system;
    std::vector<ZPoly> invariants;  // c_2 .. c_n
    LambdaPoly char_poly;
    ZPoly disc;  // Res_lambda(P, dP/dlambda)
    std::vector<BranchPoint> branch_points;  // sorted by z0

    int sheets() const { return root_system.rank + 1; }
};

/// Characteristic polynomial lambda^n + sum c_k lambda^(n-k) with the
/// lambda^(n-1) term absent.
LambdaPoly characteristic_polynomial(const std::vector<ZPoly>& invariants);

/// Throws InputError for non-type-A input, a wrong invariant count or all
/// invariants constant; NonSimpleBranch when the discriminant vanishes
/// identically or has a repeated zero; IrrationalBranchPoint when a branch
/// point or a spectator root is not rational.
CoverModel build_cover(LieType type, int rank, std::vector<ZPoly> invariants);

/// The discriminant polynomial of the cover.
const ZPoly& global_discriminant(const CoverModel& cover);

/// Genus of the smooth model of lambda^2 = q(z), deg q = 2g+1 or 2g+2.
/// Rank 1 only.
int genus(const CoverModel& cover);

/// f(z0 + t^2) as an exact series in t.
Series<Rational> chart_pullback(const ZPoly& f, const Rational& z0);

/// Sheets at a branch point in the chart z = z0 + t^2, each known modulo
/// t^(order+1). Order is [lambda_+, lambda_-, spectators...]; lambda_- is
/// computed independently with the opposite sign of sqrt(radicand).
struct SheetExpansion {
    BranchPoint branch_point;
    int order = 0;
    std::vector<QSeries> sheets;
};

/// Throws InputError for order < 4.
SheetExpansion sheet_expansions(const CoverModel& cover, const BranchPoint& bp, int order);

/// P(lambda(t), z0 + t^2) for a sheet candidate lambda.
QSeries char_poly_on_sheet(const LambdaPoly& p, const QSeries& lambda, const Rational& z0);

/// Coefficient-wise rational view of a series; throws InternalAssertion when a
/// sqrt(radicand) component survives.
Series<Rational> require_rational(const QSeries& s, const std::string& what);

/// P(., z) as a polynomial in lambda with rational coefficients.
ZPoly fiber_polynomial(const LambdaPoly& p, const Rational& z);

}  // namespace cameral
