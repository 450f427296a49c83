#pragma once

#include <optional>
#include <vector>

#include "cameral/cover.hpp"

namespace cameral {

/// First-order deformation of the invariants: c_k -> c_k + eps b_k. The
/// deformed cover is P - eps B = 0 with B(lambda, z) = sum_k b_k lambda^(n-k).
struct TangentVector {
    std::vector<ZPoly> b;  // b_2 .. b_n
};

/// Throws InputError when the length does not match the cover.
void check_tangent(const CoverModel& cover, const TangentVector& v);

LambdaPoly deformation_polynomial(const CoverModel& cover, const TangentVector& v);

TangentVector operator+(const TangentVector& a, const TangentVector& b);
TangentVector operator*(const Rational& c, const TangentVector& v);

/// Per-branch-point data shared by every deformation: sheets plus the
/// reciprocals that the evaluators divide by.
struct BranchLocal {
    SheetExpansion expansion;
    std::vector<QSeries> inv_dp;  // 1 / dP/dlambda(lambda_i(t), z0 + t^2)
    std::vector<std::vector<QSeries>> inv_diff;  // 1 / (lambda_i - lambda_j), i != j
    QSeries inv_sheet_speed;  // 1 / (lambda_+' - lambda_-')
    Series<Rational> inv_disc;  // 1 / D(z0 + t^2)

    const BranchPoint& branch_point() const { return expansion.branch_point; }
    int order() const { return expansion.order; }
};

BranchLocal prepare_branch(const CoverModel& cover, const BranchPoint& bp, int order);
std::vector<BranchLocal> prepare_branches(const CoverModel& cover, int order);

/// delta lambda_i = B(lambda_i, z) / dP/dlambda(lambda_i, z) on every sheet,
/// in the chart z = z0 + t^2. Colliding sheets have a simple pole in t,
/// spectators are regular; both are checked.
CartanVector<QSeries> sheet_variation(const CoverModel& cover, const BranchLocal& local, const TangentVector& v);

/// Kodaira-Spencer vector field theta(t) d/dt at a branch point,
/// theta = 2 (delta lambda_+ - delta lambda_-) / (lambda_+' - lambda_-').
/// In the local model lambda^2 = q + eps b this is (b / lambda) d/dlambda.
Series<Rational> ks_cocycle(const CoverModel& cover, const BranchLocal& local, const TangentVector& v);

/// (b / lambda) d/dlambda for lambda^2 = q(z), transported to the chart
/// z = z0 + t^2 through lambda = sqrt(q(z0 + t^2)). Known modulo t^order.
Series<Rational> ks_cocycle_local(const ZPoly& q, const ZPoly& b, const Rational& z0, int order);

/// d_eps D(P - eps B) / D(P) as numerator and denominator polynomials in z
/// (not reduced).
struct RationalFunction {
    ZPoly num;
    ZPoly den;

    Rational operator()(const Rational& z) const;
};
RationalFunction discriminant_ratio(const CoverModel& cover, const TangentVector& v);

/// A regular fiber whose sheets lie in Q(sqrt d) for a single d.
struct SplitPoint {
    Rational z;
    std::vector<QuadExt> roots;
};

/// Sheets of the fiber over z if they split over one quadratic extension and
/// are distinct; nullopt otherwise.
std::optional<SplitPoint> split_fiber(const CoverModel& cover, const Rational& z);

/// Up to count split regular points, searched deterministically.
std::vector<SplitPoint> find_split_points(const CoverModel& cover, int count);

/// sum_{i != j} (delta lambda_i - delta lambda_j) / (lambda_i - lambda_j) at a
/// split point.
Rational discriminant_ratio_via_roots(const CoverModel& cover, const TangentVector& v, const SplitPoint& point);

/// Self-test of the dual-number first-order expansion against Lagrange
/// interpolation of D(P - h B) at h = 0 .. 2n-1 (the Sylvester determinant has
/// degree at most 2n-1 in h).
struct FirstOrderCheck {
    ZPoly value;
    ZPoly slope;
    ZPoly interpolated_slope;
    bool value_matches = false;
    bool slope_matches = false;

    bool ok() const { return value_matches && slope_matches; }
};
FirstOrderCheck verify_first_order_family(const CoverModel& cover, const TangentVector& v);

}  // namespace cameral
