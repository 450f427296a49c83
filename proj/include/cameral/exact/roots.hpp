#pragma once

#include <vector>

#include "cameral/exact/poly.hpp"
#include "cameral/exact/rational.hpp"

namespace cameral {

struct RationalRoot {
    Rational value;
    int multiplicity = 1;

    friend bool operator==(const RationalRoot&, const RationalRoot&) = default;
};

struct RationalRoots {
    /// Sorted ascending.
    std::vector<RationalRoot> roots;
    /// Degree of the cofactor with no rational roots.
    int remaining_degree = 0;
};

/// All rational roots of a nonzero polynomial with multiplicities.
///
/// Roots are isolated with Sturm sequences on each square-free factor and
/// recognized as the simplest rational in an interval narrower than the
/// spacing of fractions whose denominator divides the leading coefficient.
RationalRoots rational_roots(const Poly<Rational>& p);

/// Number of distinct real roots of p in the half-open interval (lo, hi].
int count_real_roots(const Poly<Rational>& p, const Rational& lo, const Rational& hi);

}  // namespace cameral
