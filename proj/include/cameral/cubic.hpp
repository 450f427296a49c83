#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cameral/deform.hpp"

namespace cameral {

enum class Evaluator { pantev, ks, symmetric, sl2 };

std::string to_string(Evaluator e);
/// "pantev", "ks", "symmetric" or "sl2"; InputError otherwise.
Evaluator parse_evaluator(const std::string& name);

struct Contribution {
    Rational z0;
    Rational value;
};

struct CubicValue {
    Evaluator tag = Evaluator::pantev;
    Rational total;
    std::vector<Contribution> per_branch_point;  // sorted by z0
};

/// A cover together with its branch-point expansions at one working order.
class CubicContext {
public:
    CubicContext(CoverModel cover, int order);

    const CoverModel& cover() const { return cover_; }
    const std::vector<BranchLocal>& branches() const { return branches_; }
    int order() const { return order_; }

private:
    CoverModel cover_;
    int order_;
    std::vector<BranchLocal> branches_;
};

/// Tr(gamma u delta) = sum_i dlambda_i^gamma dlambda_i^delta (dz)^2 with
/// dz = 2t dt. Asserted regular and rational.
LocalDifferential<Rational> trace_pair_sections(const CubicContext& ctx, const BranchLocal& local,
                                                const TangentVector& gamma, const TangentVector& delta);

/// Res^2 of pi^*(d D(beta) / D) Tr(gamma u delta), summed over branch points.
CubicValue pantev_eval(const CubicContext& ctx, const TangentVector& beta, const TangentVector& gamma,
                       const TangentVector& delta);

/// Res of the contraction of the Kodaira-Spencer field of beta with
/// Tr(gamma u delta).
CubicValue ks_pairing_eval(const CubicContext& ctx, const TangentVector& beta, const TangentVector& gamma,
                           const TangentVector& delta);

/// One ordered root e_i - e_j of the symmetric formula at a branch point:
/// <beta,nu><gamma,nu><delta,nu>/<phi,nu> (dz)^2 in the local chart.
struct RootTerm {
    int i = 0;
    int j = 0;
    QSeries series;  // coefficient of (dt)^2
};

/// All |roots| terms at one branch point.
std::vector<RootTerm> symmetric_terms(const CubicContext& ctx, const BranchLocal& local, const TangentVector& beta,
                                      const TangentVector& gamma, const TangentVector& delta);

/// sum over roots nu of Res^2 <beta,nu><gamma,nu><delta,nu>/<phi,nu>.
/// Asserts that spectator-only terms are regular and that each mixed term
/// cancels its pole against its partner under the branch reflection.
CubicValue symmetric_eval(const CubicContext& ctx, const TangentVector& beta, const TangentVector& gamma,
                          const TangentVector& delta);

/// sum over zeros z0 of q of Res^2_{z0} beta gamma delta / q^2 (dz)^2.
/// Needs q squarefree with rational zeros.
CubicValue sl2_eval(const ZPoly& q, const ZPoly& beta, const ZPoly& gamma, const ZPoly& delta);
/// Same on a rank-1 cover lambda^2 = q with q = -c_2; InputError otherwise.
CubicValue sl2_eval(const CubicContext& ctx, const TangentVector& beta, const TangentVector& gamma,
                    const TangentVector& delta);

CubicValue evaluate(const CubicContext& ctx, Evaluator e, const TangentVector& beta, const TangentVector& gamma,
                    const TangentVector& delta);

/// Components c(b_i, b_j, b_k) of a cubic in a basis.
struct CubicTensor {
    std::size_t dim = 0;
    std::vector<Rational> raw;        // dim^3, row-major in (i, j, k)
    std::vector<Rational> symmetric;  // average over the six permutations
    Rational symmetry_defect;         // max |raw - symmetric|

    const Rational& at(std::size_t i, std::size_t j, std::size_t k) const { return symmetric[(i * dim + j) * dim + k]; }
};

/// InputError for an empty basis.
CubicTensor cubic_tensor(const CubicContext& ctx, const std::vector<TangentVector>& basis, Evaluator e);

struct Check {
    std::string name;
    bool passed = true;
    int instances = 0;
    std::string detail;  // first failure, if any
};

struct TrialRecord {
    std::vector<TangentVector> args;  // beta, gamma, delta
    CubicValue pantev;
    CubicValue ks;
    CubicValue symmetric;
    std::optional<CubicValue> sl2;
};

struct CubicReport {
    int trials = 0;
    std::uint64_t seed = 0;
    std::vector<Check> checks;
    std::vector<TrialRecord> records;
    std::optional<Rational> pantev_over_symmetric;
    std::optional<Rational> sl2_over_pantev;

    bool passed() const;
};

/// Random tangent vector: each b_k of degree <= max_degree with integer
/// coefficients in [-bound, bound]. Portable for a fixed engine state.
TangentVector random_tangent(std::mt19937_64& rng, std::size_t length, int max_degree, long bound);

/// Randomized identity suite: ks = pantev per branch point, constant
/// pantev/symmetric and sl2/pantev ratios, S3 symmetry of pantev,
/// trilinearity of every evaluator, rationality. Failures are report
/// entries, not exceptions.
CubicReport verify_identities(const CubicContext& ctx, int trials, std::uint64_t seed);

}  // namespace cameral
