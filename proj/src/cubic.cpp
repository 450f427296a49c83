#include "cameral/cubic.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace cameral {

namespace {

const QSeries& dz_squared() {
    // (dz)^2 = 4 t^2 (dt)^2 in the chart z = z0 + t^2.
    static const QSeries s = QSeries::monomial(QuadExt(4), 2);
    return s;
}

void require_regular(const QSeries& s, const std::string& what, const Rational& z0) {
    if (!s.is_known_zero() && s.val() < 0)
        throw InternalAssertion(what + " at z = " + z0.str() + " has a pole of order " + std::to_string(-s.val()));
}

CubicValue assemble(Evaluator tag, std::vector<Contribution> parts) {
    CubicValue out;
    out.tag = tag;
    out.total = Rational(0);
    for (const auto& p : parts) out.total += p.value;
    out.per_branch_point = std::move(parts);
    return out;
}

// <x, e_i - e_j>.
QSeries root_pairing(const CartanVector<QSeries>& x, int i, int j) {
    return x.coords[static_cast<std::size_t>(i)] - x.coords[static_cast<std::size_t>(j)];
}

}  // namespace

std::string to_string(Evaluator e) {
    switch (e) {
        case Evaluator::pantev: return "pantev";
        case Evaluator::ks: return "ks";
        case Evaluator::symmetric: return "symmetric";
        case Evaluator::sl2: return "sl2";
    }
    return "?";
}

Evaluator parse_evaluator(const std::string& name) {
    if (name == "pantev") return Evaluator::pantev;
    if (name == "ks") return Evaluator::ks;
    if (name == "symmetric") return Evaluator::symmetric;
    if (name == "sl2") return Evaluator::sl2;
    throw InputError("unknown evaluator '" + name + "' (expected pantev, ks, symmetric, sl2 or all)");
}

CubicContext::CubicContext(CoverModel cover, int order)
    : cover_(std::move(cover)), order_(order), branches_(prepare_branches(cover_, order)) {}

LocalDifferential<Rational> trace_pair_sections(const CubicContext& ctx, const BranchLocal& local,
                                                const TangentVector& gamma, const TangentVector& delta) {
    const auto dg = sheet_variation(ctx.cover(), local, gamma);
    const auto dd = sheet_variation(ctx.cover(), local, delta);
    const QSeries tr = trace_form(dg, dd) * dz_squared();
    require_regular(tr, "Tr(gamma u delta)", local.branch_point().z0);
    return LocalDifferential<Rational>(require_rational(tr, "Tr(gamma u delta)"), 2);
}

CubicValue pantev_eval(const CubicContext& ctx, const TangentVector& beta, const TangentVector& gamma,
                       const TangentVector& delta) {
    const RationalFunction ratio = discriminant_ratio(ctx.cover(), beta);
    if (!(ratio.den == ctx.cover().disc))
        throw InternalAssertion("value part of the dual discriminant differs from the discriminant");
    std::vector<Contribution> parts;
    for (const auto& local : ctx.branches()) {
        const Rational& z0 = local.branch_point().z0;
        const Series<Rational> r = chart_pullback(ratio.num, z0) * local.inv_disc;
        const auto tr = trace_pair_sections(ctx, local, gamma, delta);
        parts.push_back({z0, quadratic_residue(r * tr)});
    }
    return assemble(Evaluator::pantev, std::move(parts));
}

CubicValue ks_pairing_eval(const CubicContext& ctx, const TangentVector& beta, const TangentVector& gamma,
                           const TangentVector& delta) {
    std::vector<Contribution> parts;
    for (const auto& local : ctx.branches()) {
        const Series<Rational> theta = ks_cocycle(ctx.cover(), local, beta);
        const auto tr = trace_pair_sections(ctx, local, gamma, delta);
        parts.push_back({local.branch_point().z0, residue(tr.contract(theta))});
    }
    return assemble(Evaluator::ks, std::move(parts));
}

std::vector<RootTerm> symmetric_terms(const CubicContext& ctx, const BranchLocal& local, const TangentVector& beta,
                                      const TangentVector& gamma, const TangentVector& delta) {
    const auto db = sheet_variation(ctx.cover(), local, beta);
    const auto dg = sheet_variation(ctx.cover(), local, gamma);
    const auto dd = sheet_variation(ctx.cover(), local, delta);
    const int n = static_cast<int>(db.dim());
    std::vector<RootTerm> out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const QSeries num = root_pairing(db, i, j) * root_pairing(dg, i, j) * root_pairing(dd, i, j);
            out.push_back({i, j, num * local.inv_diff[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * dz_squared()});
        }
    return out;
}

CubicValue symmetric_eval(const CubicContext& ctx, const TangentVector& beta, const TangentVector& gamma,
                          const TangentVector& delta) {
    std::vector<Contribution> parts;
    for (const auto& local : ctx.branches()) {
        const Rational& z0 = local.branch_point().z0;
        const auto terms = symmetric_terms(ctx, local, beta, gamma, delta);
        auto term = [&](int i, int j) -> const QSeries& {
            for (const auto& t : terms)
                if (t.i == i && t.j == j) return t.series;
            throw InternalAssertion("missing root term");
        };
        const int n = ctx.cover().sheets();
        for (int k = 2; k < n; ++k) {
            for (int l = 2; l < n; ++l)
                if (k != l) require_regular(term(k, l), "a spectator root term", z0);
            // Reflection t -> -t swaps the colliding sheets 0 and 1.
            require_regular(term(0, k) + term(1, k), "a mixed root term pair", z0);
            require_regular(term(k, 0) + term(k, 1), "a mixed root term pair", z0);
        }
        QSeries total;
        for (const auto& t : terms) total += t.series;
        const LocalDifferential<Rational> w(require_rational(total, "the symmetric cubic density"), 2);
        parts.push_back({z0, quadratic_residue(w)});
    }
    return assemble(Evaluator::symmetric, std::move(parts));
}

CubicValue sl2_eval(const ZPoly& q, const ZPoly& beta, const ZPoly& gamma, const ZPoly& delta) {
    if (q.is_constant()) throw InputError("sl2 evaluator needs a nonconstant q");
    const RationalRoots roots = rational_roots(q);
    if (roots.remaining_degree > 0) throw IrrationalBranchPoint("q = " + q.str() + " has irrational zeros");
    const ZPoly num = beta.with_var("z") * gamma.with_var("z") * delta.with_var("z");
    std::vector<Contribution> parts;
    for (const auto& r : roots.roots) {
        if (r.multiplicity != 1) throw NonSimpleBranch("q has a multiple zero at z = " + r.value.str());
        // w = z - z0.
        const Series<Rational> qs = Series<Rational>::from_poly(q.shift(r.value)).truncated(6);
        const Series<Rational> f = Series<Rational>::from_poly(num.shift(r.value)) * inverse(qs * qs);
        parts.push_back({r.value, quadratic_residue(LocalDifferential<Rational>(f, 2))});
    }
    return assemble(Evaluator::sl2, std::move(parts));
}

CubicValue sl2_eval(const CubicContext& ctx, const TangentVector& beta, const TangentVector& gamma,
                    const TangentVector& delta) {
    const CoverModel& cover = ctx.cover();
    if (cover.root_system.rank != 1)
        throw InputError("the sl2 evaluator only applies to rank 1 covers (got rank " +
                         std::to_string(cover.root_system.rank) + ")");
    for (const auto* v : {&beta, &gamma, &delta}) check_tangent(cover, *v);
    return sl2_eval(-cover.invariants[0], beta.b[0], gamma.b[0], delta.b[0]);
}

CubicValue evaluate(const CubicContext& ctx, Evaluator e, const TangentVector& beta, const TangentVector& gamma,
                    const TangentVector& delta) {
    switch (e) {
        case Evaluator::pantev: return pantev_eval(ctx, beta, gamma, delta);
        case Evaluator::ks: return ks_pairing_eval(ctx, beta, gamma, delta);
        case Evaluator::symmetric: return symmetric_eval(ctx, beta, gamma, delta);
        case Evaluator::sl2: return sl2_eval(ctx, beta, gamma, delta);
    }
    throw InternalAssertion("unknown evaluator");
}

CubicTensor cubic_tensor(const CubicContext& ctx, const std::vector<TangentVector>& basis, Evaluator e) {
    if (basis.empty()) throw InputError("a cubic tensor needs a nonempty basis");
    for (const auto& v : basis) check_tangent(ctx.cover(), v);
    CubicTensor t;
    t.dim = basis.size();
    const std::size_t d = t.dim;
    t.raw.resize(d * d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                t.raw[(i * d + j) * d + k] = evaluate(ctx, e, basis[i], basis[j], basis[k]).total;
    t.symmetric.resize(d * d * d);
    t.symmetry_defect = Rational(0);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                const std::array<std::size_t, 6> perms{(i * d + j) * d + k, (i * d + k) * d + j, (j * d + i) * d + k,
                                                       (j * d + k) * d + i, (k * d + i) * d + j, (k * d + j) * d + i};
                Rational sum(0);
                for (auto p : perms) sum += t.raw[p];
                const Rational avg = sum / Rational(6);
                t.symmetric[(i * d + j) * d + k] = avg;
                t.symmetry_defect = std::max(t.symmetry_defect, abs(t.raw[(i * d + j) * d + k] - avg));
            }
    return t;
}

bool CubicReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

TangentVector random_tangent(std::mt19937_64& rng, std::size_t length, int max_degree, long bound) {
    const auto span = static_cast<std::uint64_t>(2 * bound + 1);
    TangentVector v;
    for (std::size_t k = 0; k < length; ++k) {
        const int deg = static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree + 1));
        std::vector<Rational> cs;
        for (int i = 0; i <= deg; ++i) cs.emplace_back(static_cast<long>(rng() % span) - bound);
        v.b.emplace_back(std::move(cs), "z");
    }
    return v;
}

namespace {

class Recorder {
public:
    explicit Recorder(std::vector<Check>& checks) : checks_(checks) {}

    void record(const std::string& name, bool ok, const std::string& detail) {
        Check* c = find(name);
        ++c->instances;
        if (!ok && c->passed) {
            c->passed = false;
            c->detail = detail;
        }
    }
    Check* find(const std::string& name) {
        for (auto& c : checks_)
            if (c.name == name) return &c;
        checks_.push_back({name, true, 0, ""});
        return &checks_.back();
    }

private:
    std::vector<Check>& checks_;
};

std::string trial_tag(int trial) { return "trial " + std::to_string(trial); }

// Fixes the first nonzero ratio a/b and compares later ones to it; a zero
// denominator must come with a zero numerator.
class RatioTracker {
public:
    bool add(const Rational& a, const Rational& b) {
        if (b.is_zero()) return a.is_zero();
        const Rational r = a / b;
        if (!value_) value_ = r;
        return *value_ == r;
    }
    const std::optional<Rational>& value() const { return value_; }

private:
    std::optional<Rational> value_;
};

}  // namespace

CubicReport verify_identities(const CubicContext& ctx, int trials, std::uint64_t seed) {
    CubicReport report;
    report.trials = trials;
    report.seed = seed;
    if (trials <= 0) return report;

    const CoverModel& cover = ctx.cover();
    const bool rank_one = cover.root_system.rank == 1;
    const std::size_t len = cover.invariants.size();
    std::mt19937_64 rng(seed);
    Recorder rec(report.checks);
    const char* const kKs = "ks_equals_pantev_per_branch_point";
    const char* const kRatio = "pantev_over_symmetric_constant";
    const char* const kSl2 = "sl2_over_pantev_constant";
    const char* const kSym = "pantev_s3_symmetric";
    const char* const kLin = "trilinearity";
    const char* const kRat = "rationality";
    for (const char* name : {kKs, kRatio, kSl2, kSym, kLin, kRat})
        if (rank_one || std::string(name) != kSl2) rec.find(name);

    RatioTracker ratio, sl2_ratio;
    std::vector<Evaluator> evaluators{Evaluator::pantev, Evaluator::ks, Evaluator::symmetric};
    if (rank_one) evaluators.push_back(Evaluator::sl2);

    for (int trial = 0; trial < trials; ++trial) {
        const TangentVector beta = random_tangent(rng, len, 2, 3);
        const TangentVector gamma = random_tangent(rng, len, 2, 3);
        const TangentVector delta = random_tangent(rng, len, 2, 3);
        const TangentVector extra = random_tangent(rng, len, 2, 3);
        const Rational scale(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1);
        const std::string tag = trial_tag(trial);
        try {
            TrialRecord r;
            r.args = {beta, gamma, delta};
            r.pantev = pantev_eval(ctx, beta, gamma, delta);
            r.ks = ks_pairing_eval(ctx, beta, gamma, delta);
            r.symmetric = symmetric_eval(ctx, beta, gamma, delta);
            if (rank_one) r.sl2 = sl2_eval(ctx, beta, gamma, delta);

            bool local_ok = r.ks.per_branch_point.size() == r.pantev.per_branch_point.size();
            for (std::size_t b = 0; local_ok && b < r.ks.per_branch_point.size(); ++b)
                local_ok = r.ks.per_branch_point[b].value == r.pantev.per_branch_point[b].value;
            rec.record(kKs, local_ok, tag + ": ks " + r.ks.total.str() + " vs pantev " + r.pantev.total.str());

            rec.record(kRatio, ratio.add(r.pantev.total, r.symmetric.total),
                       tag + ": pantev " + r.pantev.total.str() + ", symmetric " + r.symmetric.total.str());
            if (rank_one)
                rec.record(kSl2, sl2_ratio.add(r.sl2->total, r.pantev.total),
                           tag + ": sl2 " + r.sl2->total.str() + ", pantev " + r.pantev.total.str());

            const std::array<std::array<const TangentVector*, 3>, 5> perms{{{&beta, &delta, &gamma},
                                                                            {&gamma, &beta, &delta},
                                                                            {&gamma, &delta, &beta},
                                                                            {&delta, &beta, &gamma},
                                                                            {&delta, &gamma, &beta}}};
            bool sym_ok = true;
            for (const auto& p : perms) sym_ok = sym_ok && pantev_eval(ctx, *p[0], *p[1], *p[2]).total == r.pantev.total;
            rec.record(kSym, sym_ok, tag + ": pantev changes under a permutation of its arguments");

            // f(.., x + c y, ..) = f(.., x, ..) + c f(.., y, ..) in slot trial mod 3.
            const int slot = trial % 3;
            for (Evaluator e : evaluators) {
                std::array<TangentVector, 3> base{beta, gamma, delta};
                std::array<TangentVector, 3> other = base;
                other[static_cast<std::size_t>(slot)] = extra;
                std::array<TangentVector, 3> mixed = base;
                mixed[static_cast<std::size_t>(slot)] = base[static_cast<std::size_t>(slot)] + scale * extra;
                const Rational lhs = evaluate(ctx, e, mixed[0], mixed[1], mixed[2]).total;
                const Rational rhs = evaluate(ctx, e, base[0], base[1], base[2]).total +
                                     scale * evaluate(ctx, e, other[0], other[1], other[2]).total;
                rec.record(kLin, lhs == rhs, tag + ": " + to_string(e) + " is not linear in slot " + std::to_string(slot));
            }
            rec.record(kRat, true, "");
            report.records.push_back(std::move(r));
        } catch (const InternalAssertion& e) {
            rec.record(kRat, false, tag + ": " + e.what());
        } catch (const MathError& e) {
            rec.record(kRat, false, tag + ": " + e.what());
        }
    }
    report.pantev_over_symmetric = ratio.value();
    if (rank_one) report.sl2_over_pantev = sl2_ratio.value();
    return report;
}

}  // namespace cameral
