#include "doctest.h"
#include "support.hpp"

using namespace cameral;
using namespace cameral::testing;

namespace {

Rational per_point(const CubicValue& v, const Rational& z0) {
    for (const auto& c : v.per_branch_point)
        if (c.z0 == z0) return c.value;
    FAIL("no contribution at " << z0.str());
    return Rational(0);
}

}  // namespace

TEST_CASE("evaluator names") {
    for (Evaluator e : {Evaluator::pantev, Evaluator::ks, Evaluator::symmetric, Evaluator::sl2})
        CHECK(parse_evaluator(to_string(e)) == e);
    CHECK_THROWS_AS(parse_evaluator("killing"), InputError);
}

TEST_CASE("model lambda^2 = z with constant deformations") {
    const CubicContext ctx(rank1({0, 1}), 8);
    const auto one = constant_tangent({1});
    const auto& local = ctx.branches()[0];
    const auto tr = trace_pair_sections(ctx, local, one, one);
    CHECK(agree(tr.series(), Series<Rational>(Rational(2))));

    CHECK(pantev_eval(ctx, one, one, one).total == Rational(2));
    CHECK(ks_pairing_eval(ctx, one, one, one).total == Rational(2));
    CHECK(symmetric_eval(ctx, one, one, one).total == Rational(4));
    CHECK(sl2_eval(ctx, one, one, one).total == Rational(1));
    CHECK(sl2_eval(P({0, 1}), P({1}), P({1}), P({1})).total == Rational(1));

    const auto zero = constant_tangent({0});
    for (Evaluator e : {Evaluator::pantev, Evaluator::ks, Evaluator::symmetric, Evaluator::sl2})
        CHECK(evaluate(ctx, e, zero, one, one).total == Rational(0));
}

TEST_CASE("lambda^2 = z^2 - 1 with constant deformations") {
    const CubicContext ctx(rank1({-1, 0, 1}), 8);
    const auto one = constant_tangent({1});
    const auto p = pantev_eval(ctx, one, one, one);
    CHECK(p.total == Rational(1));
    REQUIRE(p.per_branch_point.size() == 2);
    CHECK(p.per_branch_point[0].z0 == Rational(-1));
    CHECK(p.per_branch_point[0].value == Rational(1, 2));
    CHECK(p.per_branch_point[1].value == Rational(1, 2));
    CHECK(ks_pairing_eval(ctx, one, one, one).total == Rational(1));
    CHECK(symmetric_eval(ctx, one, one, one).total == Rational(2));
    CHECK(sl2_eval(ctx, one, one, one).total == Rational(1, 2));
}

TEST_CASE("sl2 evaluator preconditions") {
    CHECK_THROWS_AS(sl2_eval(P({3}), P({1}), P({1}), P({1})), InputError);
    CHECK_THROWS_AS(sl2_eval(P({0, 0, 1}), P({1}), P({1}), P({1})), NonSimpleBranch);
    CHECK_THROWS_AS(sl2_eval(P({-2, 0, 1}), P({1}), P({1}), P({1})), IrrationalBranchPoint);
    const CubicContext ctx(rank2_cover(Rational(1), Rational(2), Rational(0)), 8);
    const auto v = constant_tangent({1, 1});
    CHECK_THROWS_AS(sl2_eval(ctx, v, v, v), InputError);
}

TEST_CASE("every evaluator matches the hand closed form") {
    Gen g(301);
    for (int i = 0; i < 24; ++i) {
        const bool rank_one = i % 2 == 0;
        const CubicContext ctx(rank_one ? random_rank1_cover(g, 4) : random_rank2_cover(g), 8);
        const std::size_t len = ctx.cover().invariants.size();
        const auto beta = random_tangent(g, len, 2);
        const auto gamma = random_tangent(g, len, 2);
        const auto delta = random_tangent(g, len, 2);
        const auto p = pantev_eval(ctx, beta, gamma, delta);
        const auto k = ks_pairing_eval(ctx, beta, gamma, delta);
        const auto s = symmetric_eval(ctx, beta, gamma, delta);
        Rational total(0);
        for (const auto& bp : ctx.cover().branch_points) {
            const Rational expected = hand_oracle(ctx.cover(), bp, beta, gamma, delta);
            total += expected;
            CHECK(per_point(p, bp.z0) == expected);
            CHECK(per_point(k, bp.z0) == expected);
            CHECK(per_point(s, bp.z0) == Rational(2) * expected);
        }
        CHECK(p.total == total);
        CHECK(s.total == Rational(2) * total);
        if (rank_one) CHECK(sl2_eval(ctx, beta, gamma, delta).total * Rational(2) == total);
    }
}

TEST_CASE("higher working order leaves values unchanged") {
    Gen g(303);
    for (int i = 0; i < 6; ++i) {
        const CoverModel cover = i % 2 == 0 ? random_rank1_cover(g, 4) : random_rank2_cover(g);
        const CubicContext lo(cover, 4), hi(cover, 12);
        const auto v = random_tangent(g, cover.invariants.size(), 2);
        const auto w = random_tangent(g, cover.invariants.size(), 2);
        for (Evaluator e : {Evaluator::pantev, Evaluator::ks, Evaluator::symmetric})
            CHECK(evaluate(lo, e, v, w, v).total == evaluate(hi, e, v, w, v).total);
    }
    CHECK_THROWS_AS(CubicContext(rank1({0, 1}), 3), InputError);
}

TEST_CASE("symmetric formula structure") {
    const CubicContext ctx(rank2_cover(Rational(1), Rational(2), Rational(0)), 8);
    Gen g(305);
    const auto v = random_tangent(g, 2, 2);
    for (const auto& local : ctx.branches()) {
        const auto terms = symmetric_terms(ctx, local, v, v, v);
        CHECK(terms.size() == 6);
        for (const auto& term : terms) {
            CHECK(term.i != term.j);
            if (term.i >= 2 && term.j >= 2) CHECK(term.series.val() >= 0);
        }
    }
}

TEST_CASE("cubic tensors") {
    const CubicContext ctx(rank1({0, 1}), 8);
    const auto t1 = cubic_tensor(ctx, {constant_tangent({1})}, Evaluator::symmetric);
    REQUIRE(t1.dim == 1);
    CHECK(t1.at(0, 0, 0) == Rational(4));

    const auto t2 = cubic_tensor(ctx, {constant_tangent({1}), constant_tangent({2})}, Evaluator::pantev);
    CHECK(t2.at(0, 0, 0) == Rational(2));
    CHECK(t2.at(0, 0, 1) == Rational(4));
    CHECK(t2.at(1, 0, 1) == Rational(8));
    CHECK(t2.at(1, 1, 1) == Rational(16));
    CHECK(t2.symmetry_defect == Rational(0));

    const auto t0 = cubic_tensor(ctx, {constant_tangent({0})}, Evaluator::ks);
    CHECK(t0.at(0, 0, 0) == Rational(0));
    CHECK_THROWS_AS(cubic_tensor(ctx, {}, Evaluator::pantev), InputError);

    // lambda^2 = z^2 - 1 in the basis {1, z}: c = sum_{z0 = +-1} b b b (z0) / 2.
    const CubicContext two(rank1({-1, 0, 1}), 8);
    const TangentVector one = constant_tangent({1}), z{{P({0, 1})}};
    const auto t = cubic_tensor(two, {one, z}, Evaluator::pantev);
    CHECK(t.at(0, 0, 0) == Rational(1));
    CHECK(t.at(0, 0, 1) == Rational(0));
    CHECK(t.at(0, 1, 1) == Rational(1));
    CHECK(t.at(1, 1, 1) == Rational(0));
    for (std::size_t i = 0; i < 8; ++i) CHECK(t.raw[i] == t.symmetric[i]);
}

TEST_CASE("trilinearity and symmetry on random data") {
    Gen g(307);
    for (int i = 0; i < 10; ++i) {
        const CubicContext ctx(i % 2 == 0 ? random_rank1_cover(g, 4) : random_rank2_cover(g), 8);
        const std::size_t len = ctx.cover().invariants.size();
        const auto a = random_tangent(g, len, 2);
        const auto b = random_tangent(g, len, 2);
        const auto c = random_tangent(g, len, 2);
        const auto d = random_tangent(g, len, 2);
        const Rational s = g.nonzero_rational();
        for (Evaluator e : {Evaluator::pantev, Evaluator::ks, Evaluator::symmetric}) {
            const Rational abc = evaluate(ctx, e, a, b, c).total;
            CHECK(evaluate(ctx, e, a + s * d, b, c).total == abc + s * evaluate(ctx, e, d, b, c).total);
            CHECK(evaluate(ctx, e, b, c, a).total == abc);
            CHECK(evaluate(ctx, e, c, a, b).total == abc);
            CHECK(evaluate(ctx, e, b, a, c).total == abc);
        }
    }
}

TEST_CASE("identity suite") {
    const CubicContext model(rank1({0, 1}), 8);
    const auto report = verify_identities(model, 20, 1);
    CHECK(report.passed());
    REQUIRE(report.pantev_over_symmetric);
    CHECK(*report.pantev_over_symmetric == Rational(1, 2));
    REQUIRE(report.sl2_over_pantev);
    CHECK(*report.sl2_over_pantev == Rational(1, 2));
    CHECK(report.records.size() == 20);
    for (const auto& c : report.checks) CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);

    const CubicContext a2(build_cover(LieType::A, 2, {P({-3}), P({0, 2})}), 8);
    const auto r2 = verify_identities(a2, 10, 7);
    CHECK(r2.passed());
    CHECK_FALSE(r2.sl2_over_pantev);
    REQUIRE(r2.pantev_over_symmetric);
    CHECK(*r2.pantev_over_symmetric == Rational(1, 2));

    // Same seed, same records.
    const auto again = verify_identities(a2, 10, 7);
    REQUIRE(again.records.size() == r2.records.size());
    for (std::size_t i = 0; i < again.records.size(); ++i) CHECK(again.records[i].pantev.total == r2.records[i].pantev.total);

    CHECK(verify_identities(model, 0, 1).checks.empty());
}
