#include <doctest.h>

#include <random>

#include "modrep/hecke.hpp"

using namespace modrep;

TEST_CASE("length-zero element") {
    FiniteGroupContext ctx(GroupId::GSp4, 5);
    IMBasisElt lam = hecke_lambda(), wpt = hecke_w_pi_tilde(), wp = hecke_w_pi();
    CHECK(length(lam) == 3);
    CHECK(length(wpt) == 0);
    CHECK(length(wp) == 3);
    CHECK(product_if_additive(lam, wpt, ctx) == HeckeExpr::basis(wp, 5));
    CHECK(product_if_additive(wpt, inverse(wpt, 5), ctx) == HeckeExpr::basis(IMBasisElt::identity(GroupId::GSp4), 5));
}

TEST_CASE("torus moves are always defined") {
    FiniteGroupContext ctx(GroupId::GSp4, 5);
    auto T = torus_elements(ctx);
    REQUIRE(!T.empty());
    IMBasisElt s = simple_lift(ctx, 0);
    for (const auto& t : T) {
        CHECK_FALSE(product_if_additive(t, s, ctx).normal_form_unavailable());
        CHECK_FALSE(product_if_additive(s, t, ctx).normal_form_unavailable());
        CHECK(product_if_additive(t, s, ctx).terms().size() == 1);
    }
}

TEST_CASE("non-additive products without the quadratic pattern are unavailable") {
    FiniteGroupContext ctx(GroupId::GSp4, 5);
    IMBasisElt s0 = simple_lift(ctx, 0), s1 = simple_lift(ctx, 1);
    IMBasisElt x = mul(s0, s1, 5), y = mul(s1, s0, 5);
    HeckeExpr xx = product_if_additive(x, x, ctx);
    CHECK_FALSE(xx.normal_form_unavailable());
    CHECK(xx.terms().size() == 1);
    CHECK(product_if_additive(x, y, ctx).normal_form_unavailable());
    CHECK(product_if_additive(y, x, ctx).normal_form_unavailable());
}

TEST_CASE("quadratic relation on A[G/U]") {
    for (i64 p : {3, 5, 7}) {
        FiniteGroupContext ctx(GroupId::SL2, p);
        CosetSpace S = enumerate_flags(ctx, Quotient::Unipotent);
        IMBasisElt n = tits_lift(ctx, 0);
        HeckeExpr q = product_if_additive(n, n, ctx, p * p);
        CHECK_FALSE(q.normal_form_unavailable());
        CHECK(q.terms().size() == static_cast<std::size_t>(p));
        ModMatrix Tn = realize(S, n, 2);
        CHECK(realize(S, q, 2) == Tn * Tn);
    }
}

TEST_CASE("coroot from root subgroups is a torus element") {
    FiniteGroupContext ctx(GroupId::GSp4, 7);
    for (int i = 0; i < 2; ++i)
        for (i64 z = 1; z < 7; ++z) {
            IMBasisElt c = simple_coroot(ctx, i, z);
            CHECK(c.is_torus());
            CHECK(ctx.in_group(to_matrix(c, 7)));
        }
    CHECK(simple_coroot(ctx, 0, 1) == IMBasisElt::identity(GroupId::GSp4));
}

TEST_CASE("products match matrix products (SL2, exhaustive)") {
    for (i64 p : {5, 7}) {
        FiniteGroupContext ctx(GroupId::SL2, p);
        CosetSpace S = enumerate_flags(ctx, Quotient::Unipotent);
        const RootDatum& R = ctx.datum();
        std::vector<IMBasisElt> basis;
        for (const auto& w : R.W)
            for (const auto& t : torus_elements(ctx))
                basis.push_back(mul(t, IMBasisElt::from_monomial(GroupId::SL2, ctx.weyl_lift(w), p), p));
        for (const auto& x : basis)
            for (const auto& y : basis) {
                HeckeExpr h = product_if_additive(x, y, ctx, p * p);
                REQUIRE_FALSE(h.normal_form_unavailable());
                CHECK(realize(S, h, 2) == realize(S, x, 2) * realize(S, y, 2));
            }
    }
}

TEST_CASE("braid relation for GL3") {
    FiniteGroupContext ctx(GroupId::GL3, 3);
    CosetSpace S = enumerate_flags(ctx, Quotient::Unipotent);
    IMBasisElt a = simple_lift(ctx, 0), b = simple_lift(ctx, 1);
    ModMatrix A = realize(S, a, 2), B = realize(S, b, 2);
    CHECK(A * B * A == B * A * B);
    HeckeExpr lhs = multiply(multiply(HeckeExpr::basis(a, 3, 9), HeckeExpr::basis(b, 3, 9), ctx), HeckeExpr::basis(a, 3, 9), ctx);
    CHECK(lhs.terms().size() == 1);
    CHECK(realize(S, lhs, 2) == A * B * A);
}

TEST_CASE("torus idempotents") {
    const i64 p = 5;
    const int N = 2;
    const i64 m = p * p;
    FiniteGroupContext ctx(GroupId::SL2, p);
    auto T = torus_elements(ctx);
    HeckeExpr sum(p, m);
    for (i64 e = 0; e < p - 1; ++e) {
        TorusCharacter th;
        th.exponents[0] = e;
        HeckeExpr eps = idempotent(ctx, th, N);
        CHECK(multiply(eps, eps, ctx) == eps);
        for (const auto& t : T) {
            i64 v = powmod(teichmuller(t.unit[0], p, N), e, m);
            CHECK(multiply(eps, HeckeExpr::basis(t, p, m), ctx) == eps.scaled(v));
        }
        if (e == 0)
            for (const auto& [x, c] : eps.terms()) CHECK(c == eps.terms().begin()->second);
        sum = sum + eps;
    }
    CHECK(sum == HeckeExpr::basis(IMBasisElt::identity(GroupId::SL2), p, m));
}

TEST_CASE("theta table") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        FLData fl = random_strongly_generic(37, 7, rng);
        ThetaImageTable t = theta_table(fl);
        Zeta z = zeta_invariants(fl);
        CHECK(t.rows.size() == 8);
        CHECK(t.pairings_hold());
        CHECK(t.row("id").k == 2);
        CHECK(t.row("s1").k == 1);
        CHECK(t.row("s1s0").k == 2);
        CHECK(t.row("s1s0s1").k == 1);
        CHECK(t.row("s1").rbar == z.zeta2);
        CHECK(t.row("s1").rbar == pmod(fl.xi[1] - mulmod(fl.x13, invmod(fl.x03, 37), 37), 37));
        CHECK(mulmod(t.row("id").rbar, t.row("s1s0s1").rbar, 37) == fl.xi_total());
    }
}

TEST_CASE("layer consistency across modules") {
    FLData fl;
    fl.p = 41;
    fl.a = {0, 8, 19, 27};
    fl.xi = {1, 2, 3, 6};
    fl.x03 = 1;
    for (i64 x13 = 0; x13 < 41; ++x13) {
        fl.x13 = x13;
        fl.x02 = mulmod(pmod(1 - 3 * x13, 41), invmod(2, 41), 41);
        if (strongly_generic(fl, 7)) break;
    }
    REQUIRE(strongly_generic(fl, 7));
    auto rows = layer_consistency(fl);
    REQUIRE(rows.size() == 4);
    for (const auto& r : rows) {
        CHECK(r.k == 1);
        CHECK(r.layer >= 0);
        CHECK(r.at_least());
    }
    CHECK(rows[0].w_prime == "s1s0s1");
}
