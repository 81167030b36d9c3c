#include <doctest.h>

#include <random>

#include "modrep/fpgroups.hpp"
#include "modrep/jantzen.hpp"
#include "modrep/kernels.hpp"

using namespace modrep;

TEST_CASE("coset counts") {
    struct Case {
        GroupId g;
        i64 p;
        std::size_t n;
    };
    for (auto c : {Case{GroupId::SL2, 7, 8}, Case{GroupId::GL3, 5, 186}, Case{GroupId::SL3, 5, 186},
                   Case{GroupId::GSp4, 5, 936}}) {
        FiniteGroupContext ctx(c.g, c.p);
        CHECK(enumerate_flags(ctx).size() == c.n);
        CHECK(bruhat_count(ctx.datum(), c.p) == static_cast<i64>(c.n));
    }
}

TEST_CASE("budget is enforced") {
    FiniteGroupContext ctx(GroupId::GSp4, 7);
    CHECK_THROWS_AS(enumerate_flags(ctx, Quotient::Borel, 100), Error);
}

TEST_CASE("generators lie in the group") {
    for (GroupId g : {GroupId::SL2, GroupId::GL3, GroupId::GSp4}) {
        FiniteGroupContext ctx(g, 5);
        for (const auto& x : ctx.generators()) CHECK(ctx.in_group(x));
        for (std::size_t i = 0; i < ctx.datum().simple.size(); ++i) CHECK(ctx.in_group(ctx.simple_lift(static_cast<int>(i))));
    }
}

TEST_CASE("Smith form examples") {
    const i64 p = 5;
    ModMatrix I = ModMatrix::identity(3, 625);
    CHECK(elementary_divisors(I, p, 4).exponents == std::vector<int>{0, 0, 0});
    ModMatrix D(3, 3, 625);
    D.at(0, 0) = 1;
    D.at(1, 1) = 5;
    D.at(2, 2) = 25;
    CHECK(elementary_divisors(D, p, 4).exponents == std::vector<int>{0, 1, 2});
}

TEST_CASE("Smith form recovers exponents hidden by unimodular changes") {
    std::mt19937_64 rng(7);
    const i64 p = 3;
    const int N = 4;
    const std::uint32_t m = 81;
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 6;
        std::vector<int> e(n);
        ModMatrix D(n, n, m);
        for (std::size_t i = 0; i < n; ++i) {
            e[i] = static_cast<int>(rng() % N);
            D.at(i, i) = static_cast<std::uint32_t>(ipow(p, e[i]));
        }
        // unit upper and lower triangular factors
        auto unimodular = [&](bool upper) {
            ModMatrix U = ModMatrix::identity(n, m);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (upper ? j > i : j < i) U.at(i, j) = static_cast<std::uint32_t>(rng() % m);
            return U;
        };
        ModMatrix M = unimodular(true) * unimodular(false) * D * unimodular(false) * unimodular(true);
        std::sort(e.begin(), e.end());
        CHECK(elementary_divisors(M, p, N).exponents == e);
        // a zero divisor means the modulus was too small to see it
        ModMatrix Z = M;
        for (std::size_t j = 0; j < n; ++j) Z.at(j, 0) = 0;
        CHECK_THROWS_AS(elementary_divisors(Z, p, N), Error);
        // p times a unimodular matrix
        ModMatrix U = unimodular(true) * unimodular(false);
        ModMatrix P(n, n, m);
        for (std::size_t i = 0; i < n * n; ++i) P.a[i] = static_cast<std::uint32_t>(U.a[i] * p % m);
        CHECK(elementary_divisors(P, p, N).exponents == std::vector<int>(n, 1));
    }
}

TEST_CASE("SIMD axpy kernels agree with the scalar reference") {
    std::mt19937_64 rng(11);
    std::vector<kernels::AxpyFn> variants;
    if (auto f = kernels::axpy_mod_avx2()) variants.push_back(f);
    if (auto f = kernels::axpy_mod_neon()) variants.push_back(f);
    variants.push_back(kernels::axpy_mod());
    for (std::uint32_t m : {2u, 5u, 3125u, 78125u, kernels::kMaxModulus - 1}) {
        for (std::size_t len : {0u, 1u, 7u, 8u, 9u, 31u, 100u}) {
            std::vector<std::uint32_t> src(len), dst(len);
            for (auto& x : src) x = static_cast<std::uint32_t>(rng() % m);
            for (auto& x : dst) x = static_cast<std::uint32_t>(rng() % m);
            std::uint32_t c = static_cast<std::uint32_t>(rng() % m);
            std::vector<std::uint32_t> want = dst;
            kernels::axpy_mod_scalar(want.data(), src.data(), c, m, len);
            for (auto f : variants) {
                std::vector<std::uint32_t> got = dst;
                f(got.data(), src.data(), c, m, len);
                CHECK(got == want);
            }
        }
    }
}

TEST_CASE("identity intertwiner") {
    FiniteGroupContext ctx(GroupId::SL2, 7);
    CosetSpace S = enumerate_flags(ctx);
    CHECK(intertwiner(S, Weight(3), ctx.datum().identity(), 2) == ModMatrix::identity(S.size(), 49));
}

TEST_CASE("SL2 sum formula against elementary divisors") {
    const RootDatum& R = root_datum(GroupId::SL2);
    for (i64 p : {5, 7, 11}) {
        FiniteGroupContext ctx(GroupId::SL2, p);
        CosetSpace S = enumerate_flags(ctx);
        const WeylElt& s = R.from_word({0});
        for (i64 r = 1; r <= p - 2; ++r) {
            auto dims = filtration_dims(S, Weight(r), s, 2);
            CHECK(dims.size() >= 2);
            CHECK(dims[1] == sum_formula_dim(R, Weight(r), s, p));
            auto prof = elementary_divisors(intertwiner(S, Weight(r), s, 2), p, 2);
            CHECK(prof.valuation_of_det() == dims[1]);
            CHECK(prof.exponents.back() <= 1);
        }
    }
}

TEST_CASE("factored intertwiner equals the direct double coset sum") {
    FiniteGroupContext ctx(GroupId::GL3, 3);
    CosetSpace S = enumerate_flags(ctx);
    const RootDatum& R = ctx.datum();
    Weight l(3, 1, 0);
    for (const auto& w : R.W)
        CHECK(intertwiner(S, l, w, 3) == intertwiner_direct(S, l, w, ctx.weyl_lift(w), 3));
}

TEST_CASE("filtration stops after l(w) layers") {
    FiniteGroupContext ctx(GroupId::GL3, 5);
    CosetSpace S = enumerate_flags(ctx);
    const RootDatum& R = ctx.datum();
    Weight l(3, 1, 0);
    for (const auto& w : R.W) {
        auto prof = elementary_divisors(intertwiner(S, l, w, w.length() + 1), 5, w.length() + 1);
        auto d = prof.layer_dims(w.length() + 1);
        CHECK(d.back() == 0);
        i64 sum = 0;
        for (std::size_t i = 1; i < d.size(); ++i) sum += d[i];
        CHECK(sum == prof.valuation_of_det());
    }
}

TEST_CASE("normalized intertwiner") {
    FiniteGroupContext ctx(GroupId::GL3, 3);
    CosetSpace S = enumerate_flags(ctx);
    const RootDatum& R = ctx.datum();
    const WeylElt& w = R.longest();
    Weight l(3, 1, 0);
    auto dims = filtration_dims(S, l, w, 4);
    auto t0 = normalized_intertwiner(S, l, w, 0, 4);
    CHECK(t0.rank_on_layer == rank_mod_p(intertwiner(S, l, w, 4), 3));
    auto top = normalized_intertwiner(S, l, w, w.length(), 4);
    CHECK(top.rank_on_layer == dims[w.length()]);
    for (int i = 0; i < w.length(); ++i) CHECK(normalized_intertwiner(S, l, w, i, 4).kills_next_layer);
}
