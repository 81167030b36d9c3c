#include <doctest.h>

#include <random>

#include "modrep/flkisin.hpp"

using namespace modrep;

namespace {

// a = (0, 9, 19, 28) is 8-generic at p = 37
FLData unit_data(i64 x02, i64 x03, i64 x13) {
    FLData fl;
    fl.p = 37;
    fl.a = {0, 9, 19, 28};
    fl.xi = {1, 1, 1, 1};
    fl.x02 = x02;
    fl.x03 = x03;
    fl.x13 = x13;
    return fl;
}

}  // namespace

TEST_CASE("genericity examples") {
    FLData fl = unit_data(1, 1, 0);
    auto g = check_genericity(fl, 7);
    CHECK(*g.weak);
    CHECK(*g.strong);
    CHECK(g.depth >= 7);
    CHECK(weakly_generic(fl, 7));
    // (a3-a0) xi2 x03 = (a2-a1) x02 when the gaps agree
    FLData eq = fl;
    eq.a = {0, 37, 47, 84};  // a3 - a0 = a2 - a1 mod 37
    auto ge = check_genericity(eq, 0);
    CHECK(*ge.weak);
    CHECK_FALSE(*ge.strong);
    FLData z = unit_data(1, 0, 0);
    CHECK_FALSE(*check_genericity(z, 7).weak);
    FLData bad = fl;
    bad.a = {0, 1, 2, 3};
    CHECK(check_genericity(bad, 7).depth < 7);
    CHECK_FALSE(strongly_generic(bad, 7));
}

TEST_CASE("invalid data") {
    FLData fl = unit_data(1, 1, 0);
    fl.xi[0] = 0;
    CHECK(fl_violation(fl).has_value());
    fl = unit_data(1, 1, 0);
    fl.a = {0, 9, 19, 29};
    CHECK(fl_violation(fl).has_value());
    fl = unit_data(2, 1, 0);
    CHECK(fl_violation(fl).has_value());
    CHECK_FALSE(fl_violation(fl, false).has_value());
}

TEST_CASE("duality") {
    FLData fl = unit_data(3, 5, 35);  // 3 + 35 = 38 = 1 mod 37
    REQUIRE(is_symplectic(fl));
    CHECK(fl_dual(fl) == fl_matrix(fl));
    CHECK(fl_dual(fl) == fl_dual_by_transpose(fl));
    FLData ns = unit_data(3, 5, 7);
    CHECK_FALSE(fl_dual(ns) == fl_matrix(ns));
    CHECK(fl_matrix(fl_dual_data(fl_dual_data(ns))) == fl_matrix(ns));
    CHECK(fl_dual(ns) == fl_dual_by_transpose(ns));
}

TEST_CASE("non-symplectic witness over F5") {
    FLData fl;
    fl.p = 5;
    fl.a = {0, 1, 2, 3};
    fl.xi = {1, 1, 1, 1};
    fl.x02 = 1;
    fl.x03 = 1;
    fl.x13 = 1;
    CHECK_FALSE(is_symplectic(fl));
    CHECK_FALSE(fl_dual(fl) == fl_matrix(fl));
}

TEST_CASE("Kisin matrix identities") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        FLData fl = random_strongly_generic(37, 7, rng);
        LaurentMatrix A = kisin_matrix(fl);
        KisinChecks k = check_kisin(A, fl.xi_total());
        CHECK(k.symplectic);
        CHECK(k.minors2);
        CHECK(k.minors3);
        CHECK(k.det_unit_v6);
        Shape s = shape_of(A);
        CHECK(s == expected_fl_shape());
        CHECK(symplectic_dual_shape(s) == s);
    }
}

TEST_CASE("printed Kisin matrix is symplectic only for xi = 1") {
    std::mt19937_64 rng(6);
    int with_one = 0, without = 0;
    for (int i = 0; i < 300; ++i) {
        FLData fl = random_strongly_generic(37, 7, rng);
        bool ok = check_kisin(kisin_matrix_printed(fl), fl.xi_total()).symplectic;
        CHECK(ok == (fl.xi_total() == 1));
        (fl.xi_total() == 1 ? with_one : without)++;
    }
    CHECK(without > 0);
    FLData one = unit_data(1, 1, 0);
    CHECK(check_kisin(kisin_matrix_printed(one), 1).symplectic);
}

TEST_CASE("expected shape") {
    Shape s = expected_fl_shape();
    CHECK(s.mu == std::array<i64, 4>{2, 2, 1, 1});
    CHECK(s.perm == std::array<int, 4>{3, 1, 2, 0});
    // monomial input gives back its own shape
    LaurentMatrix M(37);
    for (int c = 0; c < 4; ++c) M.at(s.perm[c], c) = LaurentPoly::monomial(37, 1, static_cast<int>(s.mu[s.perm[c]]));
    CHECK(shape_of(M) == s);
}

TEST_CASE("zeta examples") {
    FLData fl = unit_data(1, 1, 0);
    Zeta z = zeta_invariants(fl);
    const i64 p = 37;
    CHECK(z.zeta2 == 1);
    i64 d30 = 28, d21 = 10;
    CHECK(z.zeta1 == mulmod(pmod(d30 - d21, p), invmod(d30 + 2, p), p));
    // zeta2 = xi1 - x13/x03 only sees the ratio; zeta1 tells scalings of (x03, x13) apart
    FLData sc = unit_data(pmod(1 - 4, p), 3, 4);
    Zeta a = zeta_invariants(sc);
    for (i64 c = 2; c < 6; ++c) {
        FLData sc2 = sc;
        sc2.x03 = mulmod(sc.x03, c, p);
        sc2.x13 = mulmod(sc.x13, c, p);
        sc2.x02 = pmod(1 - sc2.x13, p);
        REQUIRE(strongly_generic(sc2, 7));
        Zeta b = zeta_invariants(sc2);
        CHECK(b.zeta2 == a.zeta2);
        CHECK(b.zeta1 != a.zeta1);
    }
}

TEST_CASE("zeta2 = xi1 forces x13 = 0 and x02 = 1/xi1") {
    FLData fl = unit_data(1, 1, 0);
    fl.xi = {2, 3, 5, 0};
    fl.xi[3] = mulmod(15, invmod(2, 37), 37);
    fl.x13 = 0;
    fl.x02 = invmod(3, 37);
    fl.x03 = 4;
    REQUIRE(strongly_generic(fl, 7));
    Zeta z = zeta_invariants(fl);
    CHECK(z.zeta2 == 3);
    FLData back = recover_fl({fl.p, fl.a, fl.xi}, z.zeta1, z.zeta2);
    CHECK(back.x13 == 0);
    CHECK(back.x02 == invmod(3, 37));
}

TEST_CASE("zeta round trip") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 1000; ++i) {
        FLData fl = random_strongly_generic(37, 7, rng);
        Zeta z = zeta_invariants(fl);
        CHECK(recover_fl({fl.p, fl.a, fl.xi}, z.zeta1, z.zeta2) == fl);
    }
}

TEST_CASE("recover_fl excluded locus") {
    FLDiagonal d{37, {0, 9, 19, 28}, {1, 1, 1, 1}};
    CHECK_THROWS_AS(recover_fl(d, 0, 1), Error);
    // find zeta1 with xi1 K + xi2 r = 0 for zeta2 = 2
    bool hit = false;
    for (i64 z1 = 1; z1 < 37; ++z1) {
        try {
            recover_fl(d, z1, 2);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NoSolution);
            hit = true;
        }
    }
    CHECK(hit);
}

TEST_CASE("types and weights") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 100; ++i) {
        FLData fl = random_strongly_generic(37, 7, rng);
        auto t = types_and_weights(fl);
        CHECK(t.mu0 - t.mu_rhobar == Weight(2, 2, 0));
        CHECK(alcove_of(t.mu_rhobar, 37) == Alcove::C0);
    }
}

TEST_CASE("Laurent arithmetic") {
    LaurentPoly a = LaurentPoly::monomial(7, 3, 1) + LaurentPoly::monomial(7, 1, -1);
    LaurentPoly b = LaurentPoly::monomial(7, 5, 2);
    CHECK((a * b).coeff(3) == 1);
    CHECK((a * b).coeff(1) == 5);
    CHECK((a * b).valuation() == 1);
    CHECK((a - a).terms().empty());
}
