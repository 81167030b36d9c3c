#include <doctest.h>

#include <algorithm>

#include "modrep/rootdata.hpp"

using namespace modrep;

TEST_CASE("Weyl group sizes and longest element") {
    CHECK(gsp4().W.size() == 8);
    CHECK(root_datum(GroupId::SL2).W.size() == 2);
    CHECK(root_datum(GroupId::GL3).W.size() == 6);
    CHECK(root_datum(GroupId::GL4).W.size() == 24);
    CHECK(gsp4().longest().length() == 4);
}

TEST_CASE("Coxeter relations") {
    const RootDatum& R = gsp4();
    const WeylElt& s0 = R.from_word({0});
    const WeylElt& s1 = R.from_word({1});
    CHECK(R.mul(s0, s0).index == R.identity().index);
    CHECK(R.mul(s1, s1).index == R.identity().index);
    const WeylElt& st = R.mul(s0, s1);
    CHECK(R.mul(R.mul(st, st), R.mul(st, st)).index == R.identity().index);
    CHECK(R.mul(st, st).index != R.identity().index);
}

TEST_CASE("inverse and lengths") {
    for (GroupId g : {GroupId::GSp4, GroupId::GL3, GroupId::GL4}) {
        const RootDatum& R = root_datum(g);
        for (const auto& w : R.W) {
            CHECK(R.mul(w, R.inverse(w)).index == R.identity().index);
            CHECK(R.inversion_set(w).size() == static_cast<std::size_t>(w.length()));
        }
    }
}

TEST_CASE("dot action examples") {
    const RootDatum& R = gsp4();
    Weight l(5, 2, 1);
    CHECK(dot_action(R.identity(), l, R.rho_prime) == l);
    CHECK(dot_action(R.from_word({0}), Weight(0, 0, 0), R.rho_prime) == Weight(-1, 1, 0));
    const WeylElt& w0 = R.longest();
    CHECK(dot_action(w0, dot_action(w0, l, R.rho_prime), R.rho_prime) == l);
}

TEST_CASE("reflections preserve pairings up to sign") {
    const RootDatum& R = gsp4();
    Weight l(7, 3, 0);
    for (std::size_t k = 0; k < R.roots.size(); ++k) {
        Weight r = R.reflect(static_cast<int>(k), l);
        CHECK(R.pair(R.reflect(static_cast<int>(k), r), static_cast<int>(k)) == R.pair(l, static_cast<int>(k)));
        CHECK(R.pair(r, static_cast<int>(k)) == -R.pair(l, static_cast<int>(k)));
    }
}

TEST_CASE("alcove_of examples") {
    CHECK(alcove_of(Weight(0, 0, 0), 7) == Alcove::C0);
    CHECK(alcove_of(Weight(-2, -1, -1), 7) == Alcove::NotListed);
    CHECK(alcove_of(Weight(-2, -1, -1), 37) == Alcove::NotListed);
    // last pairing p+1, others inside (0,p)
    const i64 p = 11;
    bool found = false;
    for (i64 x = 0; x < 3 * p && !found; ++x)
        for (i64 y = 0; y <= x && !found; ++y) {
            auto a = alcove_pairings(Weight(x, y, (x + y) % 2));
            if (a[3] == p + 1 && a[0] < p && a[1] < p && a[2] < p) {
                CHECK(alcove_of(Weight(x, y, (x + y) % 2), p) == Alcove::C1);
                found = true;
            }
        }
    CHECK(found);
}

TEST_CASE("alcove_of agrees with the interval table on deep witnesses") {
    for (Alcove a : kListedAlcoves) {
        auto w = find_deep_witness(a, 3, 37);
        REQUIRE(w.has_value());
        CHECK(alcove_of(*w, 37) == a);
        auto iv = alcove_intervals(a);
        auto pr = alcove_pairings(*w);
        for (int c = 0; c < 4; ++c) {
            CHECK(pr[c] > iv[c] * 37);
            CHECK(pr[c] < (iv[c] + 1) * 37);
        }
    }
}

TEST_CASE("depth examples") {
    auto w = find_deep_witness(Alcove::C0, 7, 37);
    REQUIRE(w.has_value());
    CHECK(depth_of(*w, 37) == 7);
    CHECK(*w == Weight(14, 7, 1));
    Weight l(15, 8, 1);
    auto pr = alcove_pairings(l);
    std::vector<i64> v(pr.begin(), pr.end());
    std::sort(v.begin(), v.end());
    CHECK(v == std::vector<i64>{8, 9, 17, 26});
    CHECK(depth_of(l, 37) == 7);
    // pairing at the midpoint (p-1)/2 (SL2, where a single root makes it attainable)
    CHECK(depth_of(root_datum(GroupId::SL2), Weight(17), 37) == 17);
    CHECK(depth_of(Weight(-2, -1, -1), 37) == -1);
    CHECK_FALSE(find_deep_witness(Alcove::C0, 7, 29).has_value());
    auto low = find_deep_witness(Alcove::C0, 0, 7);
    REQUIRE(low.has_value());
    CHECK(*low == Weight(0, 0, 0));
}

TEST_CASE("depth is the distance to the nearest wall") {
    const i64 p = 23;
    for (i64 x = 0; x < 2 * p; ++x)
        for (i64 y = 0; y <= x; ++y) {
            Weight l(x, y, (x + y) % 2);
            auto pr = alcove_pairings(l);
            i64 best = p;
            for (i64 v : pr) best = std::min(best, std::min(pmod(v, p), p - pmod(v, p)));
            i64 expect = best == 0 ? -1 : best - 1;
            CHECK(depth_of(l, p) == expect);
        }
}

TEST_CASE("affine length examples") {
    const RootDatum& R = gsp4();
    auto lam = AffineWeylElt::translation(GroupId::GSp4, {0, 0, -1, -1});
    auto wpi = AffineWeylElt::finite(R, R.from_word({1, 0, 1}));
    auto wpt = AffineWeylElt::translation(GroupId::GSp4, {0, 0, 1, 1}) * wpi;
    CHECK(affine_length(lam) == 3);
    CHECK(affine_length(wpt) == 0);
    CHECK(lengths_add(lam, wpt));
    CHECK(lam * wpt == wpi);
    for (const auto& w : R.W) CHECK(affine_length(AffineWeylElt::finite(R, w)) == w.length());
    CHECK(inverse(wpt) * wpt == AffineWeylElt::finite(R, R.identity()));
}

TEST_CASE("linked weights stay in one dot orbit") {
    const i64 p = 37;
    auto w = *find_deep_witness(Alcove::C0, 3, p);
    for (Alcove a : kListedAlcoves) {
        Weight l = linked_weight(w, a, p);
        CHECK(alcove_of(l, p) == a);
    }
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_group("Sp6"), Error);
    CHECK(gsp4().parse_word("s1s0s1").index == gsp4().from_word({1, 0, 1}).index);
    CHECK(gsp4().parse_word("id").index == gsp4().identity().index);
}
