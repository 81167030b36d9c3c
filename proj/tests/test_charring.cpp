#include <doctest.h>

#include <set>

#include "modrep/charring.hpp"

using namespace modrep;

TEST_CASE("Weyl dimension examples") {
    CHECK(weyl_dim(Weight(0, 0, 0)) == 1);
    CHECK(weyl_dim(Weight(1, 0, 1)) == 4);
    CHECK(weyl_dim(Weight(1, 1, 0)) == 5);
}

TEST_CASE("Weyl dimension equals the number of weights with multiplicity") {
    const RootDatum& R = gsp4();
    for (i64 x = 0; x < 6; ++x)
        for (i64 y = 0; y <= x; ++y) {
            Weight l(x, y, (x + y) % 2);
            i64 n = 0;
            for (const auto& [mu, m] : weyl_module_weights(R, l)) n += m;
            CHECK(n == weyl_dim(l));
        }
    for (i64 a = 0; a < 4; ++a)
        for (i64 b = 0; b < 4; ++b) {
            const RootDatum& G = root_datum(GroupId::GL3);
            Weight l(a + b, b, 0);
            i64 n = 0;
            for (const auto& [mu, m] : weyl_module_weights(G, l)) n += m;
            CHECK(n == weyl_dim(G, l));
        }
}

TEST_CASE("weights of the standard representation") {
    auto w = weyl_module_weights(gsp4(), Weight(1, 0, -1));
    std::set<Weight> got;
    for (const auto& [mu, m] : w) {
        CHECK(m == 1);
        got.insert(mu);
    }
    CHECK(got == std::set<Weight>{Weight(1, 0, -1), Weight(0, 1, -1), Weight(0, -1, -1), Weight(-1, 0, -1)});
}

TEST_CASE("Weyl reflection to dominant form") {
    const RootDatum& R = gsp4();
    Weight l(6, 2, 0);
    auto [s, d] = weyl_reflect(l);
    CHECK(s == 1);
    CHECK(d == l);
    auto [s2, d2] = weyl_reflect(R.dot(R.from_word({0}), l));
    CHECK(s2 == -1);
    CHECK(d2 == l);
    // <lambda+rho', alpha0^vee> = 0
    Weight wall(-1, 0, 1);
    CHECK(weyl_reflect(wall).first == 0);
}

TEST_CASE("Steinberg dual basis") {
    for (GroupId g : {GroupId::GSp4, GroupId::GL3}) {
        const RootDatum& R = root_datum(g);
        const SteinbergBasis& S = steinberg_basis(R);
        for (const auto& v : R.W)
            for (const auto& w : R.W) {
                VirtualCharacter d = demazure(R, poly_mul(S.b[v.index], S.dual[w.index]));
                if (v.index == w.index)
                    CHECK(d == VirtualCharacter(weyl_chi(Weight())));
                else
                    CHECK(d.empty());
            }
    }
}

TEST_CASE("Deligne-Lusztig reduction: table form equals generic form") {
    const RootDatum& R = gsp4();
    const i64 p = 37;
    Weight mu = *find_deep_witness(Alcove::C0, 4, p);
    for (const auto& s : R.W) CHECK(dl_reduce(s, mu, p) == dl_reduce_table(s, mu, p));
    // 12 terms in the table, coefficients +-1
    auto table = dl_table(R);
    for (const auto& t : table) CHECK((t.gamma == 1 || t.gamma == -1));
}

TEST_CASE("principal series dimension from the Deligne-Lusztig reduction") {
    const i64 p = 37;
    Weight mu = *find_deep_witness(Alcove::C0, 4, p);
    i64 want = 1 + 2 * p + 2 * p * p + 2 * p * p * p + p * p * p * p;
    CHECK(dimension(dl_reduce(gsp4().identity(), mu, p), p) == want);
}

TEST_CASE("Deligne-Lusztig reduction is twist invariant") {
    const RootDatum& R = gsp4();
    const i64 p = 37;
    Weight mu = *find_deep_witness(Alcove::C0, 4, p);
    Weight nu(0, 0, 2);
    for (const auto& s : R.W) {
        VirtualCharacter a = dl_reduce(s, mu, p), b = dl_reduce(s, mu + (p - 1) * nu, p);
        VirtualCharacter shifted;
        for (const auto& [sym, c] : a.terms()) shifted.add({sym.kind, sym.weight + (p - 1) * nu}, c);
        CHECK(shifted == b);
    }
}

TEST_CASE("Weyl module Jordan-Holder patterns") {
    CHECK(weyl_jh_pattern(Alcove::C0).empty());
    CHECK(weyl_jh_pattern(Alcove::C2) == std::vector<Alcove>{Alcove::C1});
    CHECK(weyl_jh_pattern(Alcove::E2).size() == 6);
}

TEST_CASE("dimension additivity over the Weyl module patterns") {
    const i64 p = 37;
    for (Alcove a : kListedAlcoves) {
        Weight l = *find_deep_witness(a, 3, p);
        CHECK(dimension(weyl_jh(l, p), p) == weyl_dim(l));
    }
}

TEST_CASE("irreducible to Serre weights") {
    const i64 p = 37;
    Weight r(10, 4, 0);
    VirtualCharacter v = irred_to_serre(r, p);
    CHECK(v == VirtualCharacter(serre_symbol(r, p)));
    // 1-deep in E0: four terms F((x-p, y; z+p) + nu) over the weights nu of (1,0;-1)
    Weight l = *find_deep_witness(Alcove::E0, 1, p);
    std::set<Weight> expect;
    for (Weight nu : {Weight(1, 0, -1), Weight(0, 1, -1), Weight(0, -1, -1), Weight(-1, 0, -1)})
        expect.insert(serre_key(Weight(l[0] - p, l[1], l[2] + p) + nu, p));
    std::set<Weight> got;
    VirtualCharacter v2 = irred_to_serre(l, p);
    for (const auto& [sym, c] : v2.terms()) {
        CHECK(c == 1);
        got.insert(serre_key(sym.weight, p));
    }
    CHECK(got == expect);
}

TEST_CASE("Serre keys reduce the central coordinate") {
    const i64 p = 11;
    Weight l(5, 3, 0);
    CHECK(serre_key(l + Weight(0, 0, 2 * (p - 1)), p) == serre_key(l, p));
    CHECK_FALSE(serre_key(l + Weight(0, 0, p - 1), p) == serre_key(l, p));
    CHECK_THROWS_AS(serre_symbol(Weight(20, 3, 1), p), Error);
}
