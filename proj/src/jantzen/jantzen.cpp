#include "modrep/jantzen.hpp"

#include <cmath>
#include <complex>
#include <random>

namespace modrep {

std::vector<SumFormulaTerm> sum_formula_terms(const RootDatum& R, const Weight& l, const WeylElt& w, i64 p) {
    std::vector<SumFormulaTerm> out;
    for (int k : R.inversion_set(w)) {
        i64 pr = R.pair(l, k);
        if (pr <= 0)
            throw Error(ErrorKind::InvalidInput,
                        "sum formula needs <lambda, alpha^vee> > 0 for " + R.root_names[k]);
        i64 m = (pr - 1) / (p - 1);
        out.push_back({k, pr - m * (p - 1), m});
    }
    return out;
}

VirtualCharacter sum_formula_twice(const RootDatum& R, const Weight& l, const WeylElt& w, i64 p) {
    VirtualCharacter two;
    const WeylElt& id = R.identity();
    for (const auto& t : sum_formula_terms(R, l, w, p)) {
        const Weight& alpha = R.roots[t.root];
        const WeylElt& s = R.reflection(t.root);
        two.add(dl_reduce_weyl(R, s, l + t.m * alpha, p), 2);
        for (i64 j = 1; j < t.r; ++j) {
            two.add(dl_reduce_weyl(R, id, l - j * alpha, p), -1);
            two.add(dl_reduce_weyl(R, s, l - (j - t.m) * alpha, p), 1);
        }
    }
    return two;
}

namespace {
VirtualCharacter halve(const VirtualCharacter& two) {
    VirtualCharacter out;
    for (const auto& [s, c] : two.terms()) {
        if (c % 2 != 0) throw Error(ErrorKind::HalfInteger, "odd coefficient in 2*nu");
        out.add(s, c / 2);
    }
    return out;
}
}  // namespace

VirtualCharacter sum_formula(const RootDatum& R, const Weight& l, const WeylElt& w, i64 p) {
    VirtualCharacter two = sum_formula_twice(R, l, w, p);
    if (R.id == GroupId::GSp4) {
        try {
            return halve(to_serre(two, p));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::Depth && e.kind() != ErrorKind::SmallWeight) throw;
        }
    }
    return halve(two);
}

i64 sum_formula_dim(const RootDatum& R, const Weight& l, const WeylElt& w, i64 p) {
    i64 d = dimension(sum_formula_twice(R, l, w, p), p, R);
    if (d % 2 != 0) throw Error(ErrorKind::HalfInteger, "dim(2 nu) is odd");
    return d / 2;
}

VirtualCharacter principal_series(const Weight& l, i64 p) {
    return to_serre(dl_reduce(gsp4().identity(), l, p), p);
}

std::size_t FiltrationProfile::factor_count() const {
    std::size_t n = 0;
    for (const auto& layer : layers) n += layer.size();
    return n;
}

FiltrationProfile graded_pieces(const Weight& l, const WeylElt& w, i64 p, int min_depth) {
    const RootDatum& R = gsp4();
    if (!is_restricted_alcove(alcove_of(l, p)))
        throw Error(ErrorKind::Depth, "graded pieces need a weight in a restricted alcove");
    if (depth_of(l, p) < min_depth)
        throw Error(ErrorKind::Depth, "weight is only " + std::to_string(depth_of(l, p)) + "-deep");
    VirtualCharacter ps = principal_series(l, p);
    VirtualCharacter nu = sum_formula(R, l, w, p);
    FiltrationProfile prof;
    prof.lambda = l;
    prof.w = w.index;
    prof.layers.assign(static_cast<std::size_t>(w.length()) + 1, {});
    for (const auto& [s, c] : ps.terms()) {
        if (c != 1) throw Error(ErrorKind::Multiplicity, "principal series factor with multiplicity != 1");
        if (s.kind != CharKind::SerreF) throw Error(ErrorKind::Invariant, "unreduced principal series symbol");
        i64 layer = nu.coeff(s);
        if (layer < 0 || layer > w.length())
            throw Error(ErrorKind::Multiplicity, "coefficient in nu outside [0, l(w)]");
        prof.layers[static_cast<std::size_t>(layer)].add(s, 1);
    }
    for (const auto& [s, c] : nu.terms())
        if (ps.coeff(s) == 0) throw Error(ErrorKind::Multiplicity, "nu has a factor outside the principal series");
    return prof;
}

std::vector<A3Row> table_a3(i64 p) {
    const RootDatum& R = gsp4();
    const WeylElt& w = R.from_word({1, 0, 1});
    std::vector<A3Row> rows;
    for (Alcove a : kRestrictedAlcoves) {
        auto wit = find_deep_witness(a, 7, p);
        if (!wit)
            throw Error(ErrorKind::NoSolution, std::string("no 7-deep witness in ") + alcove_name(a) +
                                                   " at p=" + std::to_string(p));
        rows.push_back({a, graded_pieces(*wit, w, p)});
    }
    return rows;
}

// ---- Weyl-module sum formula --------------------------------------------------------

namespace {

std::map<Alcove, i64> weyl_sum_pattern(const Weight& l, i64 p, int depth) {
    if (depth > 12) throw Error(ErrorKind::Depth, "Weyl-module recursion too deep");
    const RootDatum& R = gsp4();
    Alcove a = alcove_of(l, p);
    if (a == Alcove::NotListed) throw Error(ErrorKind::Depth, "weight outside the listed alcoves");
    std::map<Alcove, i64> sum;
    const Weight x = l + R.rho_prime;
    for (std::size_t k = 0; k < R.roots.size(); ++k) {
        i64 n = R.pair(x, static_cast<int>(k));
        for (i64 m = 1; m * p < n; ++m) {
            Weight mu = l - (n - m * p) * R.roots[k];
            auto [sign, dom] = weyl_reflect(R, mu);
            if (sign == 0) continue;
            for (auto [b, c] : weyl_sum_pattern(dom, p, depth + 1)) sum[b] += sign * valuation(m * p, p) * c;
        }
    }
    std::map<Alcove, i64> out{{a, 1}};
    for (auto [b, c] : sum) {
        if (c < 0) throw Error(ErrorKind::Invariant, "negative coefficient in the Weyl-module sum formula");
        if (c > 0) out[b] = 1;
    }
    return out;
}

}  // namespace

std::vector<Alcove> derive_weyl_jh(Alcove a, i64 p) {
    auto w = find_deep_witness(a, 3, p);
    if (!w) throw Error(ErrorKind::Depth, "no witness for the alcove");
    std::vector<Alcove> out;
    for (auto [b, c] : weyl_sum_pattern(*w, p, 0))
        if (b != a) out.push_back(b);
    return out;
}

// ---- split torus traces ----------------------------------------------------------------

namespace {

using cplx = std::complex<double>;

struct TorusPoint {
    std::array<i64, 3> k;  // t acts on weight (a,b;c) by zeta^(a k0 + b k1 + (c-a-b)/2 k2)
    i64 order;
    cplx ev(const Weight& l) const {
        i64 e = pmod(l[0] * k[0] + l[1] * k[1] + floor_div(l[2] - l[0] - l[1], 2) * k[2], order);
        double th = 2.0 * 3.14159265358979323846 * static_cast<double>(e) / static_cast<double>(order);
        return {std::cos(th), std::sin(th)};
    }
};

cplx weyl_trace(const Weight& l, const TorusPoint& t) {
    const RootDatum& R = gsp4();
    cplx num = 0, den = 1;
    for (const auto& w : R.W) num += static_cast<double>(w.sign()) * t.ev(R.dot(w, l));
    for (const auto& a : R.roots) den *= cplx(1) - t.ev(-1 * a);
    return num / den;
}

cplx irred_trace(const Weight& l, const TorusPoint& t, i64 p) {
    Alcove a = alcove_of(l, p);
    cplx v = weyl_trace(l, t);
    for (Alcove b : weyl_jh_pattern(a)) v -= irred_trace(linked_weight(l, b, p), t, p);
    return v;
}

}  // namespace

double torus_trace_defect(const Weight& lambda, const std::vector<Weight>& serre_weights, i64 p, int samples,
                          u64 seed) {
    const RootDatum& R = gsp4();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<i64> dist(0, p - 2);
    double worst = 0;
    int taken = 0;
    for (int attempt = 0; taken < samples && attempt < 100 * samples; ++attempt) {
        TorusPoint t{{dist(rng), dist(rng), dist(rng)}, p - 1};
        bool regular = true;
        for (const auto& a : R.roots) regular = regular && std::abs(t.ev(a) - cplx(1)) > 1e-9;
        if (!regular) continue;
        ++taken;
        cplx ps = 0;
        for (const auto& w : R.W) ps += t.ev(R.act(w, lambda));
        cplx sum = 0;
        for (const auto& f : serre_weights) sum += irred_trace(f, t, p);
        worst = std::max(worst, std::abs(ps - sum));
    }
    return worst;
}

}  // namespace modrep
