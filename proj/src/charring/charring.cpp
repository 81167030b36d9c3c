#include "modrep/charring.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>
#include <sstream>

namespace modrep {

const char* char_kind_name(CharKind k) {
    switch (k) {
        case CharKind::WeylChi: return "WeylChi";
        case CharKind::IrredChiP: return "IrredChiP";
        case CharKind::SerreF: return "SerreF";
    }
    return "?";
}

Weight serre_key(const Weight& l, i64 p) {
    Weight k = l;
    k[2] = pmod(l[2], 2 * (p - 1));
    return k;
}

CharSymbol serre_symbol(const Weight& l, i64 p) {
    if (!is_restricted(gsp4(), l, p))
        throw Error(ErrorKind::InvalidInput, "Serre weight must be p-restricted: " + gsp4().format(l));
    return {CharKind::SerreF, serre_key(l, p)};
}

void VirtualCharacter::add(const CharSymbol& s, i64 c) {
    if (c == 0) return;
    auto it = terms_.find(s);
    if (it == terms_.end()) {
        terms_.emplace(s, c);
    } else if ((it->second += c) == 0) {
        terms_.erase(it);
    }
}

void VirtualCharacter::add(const VirtualCharacter& o, i64 scale) {
    for (const auto& [s, c] : o.terms_) add(s, c * scale);
}

i64 VirtualCharacter::coeff(const CharSymbol& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? 0 : it->second;
}

VirtualCharacter operator*(i64 k, VirtualCharacter a) {
    if (k == 0) return {};
    for (auto& [s, c] : a.terms_) c *= k;
    return a;
}

std::string to_string(const VirtualCharacter& v, const RootDatum& R) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, c] : v.terms()) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        if (std::abs(c) != 1) os << std::abs(c) << "*";
        const char* tag = s.kind == CharKind::WeylChi ? "chi" : s.kind == CharKind::IrredChiP ? "chi_p" : "F";
        os << tag << R.format(s.weight);
    }
    if (first) os << "0";
    return os.str();
}

WPoly poly_mul(const WPoly& a, const WPoly& b) {
    WPoly out;
    for (const auto& [x, c] : a)
        for (const auto& [y, d] : b) {
            i64& slot = out[x + y];
            slot += c * d;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

WPoly poly_act(const RootDatum& R, const WeylElt& w, const WPoly& a) {
    WPoly out;
    for (const auto& [x, c] : a) out[R.act(w, x)] += c;
    return out;
}

std::pair<int, Weight> weyl_reflect(const RootDatum& R, const Weight& l) {
    Weight x = l + R.rho_prime;
    int sign = 1;
    for (;;) {
        bool moved = false;
        for (int k : R.simple) {
            i64 v = R.pair(x, k);
            if (v == 0) return {0, Weight{}};
            if (v < 0) {
                x = R.reflect(k, x);
                sign = -sign;
                moved = true;
            }
        }
        if (!moved) break;
    }
    return {sign, x - R.rho_prime};
}

i64 weyl_dim(const RootDatum& R, const Weight& l) {
    auto [sign, d] = weyl_reflect(R, l);
    if (sign == 0) return 0;
    Weight x = d + R.rho_prime;
    i64 num = 1, den = 1;
    for (std::size_t k = 0; k < R.roots.size(); ++k) {
        num *= R.pair(x, static_cast<int>(k));
        den *= R.pair(R.rho_prime, static_cast<int>(k));
    }
    return sign * (num / den);
}

VirtualCharacter demazure(const RootDatum& R, const WPoly& a) {
    VirtualCharacter out;
    for (const auto& [x, c] : a) {
        auto [sign, d] = weyl_reflect(R, x);
        if (sign) out.add(weyl_chi(d), sign * c);
    }
    return out;
}

// ---- Steinberg basis ---------------------------------------------------------

namespace {

Weight rho_w(const RootDatum& R, const WeylElt& w) {
    const WeylElt& wi = R.inverse(w);
    Weight s;
    for (std::size_t i = 0; i < R.simple.size(); ++i)
        if (R.root_sign(R.act(wi, R.roots[R.simple[i]])) < 0) s += R.fundamental[i];
    return s;
}

std::vector<WPoly> steinberg_b(const RootDatum& R) {
    std::vector<WPoly> b;
    for (const auto& w : R.W) b.push_back({{R.act(R.inverse(w), rho_w(R, w)), 1}});
    return b;
}

SteinbergBasis gsp4_embedded() {
    const RootDatum& R = gsp4();
    SteinbergBasis S;
    S.b = steinberg_b(R);
    S.dual.resize(R.W.size());
    auto set = [&](std::vector<int> word, WPoly poly) { S.dual[R.from_word(word).index] = std::move(poly); };
    set({}, {{Weight(0, 0, 0), 1}, {Weight(-2, 0, 0), 1}});
    set({0}, {{Weight(-1, 0, -1), -1}});
    set({1}, {{Weight(-1, -1, 0), -1}});
    set({0, 1}, {{Weight(-2, -1, -1), 1}, {Weight(-1, -2, -1), 1}});
    set({1, 0}, {{Weight(-2, 0, 0), 1}});
    set({0, 1, 0}, {{Weight(-3, 0, -1), -1}, {Weight(-1, 0, -1), -1}});
    set({1, 0, 1}, {{Weight(-2, -2, 0), -1}, {Weight(-1, -1, 0), -1}});
    set({0, 1, 0, 1}, {{Weight(-2, -1, -1), 1}});
    return S;
}

constexpr i64 kSolvePrime = 2147483647;

}  // namespace

SteinbergBasis solve_steinberg_dual(const RootDatum& R, int radius) {
    SteinbergBasis S;
    S.b = steinberg_b(R);
    const std::size_t nW = R.W.size();

    std::vector<Weight> box;
    std::array<i64, 4> lo{}, hi{};
    for (int i = 0; i < R.dim; ++i) lo[i] = -radius, hi[i] = radius;
    for (i64 a = lo[0]; a <= hi[0]; ++a)
        for (i64 b = lo[1]; b <= hi[1]; ++b)
            for (i64 c = lo[2]; c <= hi[2]; ++c)
                for (i64 d = lo[3]; d <= hi[3]; ++d) {
                    Weight m(a, b, c, d);
                    if (R.valid(m)) box.push_back(m);
                }
    const std::size_t nU = box.size();

    // Rows indexed by (v, dominant weight); columns: unknowns then |W| right-hand sides.
    std::map<std::pair<int, Weight>, std::vector<i64>> rows;
    auto row = [&](int v, const Weight& d) -> std::vector<i64>& {
        auto& r = rows[{v, d}];
        if (r.empty()) r.assign(nU + nW, 0);
        return r;
    };
    for (std::size_t v = 0; v < nW; ++v)
        for (std::size_t j = 0; j < nU; ++j) {
            WPoly prod = poly_mul(S.b[v], {{box[j], 1}});
            VirtualCharacter dv = demazure(R, prod);
            for (const auto& [sym, c] : dv.terms())
                row(static_cast<int>(v), sym.weight)[j] += c;
        }
    for (std::size_t w = 0; w < nW; ++w) row(static_cast<int>(w), Weight{})[nU + w] = 1;

    std::vector<std::vector<i64>> M;
    for (auto& [k, r] : rows) {
        for (auto& x : r) x = pmod(x, kSolvePrime);
        M.push_back(std::move(r));
    }
    std::vector<int> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < nU && rank < M.size(); ++col) {
        std::size_t piv = rank;
        while (piv < M.size() && M[piv][col] == 0) ++piv;
        if (piv == M.size()) continue;
        std::swap(M[piv], M[rank]);
        i64 inv = invmod(M[rank][col], kSolvePrime);
        for (auto& x : M[rank]) x = mulmod(x, inv, kSolvePrime);
        for (std::size_t r = 0; r < M.size(); ++r) {
            if (r == rank || M[r][col] == 0) continue;
            i64 f = M[r][col];
            for (std::size_t c = col; c < nU + nW; ++c)
                if (M[rank][c]) M[r][c] = pmod(M[r][c] - mulmod(f, M[rank][c], kSolvePrime), kSolvePrime);
        }
        pivot_col.push_back(static_cast<int>(col));
        ++rank;
    }
    for (std::size_t r = rank; r < M.size(); ++r)
        for (std::size_t w = 0; w < nW; ++w)
            if (M[r][nU + w]) throw Error(ErrorKind::NoSolution, "dual Steinberg basis: inconsistent system");

    S.dual.assign(nW, {});
    for (std::size_t w = 0; w < nW; ++w) {
        for (std::size_t r = 0; r < rank; ++r) {
            i64 v = M[r][nU + w];
            if (v > kSolvePrime / 2) v -= kSolvePrime;
            if (v) S.dual[w][box[pivot_col[r]]] = v;
        }
    }
    // Exact verification over Z.
    for (std::size_t v = 0; v < nW; ++v)
        for (std::size_t w = 0; w < nW; ++w) {
            VirtualCharacter got = demazure(R, poly_mul(S.b[v], S.dual[w]));
            VirtualCharacter want = v == w ? VirtualCharacter(weyl_chi(Weight{})) : VirtualCharacter{};
            if (!(got == want)) throw Error(ErrorKind::Invariant, "dual Steinberg basis failed exact check");
        }
    return S;
}

const SteinbergBasis& steinberg_basis(const RootDatum& R) {
    static std::mutex mu;
    static std::map<GroupId, SteinbergBasis> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(R.id);
    if (it != cache.end()) return it->second;
    SteinbergBasis S = R.id == GroupId::GSp4 ? gsp4_embedded() : solve_steinberg_dual(R, 3);
    return cache.emplace(R.id, std::move(S)).first->second;
}

// ---- Deligne-Lusztig reduction ----------------------------------------------

VirtualCharacter dl_reduce_weyl(const RootDatum& R, const WeylElt& sigma, const Weight& mu, i64 p) {
    const SteinbergBasis& S = steinberg_basis(R);
    Weight base = mu - R.rho_prime + R.act(sigma, R.rho_prime);
    WPoly acc;
    for (std::size_t w = 0; w < R.W.size(); ++w) {
        WPoly frob;
        for (const auto& [x, c] : S.b[w]) frob[p * x] += c;
        WPoly term = poly_mul(poly_mul({{base, 1}}, poly_act(R, sigma, S.dual[w])), frob);
        for (const auto& [x, c] : term) acc[x] += c;
    }
    return demazure(R, acc);
}

namespace {
void check_listed(const VirtualCharacter& v, i64 p) {
    for (const auto& [s, c] : v.terms())
        if (alcove_of(s.weight, p) == Alcove::NotListed)
            throw Error(ErrorKind::Depth, "Weyl weight " + gsp4().format(s.weight) +
                                              " outside the listed alcoves (weight not deep enough)");
}
}  // namespace

VirtualCharacter dl_reduce(const WeylElt& sigma, const Weight& mu, i64 p) {
    VirtualCharacter v = dl_reduce_weyl(gsp4(), sigma, mu, p);
    check_listed(v, p);
    return v;
}

std::vector<DLTerm> dl_table(const RootDatum& R) {
    const SteinbergBasis& S = steinberg_basis(R);
    std::vector<DLTerm> out;
    for (const auto& w1 : R.W)
        for (const auto& [nu, c] : S.dual[w1.index])
            out.push_back({w1.index, w1.sign() * c, -(R.rho_prime + nu), rho_w(R, w1)});
    return out;
}

VirtualCharacter dl_reduce_table(const WeylElt& sigma, const Weight& mu, i64 p) {
    const RootDatum& R = gsp4();
    VirtualCharacter out;
    for (const auto& t : dl_table(R)) {
        const WeylElt& w1 = R.W[t.w1];
        Weight x = R.act(w1, mu - R.act(sigma, t.eps)) + p * t.rho_w1 - R.rho_prime;
        auto [sign, d] = weyl_reflect(R, x);
        if (sign) out.add(weyl_chi(d), sign * t.gamma);
    }
    check_listed(out, p);
    return out;
}

// ---- Weyl modules ------------------------------------------------------------

const std::vector<Alcove>& weyl_jh_pattern(Alcove a) {
    using A = Alcove;
    static const std::map<Alcove, std::vector<Alcove>> table = {
        {A::C0, {}},
        {A::C1, {A::C0}},
        {A::C2, {A::C1}},
        {A::C3, {A::C2}},
        {A::D0, {A::C3}},
        {A::D1, {A::D0, A::E1, A::C3}},
        {A::E0, {A::C2}},
        {A::E1, {A::E0, A::C3, A::C2, A::C1}},
        {A::E2, {A::E1, A::D0, A::C3, A::C2, A::C1, A::C0}},
        {A::E3, {A::E2, A::C2}},
    };
    auto it = table.find(a);
    if (it == table.end()) throw Error(ErrorKind::Depth, "alcove not listed");
    return it->second;
}

VirtualCharacter weyl_jh(const Weight& l, i64 p) {
    const RootDatum& R = gsp4();
    Alcove a = alcove_of(l, p);
    if (a == Alcove::NotListed)
        throw Error(ErrorKind::Depth, "weight " + R.format(l) + " is not in a listed alcove");
    VirtualCharacter out(irred_chi(l));
    for (Alcove b : weyl_jh_pattern(a)) {
        Weight m = linked_weight(l, b, p);
        if (!R.dominant(m)) throw Error(ErrorKind::Depth, "linked weight is not dominant");
        out.add(irred_chi(m), 1);
    }
    return out;
}

std::map<Weight, i64> weyl_module_weights(const RootDatum& R, const Weight& l) {
    Weight h;
    for (const auto& c : R.coroots) h += c;
    auto height = [&](const Weight& v) {
        i64 s = 0;
        for (int i = 0; i < 4; ++i) s += v[i] * h[i];
        return s;
    };
    std::map<std::pair<Weight, std::size_t>, i64> memo;
    std::function<i64(const Weight&, std::size_t)> kostant = [&](const Weight& v, std::size_t k) -> i64 {
        if (k == R.roots.size()) return v == Weight{} ? 1 : 0;
        if (height(v) < 0) return 0;
        auto key = std::make_pair(v, k);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        i64 total = 0;
        for (Weight u = v; height(u) >= 0; u -= R.roots[k]) total += kostant(u, k + 1);
        memo[key] = total;
        return total;
    };
    i64 bound = height(l - R.act(R.longest(), l));
    std::set<Weight> cand{l};
    std::deque<Weight> queue{l};
    while (!queue.empty()) {
        Weight m = queue.front();
        queue.pop_front();
        for (int k : R.simple) {
            Weight n = m - R.roots[k];
            if (height(l - n) <= bound && cand.insert(n).second) queue.push_back(n);
        }
    }
    std::map<Weight, i64> out;
    for (const Weight& mu : cand) {
        i64 m = 0;
        for (const auto& w : R.W) m += w.sign() * kostant(R.act(w, l + R.rho_prime) - (mu + R.rho_prime), 0);
        if (m) out[mu] = m;
    }
    return out;
}

RestrictedSplit split_restricted(const Weight& l, i64 p) {
    i64 b1 = floor_div(l[1], p);
    i64 d1 = floor_div(l[0] - l[1], p);
    i64 a1 = d1 + b1;
    Weight l1(a1, b1, pmod(a1 + b1, 2));
    return {l - p * l1, l1};
}

VirtualCharacter irred_to_serre(const Weight& l, i64 p) {
    const RootDatum& R = gsp4();
    if (!R.dominant(l)) throw Error(ErrorKind::InvalidInput, "irred_to_serre needs a dominant weight");
    auto [l0, l1] = split_restricted(l, p);
    VirtualCharacter out;
    if (l1[0] == 0 && l1[1] == 0) {
        out.add(serre_symbol(l0 + l1, p), 1);
        return out;
    }
    if (alcove_of(l1, p) != Alcove::C0)
        throw Error(ErrorKind::SmallWeight, "high part " + R.format(l1) + " is not small");
    Alcove a = alcove_of(l0, p);
    for (const auto& [nu, m] : weyl_module_weights(R, l1)) {
        Weight x = l0 + nu;
        if (a == Alcove::NotListed || alcove_of(x, p) != a)
            throw Error(ErrorKind::SmallWeight, "weight " + R.format(x) + " leaves the alcove of " + R.format(l0));
        out.add(serre_symbol(x, p), m);
    }
    return out;
}

VirtualCharacter to_serre(const VirtualCharacter& v, i64 p) {
    VirtualCharacter out;
    for (const auto& [s, c] : v.terms()) {
        switch (s.kind) {
            case CharKind::WeylChi: {
                VirtualCharacter jh = weyl_jh(s.weight, p);
                for (const auto& [t, d] : jh.terms()) out.add(irred_to_serre(t.weight, p), c * d);
                break;
            }
            case CharKind::IrredChiP:
                out.add(irred_to_serre(s.weight, p), c);
                break;
            case CharKind::SerreF:
                out.add(s, c);
                break;
        }
    }
    return out;
}

i64 irred_dim(const Weight& l, i64 p) {
    Alcove a = alcove_of(l, p);
    if (a == Alcove::NotListed)
        throw Error(ErrorKind::Depth, "irreducible dimension needs a listed alcove: " + gsp4().format(l));
    i64 d = weyl_dim(l);
    for (Alcove b : weyl_jh_pattern(a)) d -= irred_dim(linked_weight(l, b, p), p);
    return d;
}

i64 serre_dim(const Weight& key, i64 p) { return irred_dim(key, p); }

i64 dimension(const VirtualCharacter& v, i64 p, const RootDatum& R) {
    i64 total = 0;
    for (const auto& [s, c] : v.terms()) {
        switch (s.kind) {
            case CharKind::WeylChi: total += c * weyl_dim(R, s.weight); break;
            case CharKind::IrredChiP: total += c * irred_dim(s.weight, p); break;
            case CharKind::SerreF: total += c * serre_dim(s.weight, p); break;
        }
    }
    return total;
}

std::string serre_label(const Weight& key, const Weight& witness, i64 p) {
    Alcove a = alcove_of(key, p);
    if (!is_restricted_alcove(a))
        throw Error(ErrorKind::Invariant, "Serre weight " + gsp4().format(key) + " not in a restricted alcove");
    i64 shift = pmod(key[2] - witness[2], 2 * (p - 1));
    std::ostringstream os;
    if (shift == 0) os << "F(";
    else if (shift == p - 1) os << "F'(";
    else throw Error(ErrorKind::Invariant, "central character not z or z+p-1");
    os << key[0] << "," << key[1] << ")_" << (static_cast<int>(a) - static_cast<int>(Alcove::C0));
    return os.str();
}

}  // namespace modrep
