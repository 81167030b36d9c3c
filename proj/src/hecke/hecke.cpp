#include "modrep/hecke.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "modrep/jantzen.hpp"

namespace modrep {

namespace {

int msize(GroupId g) { return root_datum(g).matrix_size; }

bool is_diagonal(const SmallMat& m) {
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            if (i != j && m.at(i, j) != 0) return false;
    return true;
}

}  // namespace

IMBasisElt IMBasisElt::identity(GroupId g) {
    IMBasisElt x;
    x.w.group = g;
    return x;
}

IMBasisElt IMBasisElt::torus(GroupId g, const std::array<i64, 4>& diag) {
    IMBasisElt x = identity(g);
    for (int i = 0; i < msize(g); ++i) x.unit[i] = diag[i];
    return x;
}

IMBasisElt IMBasisElt::translation(GroupId g, const std::array<i64, 4>& mu) {
    IMBasisElt x = identity(g);
    x.w.mu = mu;
    return x;
}

IMBasisElt IMBasisElt::from_monomial(GroupId g, const SmallMat& m, i64 p) {
    IMBasisElt x = identity(g);
    for (int j = 0; j < m.n; ++j) {
        int row = -1;
        for (int i = 0; i < m.n; ++i) {
            if (pmod(m.at(i, j), p) == 0) continue;
            if (row >= 0) throw Error(ErrorKind::InvalidInput, "matrix is not monomial");
            row = i;
        }
        if (row < 0) throw Error(ErrorKind::InvalidInput, "matrix is not monomial");
        x.w.perm[j] = row;
        x.unit[row] = pmod(m.at(row, j), p);
    }
    return x;
}

bool IMBasisElt::is_torus() const {
    return finite() && w.perm == std::array<int, 4>{0, 1, 2, 3};
}

bool IMBasisElt::finite() const { return w.mu == std::array<i64, 4>{}; }

bool operator<(const IMBasisElt& x, const IMBasisElt& y) {
    return std::tie(x.w.mu, x.w.perm, x.unit) < std::tie(y.w.mu, y.w.perm, y.unit);
}

IMBasisElt mul(const IMBasisElt& x, const IMBasisElt& y, i64 p) {
    IMBasisElt z;
    z.w = x.w * y.w;
    z.unit = x.unit;
    for (int i = 0; i < 4; ++i) z.unit[x.w.perm[i]] = mulmod(z.unit[x.w.perm[i]], y.unit[i], p);
    return z;
}

IMBasisElt inverse(const IMBasisElt& x, i64 p) {
    IMBasisElt z;
    z.w = inverse(x.w);
    for (int i = 0; i < 4; ++i) z.unit[z.w.perm[i]] = invmod(x.unit[i], p);
    return z;
}

int length(const IMBasisElt& x) { return affine_length(x.w); }

SmallMat to_matrix(const IMBasisElt& x, i64 p) {
    if (!x.finite()) throw Error(ErrorKind::InvalidInput, "element has a translation part");
    SmallMat m;
    m.n = msize(x.w.group);
    for (int i = 0; i < m.n; ++i) m.at(x.w.perm[i], i) = pmod(x.unit[x.w.perm[i]], p);
    return m;
}

std::string to_string(const IMBasisElt& x) {
    std::ostringstream os;
    os << to_string(x.w);
    bool trivial = true;
    for (int i = 0; i < msize(x.w.group); ++i) trivial = trivial && x.unit[i] == 1;
    if (!trivial) {
        os << "*diag(";
        for (int i = 0; i < msize(x.w.group); ++i) os << (i ? "," : "") << x.unit[i];
        os << ")";
    }
    return os.str();
}

// ---- HeckeExpr -------------------------------------------------------------------

HeckeExpr HeckeExpr::basis(const IMBasisElt& x, i64 p, i64 modulus) {
    HeckeExpr h(p, modulus);
    h.add(x, 1);
    return h;
}

HeckeExpr HeckeExpr::unavailable(i64 p) {
    HeckeExpr h(p);
    h.unavailable_ = true;
    return h;
}

i64 HeckeExpr::coeff(const IMBasisElt& x) const {
    auto it = terms_.find(x);
    return it == terms_.end() ? 0 : it->second;
}

void HeckeExpr::add(const IMBasisElt& x, i64 c) {
    i64 v = reduce(coeff(x) + reduce(c));
    if (v == 0)
        terms_.erase(x);
    else
        terms_[x] = v;
}

HeckeExpr HeckeExpr::operator+(const HeckeExpr& o) const {
    HeckeExpr r = *this;
    r.unavailable_ = unavailable_ || o.unavailable_;
    for (const auto& [x, c] : o.terms_) r.add(x, c);
    return r;
}

HeckeExpr HeckeExpr::scaled(i64 c) const {
    HeckeExpr r(p_, modulus_);
    r.unavailable_ = unavailable_;
    for (const auto& [x, v] : terms_) r.add(x, modulus_ ? mulmod(pmod(c, modulus_), v, modulus_) : c * v);
    return r;
}

std::string to_string(const HeckeExpr& h) {
    if (h.normal_form_unavailable()) return "NormalFormUnavailable";
    if (h.terms().empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [x, c] : h.terms()) {
        if (!first) os << " + ";
        first = false;
        if (c != 1) os << c << "*";
        os << "T[" << to_string(x) << "]";
    }
    return os.str();
}

// ---- products ------------------------------------------------------------------------

IMBasisElt simple_lift(const FiniteGroupContext& ctx, int i) {
    return IMBasisElt::from_monomial(ctx.group(), ctx.simple_lift(i), ctx.p());
}

namespace {

// n(t) = x_a(t) x_{-a}(-+1/t) x_a(t), with the sign that makes n(z) n(1)^{-1} diagonal.
struct RootSl2 {
    const FiniteGroupContext* ctx;
    int root;
    i64 sign;
    SmallMat n(i64 t) const {
        const i64 p = ctx->p();
        SmallMat a = ctx->root_element(root, t);
        SmallMat b = ctx->root_element(root, pmod(sign * invmod(t, p), p), true);
        return mat_mul(mat_mul(a, b, p), a, p);
    }
};

RootSl2 root_sl2(const FiniteGroupContext& ctx, int i) {
    const i64 p = ctx.p();
    for (i64 sign : {-1, 1}) {
        RootSl2 r{&ctx, ctx.datum().simple[i], sign};
        if (is_diagonal(mat_mul(r.n(2 % p == 0 ? 1 : 2), mat_inverse(r.n(1), p), p)) &&
            !is_diagonal(r.n(1)))
            return r;
    }
    throw Error(ErrorKind::Invariant, "root subgroups do not generate a coroot");
}

}  // namespace

IMBasisElt tits_lift(const FiniteGroupContext& ctx, int i) {
    return IMBasisElt::from_monomial(ctx.group(), root_sl2(ctx, i).n(1), ctx.p());
}

IMBasisElt simple_coroot(const FiniteGroupContext& ctx, int i, i64 z) {
    const i64 p = ctx.p();
    RootSl2 r = root_sl2(ctx, i);
    SmallMat h = mat_mul(r.n(pmod(z, p)), mat_inverse(r.n(1), p), p);
    std::array<i64, 4> d{1, 1, 1, 1};
    for (int k = 0; k < h.n; ++k) d[k] = h.at(k, k);
    return IMBasisElt::torus(ctx.group(), d);
}

HeckeExpr product_if_additive(const IMBasisElt& x, const IMBasisElt& y, const FiniteGroupContext& ctx,
                              i64 modulus) {
    const i64 p = ctx.p();
    IMBasisElt xy = mul(x, y, p);
    if (length(x) + length(y) == length(xy)) return HeckeExpr::basis(xy, p, modulus);
    if (!x.finite() || !y.finite()) return HeckeExpr::unavailable(p);
    const RootDatum& R = ctx.datum();
    for (int i = 0; i < static_cast<int>(R.simple.size()); ++i) {
        IMBasisElt s = tits_lift(ctx, i);
        if (x.w.perm != s.w.perm || y.w.perm != s.w.perm) continue;
        // x = t_x s, y = s t_y
        IMBasisElt tx = mul(x, inverse(s, p), p);
        IMBasisElt ty = mul(inverse(s, p), y, p);
        HeckeExpr out(p, modulus);
        out.add(mul(mul(tx, mul(s, s, p), p), ty, p), p);
        for (i64 z = 1; z < p; ++z)
            out.add(mul(mul(mul(tx, simple_coroot(ctx, i, z), p), s, p), ty, p), 1);
        return out;
    }
    return HeckeExpr::unavailable(p);
}

HeckeExpr multiply(const HeckeExpr& a, const HeckeExpr& b, const FiniteGroupContext& ctx) {
    const i64 p = ctx.p();
    i64 modulus = std::max(a.modulus(), b.modulus());
    if (a.normal_form_unavailable() || b.normal_form_unavailable()) return HeckeExpr::unavailable(p);
    HeckeExpr out(p, modulus);
    for (const auto& [x, cx] : a.terms())
        for (const auto& [y, cy] : b.terms()) {
            HeckeExpr t = product_if_additive(x, y, ctx, modulus);
            if (t.normal_form_unavailable()) return t;
            out = out + t.scaled(modulus ? mulmod(pmod(cx, modulus), pmod(cy, modulus), modulus) : cx * cy);
        }
    return out;
}

// ---- torus and idempotents ------------------------------------------------------------

std::vector<IMBasisElt> torus_elements(const FiniteGroupContext& ctx) {
    const i64 p = ctx.p();
    const int n = ctx.n();
    std::vector<IMBasisElt> out;
    std::array<i64, 4> d{1, 1, 1, 1};
    auto rec = [&](auto&& self, int k) -> void {
        if (k == n) {
            if (ctx.in_group(ctx.torus_element(d))) out.push_back(IMBasisElt::torus(ctx.group(), d));
            return;
        }
        for (i64 v = 1; v < p; ++v) {
            d[k] = v;
            self(self, k + 1);
        }
    };
    rec(rec, 0);
    return out;
}

HeckeExpr idempotent(const FiniteGroupContext& ctx, const TorusCharacter& theta, int N) {
    const i64 p = ctx.p();
    const i64 m = ipow(p, N);
    auto T = torus_elements(ctx);
    i64 inv_order = invmod(static_cast<i64>(T.size()) % m, m);
    HeckeExpr out(p, m);
    for (const auto& t : T) {
        i64 value = 1;  // theta(t)^{-1}
        for (int k = 0; k < ctx.n(); ++k) {
            i64 e = pmod(-theta.exponents[k], p - 1);
            value = mulmod(value, powmod(teichmuller(t.unit[k], p, N), e, m), m);
        }
        out.add(t, mulmod(inv_order, value, m));
    }
    return out;
}

// ---- realization on A[G/U] ---------------------------------------------------------------

ModMatrix realize(const CosetSpace& S, const IMBasisElt& x, int N) {
    if (S.quotient() != Quotient::Unipotent)
        throw Error(ErrorKind::InvalidInput, "Hecke operators act on the G/U coset space");
    const FiniteGroupContext& ctx = S.ctx();
    const RootDatum& R = ctx.datum();
    auto it = std::find_if(R.W.begin(), R.W.end(), [&](const WeylElt& w) { return w.perm == x.w.perm; });
    if (it == R.W.end()) throw Error(ErrorKind::InvalidInput, "permutation is not in the Weyl group");
    SmallMat n = to_matrix(x, ctx.p());
    if (!ctx.in_group(n)) throw Error(ErrorKind::InvalidInput, "element is not in the group");
    return intertwiner_direct(S, Weight(), *it, n, N);
}

ModMatrix realize(const CosetSpace& S, const HeckeExpr& h, int N) {
    if (h.normal_form_unavailable()) throw Error(ErrorKind::InvalidInput, "no normal form to realize");
    const i64 m = ipow(S.ctx().p(), N);
    ModMatrix out(S.size(), S.size(), static_cast<std::uint32_t>(m));
    for (const auto& [x, c] : h.terms()) {
        ModMatrix op = realize(S, x, N);
        u64 cc = static_cast<u64>(pmod(c, m));
        for (std::size_t k = 0; k < out.a.size(); ++k) out.a[k] = static_cast<std::uint32_t>((out.a[k] + cc * op.a[k]) % m);
    }
    return out;
}

// ---- theta table ----------------------------------------------------------------------------

const ThetaRow& ThetaImageTable::row(const std::string& w) const {
    const RootDatum& R = gsp4();
    std::string key = R.word_string(R.parse_word(w));
    for (const auto& r : rows)
        if (r.w == key) return r;
    throw Error(ErrorKind::InvalidInput, "no row for " + w);
}

bool ThetaImageTable::pairings_hold() const {
    std::map<int, const ThetaRow*> by_theta;
    for (const auto& r : rows) {
        auto [it, fresh] = by_theta.emplace(r.theta, &r);
        if (!fresh && (it->second->k != r.k || it->second->rbar != r.rbar)) return false;
    }
    if (by_theta.size() != 4) return false;
    for (auto [a, b] : {std::pair{0, 3}, std::pair{1, 2}}) {
        if (by_theta[a]->k + by_theta[b]->k != 3) return false;
        if (mulmod(by_theta[a]->rbar, by_theta[b]->rbar, p) != pmod(xi, p)) return false;
    }
    return true;
}

ThetaImageTable theta_table(const FLData& fl) {
    auto g = check_genericity(fl, 7);
    if (g.depth < 7) throw Error(ErrorKind::Genericity, "inertial weight is not 7-generic");
    if (!*g.weak) throw Error(ErrorKind::Genericity, "x03 = 0 or xi1 x03 - x13 = 0");
    if (!*g.strong) throw Error(ErrorKind::Genericity, "(a3-a0) xi2 x03 - (a2-a1) x02 = 0");
    const i64 p = fl.p;
    Zeta z = zeta_invariants(fl);
    ThetaImageTable t;
    t.p = p;
    t.xi = fl.xi_total();
    const RootDatum& R = gsp4();
    struct Cls {
        std::vector<std::vector<int>> words;
        int theta, k;
        i64 rbar;
    };
    const std::vector<Cls> classes = {
        {{{}, {0}}, 3, 2, z.zeta1},
        {{{1}, {0, 1}}, 2, 1, z.zeta2},
        {{{1, 0}, {0, 1, 0}}, 1, 2, mulmod(t.xi, invmod(z.zeta2, p), p)},
        {{{1, 0, 1}, {0, 1, 0, 1}}, 0, 1, mulmod(t.xi, invmod(z.zeta1, p), p)},
    };
    for (const auto& c : classes)
        for (const auto& w : c.words) t.rows.push_back({R.word_string(R.from_word(w)), c.theta, c.k, c.rbar});
    return t;
}

// ---- length-zero element --------------------------------------------------------------------

IMBasisElt hecke_lambda() { return IMBasisElt::translation(GroupId::GSp4, {0, 0, -1, -1}); }

IMBasisElt hecke_w_pi() {
    const RootDatum& R = gsp4();
    IMBasisElt x = IMBasisElt::identity(GroupId::GSp4);
    x.w = AffineWeylElt::finite(R, R.from_word({1, 0, 1}));
    return x;
}

IMBasisElt hecke_w_pi_tilde() {
    IMBasisElt x = hecke_w_pi();
    x.w = AffineWeylElt::translation(GroupId::GSp4, {0, 0, 1, 1}) * x.w;
    return x;
}

// ---- cross-module layer check ---------------------------------------------------------------

std::vector<LayerCheck> layer_consistency(const FLData& fl, int min_depth) {
    const RootDatum& R = gsp4();
    const i64 p = fl.p;
    auto tw = types_and_weights(fl);
    auto table = theta_table(fl);
    const WeylElt w_pi = R.from_word({1, 0, 1});
    const Weight key = serre_key(tw.mu_rhobar, p);
    std::vector<LayerCheck> out;
    for (const std::vector<int>& word : std::vector<std::vector<int>>{{}, {0}, {1, 0}, {0, 1, 0}}) {
        WeylElt w = R.from_word(word);
        LayerCheck c;
        c.w = R.word_string(w);
        c.w_prime = R.word_string(R.mul(w_pi, w));
        c.k = table.row(c.w_prime).k;
        // restricted representative of the character w mu0 modulo (p-1) X*(T)
        Weight l = R.act(w, tw.mu0);
        int best_depth = -1;
        for (i64 i = -3; i <= 3; ++i)
            for (i64 j = -3; j <= 3; ++j)
                for (i64 k = -3; k <= 3; ++k) {
                    if (pmod(k - i - j, 2) != 0) continue;
                    Weight m = l + (p - 1) * Weight(i, j, k);
                    if (!is_restricted(R, m, p)) continue;
                    Alcove a = alcove_of(m, p);
                    if (!is_restricted_alcove(a)) continue;
                    int d = depth_of(R, m, p);
                    if (d < min_depth) continue;
                    if (c.alcove != Alcove::NotListed && a != c.alcove)
                        throw Error(ErrorKind::Depth, "character has lifts in two restricted alcoves");
                    if (d > best_depth || (d == best_depth && m < c.lifted)) {
                        best_depth = d;
                        c.lifted = m;
                    }
                    c.alcove = a;
                }
        if (best_depth < 0) throw Error(ErrorKind::Depth, "no deep restricted lift of w mu0");
        FiltrationProfile prof = graded_pieces(c.lifted, w_pi, p, min_depth);
        for (std::size_t i = 0; i < prof.layers.size(); ++i)
            for (const auto& [sym, coeff] : prof.layers[i].terms())
                if (sym.kind == CharKind::SerreF && coeff != 0 && serre_key(sym.weight, p) == key)
                    c.layer = static_cast<int>(i);
        out.push_back(c);
    }
    return out;
}

}  // namespace modrep
