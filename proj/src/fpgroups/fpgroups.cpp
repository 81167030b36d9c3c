#include "modrep/fpgroups.hpp"

#include <algorithm>
#include <deque>

#include "modrep/kernels.hpp"

namespace modrep {

// ---- small matrices ------------------------------------------------------------

SmallMat SmallMat::identity(int n) {
    SmallMat m;
    m.n = n;
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

SmallMat mat_mul(const SmallMat& x, const SmallMat& y, i64 p) {
    SmallMat z;
    z.n = x.n;
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j) {
            i64 s = 0;
            for (int k = 0; k < x.n; ++k) s += x.at(i, k) * y.at(k, j);
            z.at(i, j) = pmod(s, p);
        }
    return z;
}

SmallMat mat_transpose(const SmallMat& x) {
    SmallMat z;
    z.n = x.n;
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j) z.at(i, j) = x.at(j, i);
    return z;
}

SmallMat mat_inverse(const SmallMat& x, i64 p) {
    int n = x.n;
    SmallMat a = x, inv = SmallMat::identity(n);
    for (int c = 0; c < n; ++c) {
        int piv = c;
        while (piv < n && pmod(a.at(piv, c), p) == 0) ++piv;
        if (piv == n) throw Error(ErrorKind::Singular, "singular matrix over F_p");
        for (int j = 0; j < n; ++j) {
            std::swap(a.at(c, j), a.at(piv, j));
            std::swap(inv.at(c, j), inv.at(piv, j));
        }
        i64 s = invmod(pmod(a.at(c, c), p), p);
        for (int j = 0; j < n; ++j) {
            a.at(c, j) = pmod(a.at(c, j) * s, p);
            inv.at(c, j) = pmod(inv.at(c, j) * s, p);
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || a.at(r, c) == 0) continue;
            i64 f = a.at(r, c);
            for (int j = 0; j < n; ++j) {
                a.at(r, j) = pmod(a.at(r, j) - f * a.at(c, j), p);
                inv.at(r, j) = pmod(inv.at(r, j) - f * inv.at(c, j), p);
            }
        }
    }
    return inv;
}

i64 mat_det(const SmallMat& x, i64 p) {
    int n = x.n;
    SmallMat a = x;
    i64 det = 1;
    for (int c = 0; c < n; ++c) {
        int piv = c;
        while (piv < n && pmod(a.at(piv, c), p) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(a.at(c, j), a.at(piv, j));
            det = -det;
        }
        det = pmod(det * a.at(c, c), p);
        i64 s = invmod(pmod(a.at(c, c), p), p);
        for (int r = c + 1; r < n; ++r) {
            i64 f = pmod(a.at(r, c) * s, p);
            for (int j = 0; j < n; ++j) a.at(r, j) = pmod(a.at(r, j) - f * a.at(c, j), p);
        }
    }
    return pmod(det, p);
}

// ---- group context ---------------------------------------------------------

namespace {

i64 primitive_root(i64 p) {
    for (i64 g = 2; g < p; ++g) {
        bool ok = true;
        i64 n = p - 1;
        for (i64 q = 2; q * q <= n && ok; ++q) {
            if (n % q) continue;
            if (powmod(g, (p - 1) / q, p) == 1) ok = false;
            while (n % q == 0) n /= q;
        }
        if (ok && n > 1 && powmod(g, (p - 1) / n, p) == 1) ok = false;
        if (ok) return g;
    }
    return 1;  // p = 2
}

SmallMat gsp4_form() {
    SmallMat J;
    J.n = 4;
    J.at(0, 3) = 1;
    J.at(1, 2) = 1;
    J.at(2, 1) = -1;
    J.at(3, 0) = -1;
    return J;
}

}  // namespace

FiniteGroupContext::FiniteGroupContext(GroupId g, i64 p) : R_(&root_datum(g)), p_(p) {
    if (!is_prime(p) || p < 3 || p > 251) throw Error(ErrorKind::InvalidInput, "p must be an odd prime < 256");
    gen_root_ = primitive_root(p);
    const int n = R_->matrix_size;
    for (int k : R_->simple) {
        gens_.push_back(root_element(k, 1, false));
        gens_.push_back(root_element(k, 1, true));
    }
    auto diag = [&](std::array<i64, 4> d) { return torus_element(d); };
    i64 gi = invmod(gen_root_, p);
    switch (g) {
        case GroupId::GSp4:
            gens_.push_back(diag({gen_root_, 1, 1, gi}));
            gens_.push_back(diag({1, gen_root_, gi, 1}));
            gens_.push_back(diag({1, 1, gen_root_, gen_root_}));
            break;
        case GroupId::SL2:
            gens_.push_back(diag({gen_root_, gi, 1, 1}));
            break;
        case GroupId::SL3:
            gens_.push_back(diag({gen_root_, gi, 1, 1}));
            gens_.push_back(diag({1, gen_root_, gi, 1}));
            break;
        case GroupId::GL3:
        case GroupId::GL4:
            for (int i = 0; i < n; ++i) {
                std::array<i64, 4> d{1, 1, 1, 1};
                d[i] = gen_root_;
                gens_.push_back(diag(d));
            }
            break;
    }
    for (const auto& x : gens_)
        if (!in_group(x)) throw Error(ErrorKind::Invariant, "generator outside the group");

    for (std::size_t i = 0; i < R_->simple.size(); ++i) {
        const auto& perm = R_->from_word({static_cast<int>(i)}).perm;
        bool found = false;
        for (int mask = 0; mask < (1 << n) && !found; ++mask) {
            SmallMat m;
            m.n = n;
            for (int c = 0; c < n; ++c) m.at(perm[c], c) = (mask >> c & 1) ? p - 1 : 1;
            if (in_group(m)) {
                simple_lifts_.push_back(m);
                found = true;
            }
        }
        if (!found) throw Error(ErrorKind::Invariant, "no signed permutation lift");
    }
}

SmallMat FiniteGroupContext::torus_element(const std::array<i64, 4>& d) const {
    SmallMat m;
    m.n = n();
    for (int i = 0; i < m.n; ++i) m.at(i, i) = pmod(d[i], p_);
    return m;
}

SmallMat FiniteGroupContext::root_element(int k, i64 t, bool negative) const {
    SmallMat m = SmallMat::identity(n());
    t = pmod(t, p_);
    if (group() == GroupId::GSp4) {
        switch (k) {
            case 0:
                m.at(0, 1) = t;
                m.at(2, 3) = pmod(-t, p_);
                break;
            case 1: m.at(1, 2) = t; break;
            case 2:
                m.at(0, 2) = t;
                m.at(1, 3) = t;
                break;
            case 3: m.at(0, 3) = t; break;
            default: throw Error(ErrorKind::InvalidInput, "bad root index");
        }
    } else {
        auto [i, j] = R_->torus_roots.at(static_cast<std::size_t>(k));
        m.at(i, j) = t;
    }
    return negative ? mat_transpose(m) : m;
}

SmallMat FiniteGroupContext::weyl_lift(const WeylElt& w) const {
    SmallMat m = SmallMat::identity(n());
    for (int g : w.word) m = mat_mul(m, simple_lifts_[g], p_);
    return m;
}

bool FiniteGroupContext::in_group(const SmallMat& g) const {
    i64 d = mat_det(g, p_);
    if (d == 0) return false;
    switch (group()) {
        case GroupId::SL2:
        case GroupId::SL3: return d == 1;
        case GroupId::GL3:
        case GroupId::GL4: return true;
        case GroupId::GSp4: {
            SmallMat J = gsp4_form();
            for (auto& x : J.a) x = pmod(x, p_);
            SmallMat lhs = mat_mul(mat_mul(mat_transpose(g), J, p_), g, p_);
            i64 nu = lhs.at(0, 3);
            if (nu == 0) return false;
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    if (lhs.at(i, j) != pmod(nu * J.at(i, j), p_)) return false;
            return true;
        }
    }
    return false;
}

bool FiniteGroupContext::in_borel(const SmallMat& g) const {
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < i; ++j)
            if (g.at(i, j) != 0) return false;
    return in_group(g);
}

std::array<i64, 4> FiniteGroupContext::torus_exponents(const Weight& l) const {
    switch (group()) {
        case GroupId::GL3:
        case GroupId::GL4: return l.v;
        case GroupId::SL2: return {l[0], 0, 0, 0};
        case GroupId::SL3: return {l[0] + l[1], l[1], 0, 0};
        case GroupId::GSp4: {
            if (pmod(l[2] - l[0] - l[1], 2) != 0) throw Error(ErrorKind::InvalidInput, "GSp4 weight parity");
            i64 k = (l[2] - l[0] - l[1]) / 2;
            return {l[0] + k, l[1], 0, k};
        }
    }
    return {};
}

std::uint32_t FiniteGroupContext::character(const Weight& l, const SmallMat& b, int N) const {
    i64 m = ipow(p_, N);
    auto e = torus_exponents(l);
    i64 v = 1;
    for (int i = 0; i < n(); ++i) {
        i64 d = b.at(i, i);
        if (d == 0) throw Error(ErrorKind::Invariant, "character of a non-invertible diagonal");
        v = mulmod(v, powmod(teichmuller(d, p_, N), pmod(e[i], p_ - 1), m), m);
    }
    return static_cast<std::uint32_t>(v);
}

// ---- cosets -----------------------------------------------------------------

std::size_t CosetSpace::KeyHash::operator()(const Key& k) const noexcept {
    u64 h = 1469598103934665603ULL;
    for (auto x : k) h = (h ^ x) * 1099511628211ULL;
    return static_cast<std::size_t>(h);
}

CosetSpace::Key CosetSpace::canonical_key(const SmallMat& h) const {
    const i64 p = ctx_->p();
    const int n = h.n;
    SmallMat a = h;
    std::array<int, 4> piv{};
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < j; ++k) {
            i64 f = a.at(piv[k], j);
            if (!f) continue;
            f = pmod(f * invmod(a.at(piv[k], k), p), p);
            for (int i = 0; i < n; ++i) a.at(i, j) = pmod(a.at(i, j) - f * a.at(i, k), p);
        }
        int r = n - 1;
        while (r >= 0 && a.at(r, j) == 0) --r;
        if (r < 0) throw Error(ErrorKind::Singular, "singular matrix in coset canonicalization");
        piv[j] = r;
        if (q_ == Quotient::Borel) {
            i64 s = invmod(a.at(r, j), p);
            for (int i = 0; i < n; ++i) a.at(i, j) = pmod(a.at(i, j) * s, p);
        }
    }
    Key key{};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) key[i * 4 + j] = static_cast<std::uint8_t>(a.at(i, j));
    return key;
}

CosetSpace::Located CosetSpace::locate(const SmallMat& h) const {
    auto it = index_.find(canonical_key(h));
    if (it == index_.end()) throw Error(ErrorKind::Invariant, "coset not enumerated");
    return {it->second, mat_mul(inv_[it->second], h, ctx_->p())};
}

CosetSpace enumerate_flags(const FiniteGroupContext& ctx, Quotient q, std::size_t budget) {
    CosetSpace S;
    S.ctx_ = &ctx;
    S.q_ = q;
    i64 expect = bruhat_count(ctx.datum(), ctx.p());
    if (q == Quotient::Unipotent) {
        i64 torus = 1;
        switch (ctx.group()) {
            case GroupId::SL2: torus = ctx.p() - 1; break;
            case GroupId::SL3: torus = (ctx.p() - 1) * (ctx.p() - 1); break;
            case GroupId::GL3:
            case GroupId::GSp4: torus = ipow(ctx.p() - 1, 3); break;
            case GroupId::GL4: torus = ipow(ctx.p() - 1, 4); break;
        }
        expect *= torus;
    }
    if (static_cast<std::size_t>(expect) > budget)
        throw Error(ErrorKind::BudgetExceeded,
                    "coset space of size " + std::to_string(expect) + " exceeds budget " + std::to_string(budget));
    SmallMat e = SmallMat::identity(ctx.n());
    S.reps_.push_back(e);
    S.inv_.push_back(e);
    S.index_[S.canonical_key(e)] = 0;
    for (std::size_t cur = 0; cur < S.reps_.size(); ++cur) {
        for (const auto& g : ctx.generators()) {
            SmallMat h = mat_mul(g, S.reps_[cur], ctx.p());
            auto key = S.canonical_key(h);
            if (S.index_.count(key)) continue;
            S.index_[key] = S.reps_.size();
            S.reps_.push_back(h);
            S.inv_.push_back(mat_inverse(h, ctx.p()));
        }
    }
    if (static_cast<i64>(S.reps_.size()) != expect)
        throw Error(ErrorKind::Invariant, "coset count " + std::to_string(S.reps_.size()) +
                                              " differs from the Bruhat count " + std::to_string(expect));
    return S;
}

i64 bruhat_count(const RootDatum& R, i64 p) {
    i64 s = 0;
    for (const auto& w : R.W) s += ipow(p, w.length());
    return s;
}

// ---- dense matrices ------------------------------------------------------------

ModMatrix ModMatrix::identity(std::size_t n, std::uint32_t m) {
    ModMatrix I(n, n, m);
    for (std::size_t i = 0; i < n; ++i) I.at(i, i) = 1 % m;
    return I;
}

ModMatrix operator*(const ModMatrix& x, const ModMatrix& y) {
    if (x.cols != y.rows || x.modulus != y.modulus) throw Error(ErrorKind::InvalidInput, "shape mismatch");
    ModMatrix z(x.rows, y.cols, x.modulus);
    auto axpy = kernels::axpy_mod();
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            std::uint32_t c = x.at(i, k);
            if (c) axpy(&z.a[i * z.cols], &y.a[k * y.cols], c, z.modulus, y.cols);
        }
    return z;
}

namespace {

struct SparseCol {
    std::vector<std::pair<std::size_t, std::uint32_t>> entries;
};

std::uint32_t modulus_of(i64 p, int N) {
    i64 m = ipow(p, N);
    if (m >= static_cast<i64>(kernels::kMaxModulus))
        throw Error(ErrorKind::InvalidInput, "p^N must stay below 2^26");
    return static_cast<std::uint32_t>(m);
}

// Columns j -> sum over u of [r_j u L^{-1}] with the character of target weight mu.
std::vector<SparseCol> coset_sum(const CosetSpace& S, const Weight& mu, const std::vector<SmallMat>& us,
                                 const SmallMat& lift_inv, int N) {
    const FiniteGroupContext& ctx = S.ctx();
    const i64 p = ctx.p();
    std::uint32_t m = modulus_of(p, N);
    std::vector<SparseCol> cols(S.size());
    for (std::size_t j = 0; j < S.size(); ++j) {
        std::map<std::size_t, std::uint32_t> acc;
        for (const auto& u : us) {
            SmallMat h = mat_mul(mat_mul(S.rep(j), u, p), lift_inv, p);
            auto loc = S.locate(h);
            std::uint32_t c = S.quotient() == Quotient::Borel ? ctx.character(mu, loc.b, N) : 1;
            acc[loc.index] = static_cast<std::uint32_t>((acc[loc.index] + static_cast<u64>(c)) % m);
        }
        for (auto [k, c] : acc)
            if (c) cols[j].entries.push_back({k, c});
    }
    return cols;
}

std::vector<SmallMat> unipotent_elements(const FiniteGroupContext& ctx, const std::vector<int>& roots) {
    std::vector<SmallMat> out{SmallMat::identity(ctx.n())};
    for (int k : roots) {
        std::vector<SmallMat> next;
        for (const auto& u : out)
            for (i64 t = 0; t < ctx.p(); ++t) next.push_back(mat_mul(u, ctx.root_element(k, t), ctx.p()));
        out = std::move(next);
    }
    return out;
}

// Returns S * T where S is sparse (columns) and T dense.
ModMatrix apply_sparse(const std::vector<SparseCol>& S, const ModMatrix& T) {
    ModMatrix out(T.rows, T.cols, T.modulus);
    auto axpy = kernels::axpy_mod();
    for (std::size_t j = 0; j < S.size(); ++j)
        for (auto [k, c] : S[j].entries) axpy(&out.a[k * out.cols], &T.a[j * T.cols], c, T.modulus, T.cols);
    return out;
}

ModMatrix sparse_to_dense(const std::vector<SparseCol>& S, std::uint32_t m) {
    ModMatrix out(S.size(), S.size(), m);
    for (std::size_t j = 0; j < S.size(); ++j)
        for (auto [k, c] : S[j].entries) out.at(k, j) = c;
    return out;
}

}  // namespace

ModMatrix action_matrix(const CosetSpace& S, const Weight& l, const SmallMat& g, int N) {
    const FiniteGroupContext& ctx = S.ctx();
    std::uint32_t m = modulus_of(ctx.p(), N);
    ModMatrix out(S.size(), S.size(), m);
    for (std::size_t j = 0; j < S.size(); ++j) {
        auto loc = S.locate(mat_mul(g, S.rep(j), ctx.p()));
        out.at(loc.index, j) = S.quotient() == Quotient::Borel ? ctx.character(l, loc.b, N) : 1;
    }
    return out;
}

ModMatrix intertwiner(const CosetSpace& S, const Weight& l, const WeylElt& w, int N) {
    const FiniteGroupContext& ctx = S.ctx();
    const RootDatum& R = ctx.datum();
    std::uint32_t m = modulus_of(ctx.p(), N);
    ModMatrix T = ModMatrix::identity(S.size(), m);
    Weight mu = l;
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
        int g = *it;
        int root = R.simple[g];
        Weight target = R.reflect(root, mu);
        auto us = unipotent_elements(ctx, {root});
        auto factor = coset_sum(S, target, us, mat_inverse(ctx.simple_lift(g), ctx.p()), N);
        T = apply_sparse(factor, T);
        mu = target;
    }
    return T;
}

ModMatrix intertwiner_direct(const CosetSpace& S, const Weight& l, const WeylElt& w, const SmallMat& lift,
                             int N) {
    const FiniteGroupContext& ctx = S.ctx();
    const RootDatum& R = ctx.datum();
    auto us = unipotent_elements(ctx, R.inversion_set(w));
    auto cols = coset_sum(S, R.act(w, l), us, mat_inverse(lift, ctx.p()), N);
    return sparse_to_dense(cols, modulus_of(ctx.p(), N));
}

// ---- Smith form over Z/p^N ---------------------------------------------------

std::map<int, int> ElementaryDivisorProfile::histogram() const {
    std::map<int, int> h;
    for (int e : exponents) ++h[e];
    return h;
}

std::vector<i64> ElementaryDivisorProfile::layer_dims(int max_layer) const {
    std::vector<i64> d(static_cast<std::size_t>(max_layer) + 1, 0);
    for (int i = 0; i <= max_layer; ++i)
        for (int e : exponents)
            if (e >= i) ++d[i];
    return d;
}

i64 ElementaryDivisorProfile::valuation_of_det() const {
    i64 s = 0;
    for (int e : exponents) s += e;
    return s;
}

namespace {
int valuation_mod(std::uint32_t x, i64 p, int N) {
    if (x == 0) return N;
    int v = 0;
    while (x % p == 0) {
        x /= static_cast<std::uint32_t>(p);
        ++v;
    }
    return v;
}

void swap_rows(ModMatrix& M, std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(M.a.begin() + a * M.cols, M.a.begin() + (a + 1) * M.cols, M.a.begin() + b * M.cols);
}
void swap_cols(ModMatrix& M, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < M.rows; ++i) std::swap(M.at(i, a), M.at(i, b));
}
}  // namespace

SmithResult smith_form(ModMatrix M, i64 p, int N, bool track) {
    if (M.rows != M.cols) throw Error(ErrorKind::InvalidInput, "Smith form needs a square matrix");
    const std::size_t n = M.rows;
    const std::uint32_t m = M.modulus;
    if (static_cast<i64>(m) != ipow(p, N)) throw Error(ErrorKind::InvalidInput, "modulus is not p^N");
    auto axpy = kernels::axpy_mod();
    SmithResult res;
    ModMatrix Qt, Qinv;
    if (track) {
        Qt = ModMatrix::identity(n, m);
        Qinv = ModMatrix::identity(n, m);
    }
    std::vector<int> expo(n, 0);
    int floor_val = 0;
    for (std::size_t k = 0; k < n; ++k) {
        int best = N;
        std::size_t br = k, bc = k;
        for (std::size_t r = k; r < n && best > floor_val; ++r)
            for (std::size_t c = k; c < n; ++c) {
                std::uint32_t x = M.at(r, c);
                if (!x) continue;
                int v = valuation_mod(x, p, N);
                if (v < best) {
                    best = v;
                    br = r;
                    bc = c;
                    if (v == floor_val) break;
                }
            }
        if (best >= N)
            throw Error(ErrorKind::ModulusTooSmall,
                        "elementary divisor exponent reaches N=" + std::to_string(N));
        floor_val = best;
        swap_rows(M, k, br);
        swap_cols(M, k, bc);
        if (track) {
            swap_rows(Qt, k, bc);
            swap_rows(Qinv, k, bc);
        }
        const i64 pe = ipow(p, best);
        const i64 mred = static_cast<i64>(m) / pe;
        const i64 uinv = invmod(static_cast<i64>(M.at(k, k)) / pe % mred, mred);
        for (std::size_t r = k + 1; r < n; ++r) {
            std::uint32_t a = M.at(r, k);
            if (!a) continue;
            i64 f = mulmod(static_cast<i64>(a) / pe, uinv, mred);
            std::uint32_t c = static_cast<std::uint32_t>(pmod(-f, m));
            axpy(&M.a[r * n + k], &M.a[k * n + k], c, m, n - k);
        }
        for (std::size_t c = k + 1; c < n; ++c) {
            std::uint32_t a = M.at(k, c);
            if (!a) continue;
            i64 g = mulmod(static_cast<i64>(a) / pe, uinv, mred);
            M.at(k, c) = 0;
            if (track) {
                axpy(&Qt.a[c * n], &Qt.a[k * n], static_cast<std::uint32_t>(pmod(-g, m)), m, n);
                axpy(&Qinv.a[k * n], &Qinv.a[c * n], static_cast<std::uint32_t>(g), m, n);
            }
        }
        expo[k] = best;
    }
    res.column_exponent = expo;
    res.profile.p = p;
    res.profile.N = N;
    res.profile.exponents = expo;
    std::sort(res.profile.exponents.begin(), res.profile.exponents.end());
    if (track) {
        res.Q = ModMatrix(n, n, m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) res.Q.at(i, j) = Qt.at(j, i);
        res.Qinv = std::move(Qinv);
    }
    return res;
}

ElementaryDivisorProfile elementary_divisors(const ModMatrix& M, i64 p, int N) {
    return smith_form(M, p, N, false).profile;
}

std::vector<i64> filtration_dims(const CosetSpace& S, const Weight& l, const WeylElt& w, int N) {
    if (N < w.length() + 1) throw Error(ErrorKind::ModulusTooSmall, "need N >= l(w)+1");
    auto prof = elementary_divisors(intertwiner(S, l, w, N), S.ctx().p(), N);
    return prof.layer_dims(N - 1);
}

i64 rank_mod_p(const ModMatrix& M0, i64 p) {
    std::vector<std::vector<i64>> a(M0.rows, std::vector<i64>(M0.cols));
    for (std::size_t i = 0; i < M0.rows; ++i)
        for (std::size_t j = 0; j < M0.cols; ++j) a[i][j] = M0.at(i, j) % p;
    i64 rank = 0;
    std::size_t row = 0;
    for (std::size_t c = 0; c < M0.cols && row < M0.rows; ++c) {
        std::size_t piv = row;
        while (piv < M0.rows && a[piv][c] == 0) ++piv;
        if (piv == M0.rows) continue;
        std::swap(a[piv], a[row]);
        i64 s = invmod(a[row][c], p);
        for (std::size_t r = row + 1; r < M0.rows; ++r) {
            if (!a[r][c]) continue;
            i64 f = a[r][c] * s % p;
            for (std::size_t j = c; j < M0.cols; ++j) a[r][j] = pmod(a[r][j] - f * a[row][j], p);
        }
        ++row;
        ++rank;
    }
    return rank;
}

NormalizedIntertwiner normalized_intertwiner(const CosetSpace& S, const Weight& l, const WeylElt& w, int i,
                                             int N) {
    const i64 p = S.ctx().p();
    if (i < 0 || i > w.length()) throw Error(ErrorKind::InvalidInput, "need 0 <= i <= l(w)");
    if (N < w.length() + 1) throw Error(ErrorKind::ModulusTooSmall, "need N >= l(w)+1");
    ModMatrix T = intertwiner(S, l, w, N);
    SmithResult sm = smith_form(T, p, N, true);
    const std::size_t n = T.rows;
    const std::uint32_t m = T.modulus;
    const i64 pi = ipow(p, i);
    const std::uint32_t mi = static_cast<std::uint32_t>(m / pi);

    ModMatrix TQ = T * sm.Q;
    // Columns of Q scaled into the sublattice, then p^{-i} T applied.
    ModMatrix scaled(n, n, m), image(n, n, mi);
    for (std::size_t j = 0; j < n; ++j) {
        i64 s = ipow(p, std::max(0, i - sm.column_exponent[j]));
        for (std::size_t r = 0; r < n; ++r) {
            scaled.at(r, j) = static_cast<std::uint32_t>(mulmod(sm.Q.at(r, j), s, m));
            u64 v = static_cast<u64>(mulmod(TQ.at(r, j), s, m));
            if (v % pi != 0) throw Error(ErrorKind::Invariant, "sublattice image not divisible by p^i");
            image.at(r, j) = static_cast<std::uint32_t>((v / pi) % mi);
        }
    }
    NormalizedIntertwiner out;
    out.i = i;
    out.column_exponent = sm.column_exponent;
    out.sublattice = scaled * sm.Qinv;
    ModMatrix qinv_i(n, n, mi);
    for (std::size_t k = 0; k < n * n; ++k) qinv_i.a[k] = sm.Qinv.a[k] % mi;
    out.matrix = image * qinv_i;

    std::vector<std::size_t> layer_cols, next_cols;
    for (std::size_t j = 0; j < n; ++j) {
        if (sm.column_exponent[j] >= i) layer_cols.push_back(j);
        if (sm.column_exponent[j] >= i + 1) next_cols.push_back(j);
    }
    ModMatrix sub(n, layer_cols.size(), static_cast<std::uint32_t>(p));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < layer_cols.size(); ++c) sub.at(r, c) = image.at(r, layer_cols[c]) % p;
    out.rank_on_layer = rank_mod_p(sub, p);
    out.kills_next_layer = true;
    for (std::size_t j : next_cols)
        for (std::size_t r = 0; r < n && out.kills_next_layer; ++r)
            if (image.at(r, j) % p != 0) out.kills_next_layer = false;
    out.Q = std::move(sm.Q);
    return out;
}

}  // namespace modrep
