#include "modrep/flkisin.hpp"

#include <algorithm>
#include <sstream>

namespace modrep {

namespace {

i64 inv(i64 a, i64 p) { return invmod(pmod(a, p), p); }

std::array<std::pair<int, int>, 6> kPairs{{{1, 0}, {2, 0}, {3, 0}, {2, 1}, {3, 1}, {3, 2}}};

FpMatrix4 fp_inverse(FpMatrix4 m, i64 p) {
    FpMatrix4 r{};
    for (int i = 0; i < 4; ++i) r[i][i] = 1;
    for (int c = 0; c < 4; ++c) {
        int piv = -1;
        for (int i = c; i < 4; ++i)
            if (pmod(m[i][c], p) != 0) { piv = i; break; }
        if (piv < 0) throw Error(ErrorKind::Singular, "matrix not invertible mod p");
        std::swap(m[c], m[piv]);
        std::swap(r[c], r[piv]);
        i64 s = inv(m[c][c], p);
        for (int j = 0; j < 4; ++j) {
            m[c][j] = mulmod(pmod(m[c][j], p), s, p);
            r[c][j] = mulmod(pmod(r[c][j], p), s, p);
        }
        for (int i = 0; i < 4; ++i) {
            if (i == c) continue;
            i64 f = pmod(m[i][c], p);
            if (!f) continue;
            for (int j = 0; j < 4; ++j) {
                m[i][j] = pmod(m[i][j] - mulmod(f, m[c][j], p), p);
                r[i][j] = pmod(r[i][j] - mulmod(f, pmod(r[c][j], p), p), p);
            }
        }
    }
    return r;
}

}  // namespace

i64 FLData::xi_total() const { return mulmod(pmod(xi[0], p), pmod(xi[3], p), p); }

std::optional<std::string> fl_violation(const FLData& fl, bool require_symplectic) {
    const i64 p = fl.p;
    if (!is_prime(p)) return "p is not prime";
    for (int i = 0; i < 4; ++i)
        if (pmod(fl.xi[i], p) == 0) return "xi" + std::to_string(i) + " is not a unit";
    if (!(fl.a[0] < fl.a[1] && fl.a[1] < fl.a[2] && fl.a[2] < fl.a[3])) return "a0 < a1 < a2 < a3 fails";
    if (fl.a[0] + fl.a[3] != fl.a[1] + fl.a[2]) return "a0 + a3 != a1 + a2";
    if (fl.xi_total() != mulmod(pmod(fl.xi[1], p), pmod(fl.xi[2], p), p)) return "xi0 xi3 != xi1 xi2";
    if (require_symplectic && !is_symplectic(fl)) return "xi1 x02 + xi2 x13 != 1";
    return std::nullopt;
}

bool is_symplectic(const FLData& fl) {
    i64 p = fl.p;
    return pmod(fl.xi[1] * pmod(fl.x02, p) + fl.xi[2] * pmod(fl.x13, p) - 1, p) == 0;
}

GenericityReport check_genericity(const FLData& fl, int delta) {
    if (auto v = fl_violation(fl)) throw Error(ErrorKind::Invariant, *v);
    const i64 p = fl.p;
    GenericityReport r;
    i64 depth = p;
    for (auto [i, j] : kPairs) {
        i64 d = fl.a[i] - fl.a[j];
        i64 margin = std::min(d, p - d) - 1;
        r.per_root_margins["a" + std::to_string(i) + "-a" + std::to_string(j)] = margin;
        depth = std::min(depth, margin);
    }
    r.depth = static_cast<int>(std::max<i64>(depth, -1));
    i64 x02 = pmod(fl.x02, p), x03 = pmod(fl.x03, p), x13 = pmod(fl.x13, p);
    bool weak = x03 != 0 && pmod(fl.xi[1] * x03 - x13, p) != 0;
    i64 extra = pmod((fl.a[3] - fl.a[0]) % p * pmod(fl.xi[2] * x03, p) - (fl.a[2] - fl.a[1]) % p * x02, p);
    r.weak = weak;
    r.strong = weak && extra != 0;
    (void)delta;
    return r;
}

bool weakly_generic(const FLData& fl, int delta) {
    auto r = check_genericity(fl, delta);
    return r.depth >= delta && *r.weak;
}

bool strongly_generic(const FLData& fl, int delta) {
    auto r = check_genericity(fl, delta);
    return r.depth >= delta && *r.strong;
}

FpMatrix4 fl_matrix(const FLData& fl) {
    i64 p = fl.p;
    FpMatrix4 m{};
    for (int i = 0; i < 4; ++i) m[i][i] = pmod(fl.xi[i], p);
    m[0][1] = m[1][2] = m[2][3] = 1;
    m[0][2] = pmod(fl.x02, p);
    m[0][3] = pmod(fl.x03, p);
    m[1][3] = pmod(fl.x13, p);
    return m;
}

FLData fl_dual_data(const FLData& fl) {
    const i64 p = fl.p;
    i64 i1 = inv(fl.xi[1], p), i2 = inv(fl.xi[2], p), ixi = inv(fl.xi_total(), p);
    FLData d = fl;
    d.x02 = mulmod(i1, pmod(1 - fl.xi[2] * pmod(fl.x13, p), p), p);
    d.x13 = mulmod(i2, pmod(1 - fl.xi[1] * pmod(fl.x02, p), p), p);
    d.x03 = pmod(fl.x03 - mulmod(i1, pmod(fl.x13, p), p) - mulmod(i2, pmod(fl.x02, p), p) + ixi, p);
    return d;
}

FpMatrix4 fl_dual(const FLData& fl) {
    if (auto v = fl_violation(fl, false)) throw Error(ErrorKind::Invariant, *v);
    return fl_matrix(fl_dual_data(fl));
}

FpMatrix4 fl_dual_by_transpose(const FLData& fl) {
    if (auto v = fl_violation(fl, false)) throw Error(ErrorKind::Invariant, *v);
    const i64 p = fl.p;
    FpMatrix4 finv = fp_inverse(fl_matrix(fl), p);
    i64 xi = fl.xi_total();
    FpMatrix4 x{};
    // xi * w0 F^{-t} w0
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) x[i][j] = mulmod(xi, finv[3 - j][3 - i], p);
    i64 r = mulmod(pmod(fl.xi[1], p), inv(fl.xi[3], p), p);
    std::array<i64, 4> d{p - 1, r, pmod(-r, p), 1};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) x[i][j] = mulmod(mulmod(d[i], x[i][j], p), inv(d[j], p), p);
    return x;
}

// ---- Laurent polynomials -------------------------------------------------------

LaurentPoly LaurentPoly::monomial(i64 p, i64 c, int deg) {
    LaurentPoly f(p);
    f.set(deg, c);
    return f;
}

i64 LaurentPoly::coeff(int deg) const {
    auto it = terms_.find(deg);
    return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::set(int deg, i64 c) {
    c = pmod(c, p_);
    if (c == 0)
        terms_.erase(deg);
    else
        terms_[deg] = c;
}

int LaurentPoly::valuation() const {
    if (terms_.empty()) throw Error(ErrorKind::InvalidInput, "valuation of zero");
    return terms_.begin()->first;
}

int LaurentPoly::degree() const {
    if (terms_.empty()) throw Error(ErrorKind::InvalidInput, "degree of zero");
    return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    if (!r.p_) r.p_ = o.p_;
    for (auto [d, c] : o.terms_) r.set(d, r.coeff(d) + c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + o.scaled(-1); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r(p_ ? p_ : o.p_);
    for (auto [d1, c1] : terms_)
        for (auto [d2, c2] : o.terms_) r.set(d1 + d2, r.coeff(d1 + d2) + mulmod(c1, c2, r.p_));
    return r;
}

LaurentPoly LaurentPoly::scaled(i64 c) const {
    LaurentPoly r(p_);
    for (auto [d, x] : terms_) r.set(d, mulmod(x, pmod(c, p_), p_));
    return r;
}

LaurentPoly LaurentPoly::truncated(int prec) const {
    LaurentPoly r(p_);
    for (auto [d, c] : terms_)
        if (d < prec) r.terms_[d] = c;
    return r;
}

std::string to_string(const LaurentPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto [d, c] : f.terms()) {
        if (!first) os << " + ";
        first = false;
        if (d == 0)
            os << c;
        else
            os << (c == 1 ? "" : std::to_string(c)) << "v" << (d == 1 ? "" : "^" + std::to_string(d));
    }
    return os.str();
}

LaurentMatrix::LaurentMatrix(i64 p) : p_(p) {
    for (auto& row : e_)
        for (auto& x : row) x = LaurentPoly(p);
}

LaurentMatrix LaurentMatrix::from_monomials(i64 p, const std::array<std::array<std::pair<i64, int>, 4>, 4>& m) {
    LaurentMatrix r(p);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.e_[i][j] = LaurentPoly::monomial(p, m[i][j].first, m[i][j].second);
    r.check_window();
    return r;
}

void LaurentMatrix::check_window() const {
    for (auto& row : e_)
        for (auto& x : row)
            if (!x.is_zero() && (x.valuation() < kLow || x.degree() > kHigh))
                throw Error(ErrorKind::WindowOverflow, "Laurent degree outside [" + std::to_string(kLow) + ", " +
                                                           std::to_string(kHigh) + "]");
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& o) const {
    LaurentMatrix r(p_);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) r.e_[i][j] = r.e_[i][j] + e_[i][k] * o.e_[k][j];
    r.check_window();
    return r;
}

LaurentMatrix LaurentMatrix::transpose() const {
    LaurentMatrix r(p_);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.e_[i][j] = e_[j][i];
    return r;
}

LaurentMatrix LaurentMatrix::scaled(const LaurentPoly& f) const {
    LaurentMatrix r(p_);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.e_[i][j] = e_[i][j] * f;
    r.check_window();
    return r;
}

namespace {

LaurentPoly minor_of(const LaurentMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    const size_t k = rows.size();
    if (k == 1) return m.at(rows[0], cols[0]);
    LaurentPoly acc(m.p());
    for (size_t j = 0; j < k; ++j) {
        std::vector<int> r(rows.begin() + 1, rows.end()), c;
        for (size_t t = 0; t < k; ++t)
            if (t != j) c.push_back(cols[t]);
        LaurentPoly term = m.at(rows[0], cols[j]) * minor_of(m, r, c);
        acc = (j % 2) ? acc - term : acc + term;
    }
    return acc;
}

std::vector<std::vector<int>> subsets(int k) {
    std::vector<std::vector<int>> out;
    for (int mask = 0; mask < 16; ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        std::vector<int> s;
        for (int i = 0; i < 4; ++i)
            if (mask >> i & 1) s.push_back(i);
        out.push_back(s);
    }
    return out;
}

}  // namespace

LaurentPoly LaurentMatrix::det() const { return minor_of(*this, {0, 1, 2, 3}, {0, 1, 2, 3}); }

std::vector<LaurentPoly> LaurentMatrix::minors(int k) const {
    std::vector<LaurentPoly> out;
    for (auto& r : subsets(k))
        for (auto& c : subsets(k)) out.push_back(minor_of(*this, r, c));
    return out;
}

std::string to_string(const LaurentMatrix& m) {
    std::ostringstream os;
    for (int i = 0; i < 4; ++i) {
        os << "[";
        for (int j = 0; j < 4; ++j) os << (j ? ", " : "") << to_string(m.at(i, j));
        os << "]\n";
    }
    return os.str();
}

LaurentMatrix symplectic_form(i64 p) {
    LaurentMatrix J(p);
    J.at(0, 3) = LaurentPoly::monomial(p, 1, 0);
    J.at(1, 2) = LaurentPoly::monomial(p, 1, 0);
    J.at(2, 1) = LaurentPoly::monomial(p, -1, 0);
    J.at(3, 0) = LaurentPoly::monomial(p, -1, 0);
    return J;
}

namespace {

LaurentMatrix kisin_matrix_impl(const FLData& fl, bool printed) {
    if (auto v = fl_violation(fl)) throw Error(ErrorKind::Invariant, *v);
    auto g = check_genericity(fl, 0);
    if (!*g.weak) throw Error(ErrorKind::Genericity, "x03 = 0 or xi1 x03 - x13 = 0");
    const i64 p = fl.p;
    auto mono = [&](i64 c, int d) { return LaurentPoly::monomial(p, c, d); };
    i64 x02 = pmod(fl.x02, p), x03 = pmod(fl.x03, p), x13 = pmod(fl.x13, p);
    i64 x0 = pmod(fl.xi[0], p), x1 = pmod(fl.xi[1], p), xi = fl.xi_total();
    i64 e = pmod(x1 * x03 - x13, p), ie = inv(e, p), i03 = inv(x03, p);
    LaurentMatrix A(p);
    A.at(0, 3) = mono(-mulmod(xi, i03, p), 2);
    A.at(1, 1) = mono(mulmod(mulmod(xi, x03, p), ie, p), 2);
    A.at(1, 3) = mono(mulmod(x0, ie, p), 2);
    i64 t = pmod(1 - mulmod(mulmod(x13, x02, p), i03, p), p);
    A.at(2, 1) = mono(-mulmod(mulmod(x1, inv(x0, p), p), t, p), 2);
    A.at(2, 2) = mono(mulmod(e, i03, p), 1);
    A.at(2, 3) = mono(-mulmod(x13, i03, p), 2);
    A.at(3, 0) = mono(x03, 1);
    // Bottom row carries xi^{-1} on the middle entries; without it A^t J A = xi v^3 J
    // only holds when xi = 1.
    i64 s = printed ? 1 : inv(xi, p);
    A.at(3, 1) = mono(-mulmod(mulmod(x1, x02, p), s, p), 2);
    A.at(3, 2) = mono(mulmod(x0, s, p), 1);
    A.at(3, 3) = mono(x0, 2);
    return A;
}

}  // namespace

LaurentMatrix kisin_matrix(const FLData& fl) { return kisin_matrix_impl(fl, false); }
LaurentMatrix kisin_matrix_printed(const FLData& fl) { return kisin_matrix_impl(fl, true); }

KisinChecks check_kisin(const LaurentMatrix& A, i64 xi) {
    const i64 p = A.p();
    KisinChecks c;
    LaurentMatrix J = symplectic_form(p);
    c.symplectic = A.transpose() * J * A == J.scaled(LaurentPoly::monomial(p, xi, 3));
    auto divisible = [](const std::vector<LaurentPoly>& v, int d) {
        return std::all_of(v.begin(), v.end(), [&](const LaurentPoly& f) { return f.is_zero() || f.valuation() >= d; });
    };
    c.minors2 = divisible(A.minors(2), 1);
    c.minors3 = divisible(A.minors(3), 3);
    LaurentPoly det = A.det();
    c.det_unit_v6 = det.terms().size() == 1 && det.valuation() == 6;
    return c;
}

// ---- Iwahori shape ---------------------------------------------------------------

namespace {

constexpr int kPrecision = 24;

// Inverse of a power series with nonzero constant term, modulo v^prec.
LaurentPoly series_inverse(const LaurentPoly& u, int prec) {
    const i64 p = u.p();
    i64 c0inv = inv(u.coeff(0), p);
    LaurentPoly r(p);
    std::vector<i64> out(prec, 0);
    for (int n = 0; n < prec; ++n) {
        i64 s = n == 0 ? 1 : 0;
        for (int k = 1; k <= n; ++k) s = pmod(s - mulmod(u.coeff(k), out[n - k], p), p);
        out[n] = mulmod(s, c0inv, p);
        r.set(n, out[n]);
    }
    return r;
}

// a / b for val(a) >= val(b), as a truncated power series.
LaurentPoly series_div(const LaurentPoly& a, const LaurentPoly& b, int prec) {
    int k = b.valuation();
    LaurentPoly unit(b.p());
    for (auto [d, c] : b.terms()) unit.set(d - k, c);
    LaurentPoly shifted(a.p());
    for (auto [d, c] : a.terms()) shifted.set(d - k, c);
    return (shifted * series_inverse(unit, prec)).truncated(prec);
}

}  // namespace

Shape shape_of(const LaurentMatrix& input) {
    LaurentMatrix M = input;
    std::array<bool, 4> row_live{true, true, true, true}, col_live{true, true, true, true};
    Shape s;
    s.group = GroupId::GL4;
    for (int step = 0; step < 4; ++step) {
        int best = 1 << 30, r = -1, c = -1;
        for (int i = 0; i < 4; ++i) {
            if (!row_live[i]) continue;
            for (int j = 0; j < 4; ++j) {
                if (!col_live[j] || M.at(i, j).is_zero()) continue;
                int v = M.at(i, j).valuation();
                // bottom-most row first, leftmost column second
                if (v < best || (v == best && (i > r || (i == r && j < c)))) {
                    best = v;
                    r = i;
                    c = j;
                }
            }
        }
        if (r < 0) throw Error(ErrorKind::Singular, "matrix is singular modulo the working precision");
        if (best >= kPrecision / 2) throw Error(ErrorKind::WindowOverflow, "pivot valuation near precision bound");
        const LaurentPoly piv = M.at(r, c);
        for (int i = 0; i < 4; ++i) {
            if (i == r || !row_live[i] || M.at(i, c).is_zero()) continue;
            LaurentPoly f = series_div(M.at(i, c), piv, kPrecision);
            for (int j = 0; j < 4; ++j) M.at(i, j) = (M.at(i, j) - f * M.at(r, j)).truncated(kPrecision + best);
        }
        for (int j = 0; j < 4; ++j) {
            if (j == c || !col_live[j] || M.at(r, j).is_zero()) continue;
            LaurentPoly g = series_div(M.at(r, j), piv, kPrecision);
            for (int i = 0; i < 4; ++i) M.at(i, j) = (M.at(i, j) - g * M.at(i, c)).truncated(kPrecision + best);
        }
        s.perm[c] = r;
        s.mu[r] = best;
        row_live[r] = false;
        col_live[c] = false;
    }
    return s;
}

Shape expected_fl_shape() {
    Shape s;
    s.group = GroupId::GL4;
    s.perm = {3, 1, 2, 0};
    s.mu = {2, 2, 1, 1};
    return s;
}

Shape symplectic_dual_shape(const Shape& x) {
    // (v^mu P)^{-t} = v^{-mu} P for a permutation matrix P.
    Shape w0;
    w0.group = x.group;
    w0.perm = {3, 2, 1, 0};
    Shape minus_t = x;
    for (auto& m : minus_t.mu) m = -m;
    Shape r = w0 * minus_t * w0;
    for (auto& m : r.mu) m += 3;
    return r;
}

// ---- zeta invariants ----------------------------------------------------------------

Zeta zeta_invariants(const FLData& fl, int delta) {
    if (auto v = fl_violation(fl)) throw Error(ErrorKind::Invariant, *v);
    auto g = check_genericity(fl, delta);
    if (g.depth < delta) throw Error(ErrorKind::Genericity, "inertial weight is not " + std::to_string(delta) + "-generic");
    if (!*g.weak) throw Error(ErrorKind::Genericity, "x03 = 0 or xi1 x03 - x13 = 0");
    if (!*g.strong) throw Error(ErrorKind::Genericity, "(a3-a0) xi2 x03 - (a2-a1) x02 = 0");
    const i64 p = fl.p;
    i64 d30 = pmod(fl.a[3] - fl.a[0], p), d21 = pmod(fl.a[2] - fl.a[1], p);
    i64 denom = mulmod(fl.xi_total(), pmod(d30 + 2, p), p);
    if (denom == 0) throw Error(ErrorKind::Division, "a3 - a0 + 2 = 0 mod p");
    i64 x0 = pmod(fl.xi[0], p), x03 = pmod(fl.x03, p);
    i64 q = mulmod(mulmod(x0, pmod(fl.x02, p), p), inv(mulmod(pmod(fl.xi[2], p), x03, p), p), p);
    i64 num = pmod(mulmod(d30, x0, p) - mulmod(d21, q, p), p);
    Zeta z;
    z.zeta1 = mulmod(num, inv(denom, p), p);
    z.zeta2 = pmod(fl.xi[1] - mulmod(pmod(fl.x13, p), inv(x03, p), p), p);
    return z;
}

FLData recover_fl(const FLDiagonal& d, i64 zeta1, i64 zeta2) {
    const i64 p = d.p;
    FLData fl;
    fl.p = p;
    fl.a = d.a;
    fl.xi = d.xi;
    if (auto v = fl_violation(fl, false)) throw Error(ErrorKind::Invariant, *v);
    zeta1 = pmod(zeta1, p);
    zeta2 = pmod(zeta2, p);
    if (zeta1 == 0 || zeta2 == 0) throw Error(ErrorKind::NoSolution, "zeta invariants must be units");
    i64 d30 = pmod(d.a[3] - d.a[0], p), d21 = pmod(d.a[2] - d.a[1], p);
    if (d21 == 0 || pmod(d30 + 2, p) == 0) throw Error(ErrorKind::NoSolution, "weights degenerate mod p");
    i64 x0 = pmod(d.xi[0], p), x1 = pmod(d.xi[1], p), x2 = pmod(d.xi[2], p), xi = fl.xi_total();
    i64 r = pmod(x1 - zeta2, p);  // x13 / x03
    // K = x02 / x03
    i64 inner = pmod(mulmod(d30, x0, p) - mulmod(mulmod(zeta1, xi, p), pmod(d30 + 2, p), p), p);
    i64 K = mulmod(mulmod(x2, inner, p), inv(mulmod(d21, x0, p), p), p);
    i64 s = pmod(mulmod(x1, K, p) + mulmod(x2, r, p), p);
    if (s == 0) throw Error(ErrorKind::NoSolution, "zeta invariants lie on the excluded locus");
    fl.x03 = inv(s, p);
    fl.x02 = mulmod(K, fl.x03, p);
    fl.x13 = mulmod(r, fl.x03, p);
    return fl;
}

TypesAndWeights types_and_weights(const FLData& fl) {
    if (auto v = fl_violation(fl)) throw Error(ErrorKind::Invariant, *v);
    auto g = check_genericity(fl, 2);
    if (g.depth < 2) throw Error(ErrorKind::Genericity, "inertial weight is not 2-generic");
    TypesAndWeights t;
    i64 c = fl.a[0] + fl.a[3] - 3;
    t.mu0 = Weight(fl.a[2] - fl.a[0], fl.a[1] - fl.a[0] + 1, c);
    t.mu_rhobar = Weight(fl.a[2] - fl.a[0] - 2, fl.a[1] - fl.a[0] - 1, c);
    const RootDatum& R = gsp4();
    if (!is_restricted(R, t.mu_rhobar, fl.p) || alcove_of(t.mu_rhobar, fl.p) != Alcove::C0)
        throw Error(ErrorKind::Invariant, "mu_rhobar is not a restricted weight in the lowest alcove");
    return t;
}

FLData random_strongly_generic(i64 p, int delta, std::mt19937_64& rng) {
    auto unit = [&] { return std::uniform_int_distribution<i64>(1, p - 1)(rng); };
    auto any = [&] { return std::uniform_int_distribution<i64>(0, p - 1)(rng); };
    // a = (a0, a0+g, a0+g+h, a0+2g+h) with all gaps inside (delta, p - delta)
    i64 lo = delta + 1, hi = p - delta - 1;
    if (2 * lo + lo > hi) throw Error(ErrorKind::InvalidInput, "p too small for the requested genericity");
    for (int attempt = 0; attempt < 100000; ++attempt) {
        FLData fl;
        fl.p = p;
        i64 gg = std::uniform_int_distribution<i64>(lo, (hi - lo) / 2)(rng);
        i64 hh = std::uniform_int_distribution<i64>(lo, hi - 2 * gg)(rng);
        i64 a0 = std::uniform_int_distribution<i64>(0, p - 1)(rng);
        fl.a = {a0, a0 + gg, a0 + gg + hh, a0 + 2 * gg + hh};
        fl.xi = {unit(), unit(), unit(), 0};
        fl.xi[3] = mulmod(mulmod(fl.xi[1], fl.xi[2], p), inv(fl.xi[0], p), p);
        fl.x13 = any();
        fl.x02 = mulmod(pmod(1 - mulmod(fl.xi[2], fl.x13, p), p), inv(fl.xi[1], p), p);
        fl.x03 = unit();
        if (strongly_generic(fl, delta)) return fl;
    }
    throw Error(ErrorKind::BudgetExceeded, "no strongly generic sample found");
}

}  // namespace modrep
