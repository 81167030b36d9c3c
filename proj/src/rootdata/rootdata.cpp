#include "modrep/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

namespace modrep {

const char* group_name(GroupId g) {
    switch (g) {
        case GroupId::GSp4: return "GSp4";
        case GroupId::SL2: return "SL2";
        case GroupId::SL3: return "SL3";
        case GroupId::GL3: return "GL3";
        case GroupId::GL4: return "GL4";
    }
    return "?";
}

GroupId parse_group(const std::string& s) {
    for (GroupId g : {GroupId::GSp4, GroupId::SL2, GroupId::SL3, GroupId::GL3, GroupId::GL4}) {
        if (s == group_name(g)) return g;
    }
    throw Error(ErrorKind::InvalidInput, "unknown group '" + s + "'");
}

namespace {

IntMat identity_mat() {
    IntMat m{};
    for (int i = 0; i < 4; ++i) m[i][i] = 1;
    return m;
}

IntMat matmul(const IntMat& a, const IntMat& b) {
    IntMat c{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k)
            if (a[i][k])
                for (int j = 0; j < 4; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

Weight matvec(const IntMat& m, const Weight& l) {
    Weight r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i] += m[i][j] * l[j];
    return r;
}

struct Blueprint {
    int dim;
    int n;
    std::vector<Weight> roots, coroots;
    std::vector<std::string> names;
    std::vector<int> simple;
    std::vector<Weight> fundamental;
    Weight rho;
    std::vector<std::pair<int, int>> torus_roots;
    std::vector<std::array<int, 4>> simple_perm;
};

Blueprint blueprint_for(GroupId g) {
    Blueprint s;
    switch (g) {
        case GroupId::GSp4:
            s.dim = 3;
            s.n = 4;
            s.roots = {Weight(1, -1, 0), Weight(0, 2, 0), Weight(1, 1, 0), Weight(2, 0, 0)};
            s.coroots = {Weight(1, -1, 0), Weight(0, 1, 0), Weight(1, 1, 0), Weight(1, 0, 0)};
            s.names = {"a0", "a1", "a0+a1", "2a0+a1"};
            s.simple = {0, 1};
            s.fundamental = {Weight(1, 0, 1), Weight(1, 1, 0)};
            s.rho = Weight(2, 1, 1);
            s.torus_roots = {{0, 1}, {1, 2}, {0, 2}, {0, 3}};
            s.simple_perm = {{1, 0, 3, 2}, {0, 2, 1, 3}};
            break;
        case GroupId::SL2:
            s.dim = 1;
            s.n = 2;
            s.roots = {Weight(2)};
            s.coroots = {Weight(1)};
            s.names = {"a"};
            s.simple = {0};
            s.fundamental = {Weight(1)};
            s.rho = Weight(1);
            s.torus_roots = {{0, 1}};
            s.simple_perm = {{1, 0, 2, 3}};
            break;
        case GroupId::SL3:
            s.dim = 2;
            s.n = 3;
            s.roots = {Weight(2, -1), Weight(-1, 2), Weight(1, 1)};
            s.coroots = {Weight(1, 0), Weight(0, 1), Weight(1, 1)};
            s.names = {"a1", "a2", "a1+a2"};
            s.simple = {0, 1};
            s.fundamental = {Weight(1, 0), Weight(0, 1)};
            s.rho = Weight(1, 1);
            s.torus_roots = {{0, 1}, {1, 2}, {0, 2}};
            s.simple_perm = {{1, 0, 2, 3}, {0, 2, 1, 3}};
            break;
        case GroupId::GL3:
            s.dim = 3;
            s.n = 3;
            s.roots = {Weight(1, -1, 0), Weight(0, 1, -1), Weight(1, 0, -1)};
            s.coroots = s.roots;
            s.names = {"e1-e2", "e2-e3", "e1-e3"};
            s.simple = {0, 1};
            s.fundamental = {Weight(1, 0, 0), Weight(1, 1, 0)};
            s.rho = Weight(2, 1, 0);
            s.torus_roots = {{0, 1}, {1, 2}, {0, 2}};
            s.simple_perm = {{1, 0, 2, 3}, {0, 2, 1, 3}};
            break;
        case GroupId::GL4:
            s.dim = 4;
            s.n = 4;
            s.roots = {Weight(1, -1, 0, 0), Weight(0, 1, -1, 0), Weight(0, 0, 1, -1),
                       Weight(1, 0, -1, 0), Weight(0, 1, 0, -1), Weight(1, 0, 0, -1)};
            s.coroots = s.roots;
            s.names = {"e1-e2", "e2-e3", "e3-e4", "e1-e3", "e2-e4", "e1-e4"};
            s.simple = {0, 1, 2};
            s.fundamental = {Weight(1, 0, 0, 0), Weight(1, 1, 0, 0), Weight(1, 1, 1, 0)};
            s.rho = Weight(3, 2, 1, 0);
            s.torus_roots = {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {1, 3}, {0, 3}};
            s.simple_perm = {{1, 0, 2, 3}, {0, 2, 1, 3}, {0, 1, 3, 2}};
            break;
    }
    return s;
}

}  // namespace

RootDatum build_root_datum(GroupId g) {
    Blueprint s = blueprint_for(g);
    RootDatum R;
    R.id = g;
    R.dim = s.dim;
    R.matrix_size = s.n;
    R.roots = s.roots;
    R.coroots = s.coroots;
    R.root_names = s.names;
    R.simple = s.simple;
    R.fundamental = s.fundamental;
    R.rho_prime = s.rho;
    R.torus_roots = s.torus_roots;

    std::vector<IntMat> gens;
    for (int k : s.simple) {
        IntMat m = identity_mat();
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m[i][j] -= s.roots[k][i] * s.coroots[k][j];
        gens.push_back(m);
    }

    WeylElt e;
    e.index = 0;
    e.mat = identity_mat();
    e.perm = {0, 1, 2, 3};
    R.W.push_back(e);
    R.by_matrix_[e.mat] = 0;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            WeylElt next;
            next.mat = matmul(R.W[cur].mat, gens[gi]);
            if (R.by_matrix_.count(next.mat)) continue;
            next.word = R.W[cur].word;
            next.word.push_back(static_cast<int>(gi));
            for (int i = 0; i < 4; ++i) next.perm[i] = R.W[cur].perm[s.simple_perm[gi][i]];
            next.index = static_cast<int>(R.W.size());
            R.by_matrix_[next.mat] = next.index;
            R.W.push_back(next);
            queue.push_back(next.index);
        }
    }
    return R;
}

const RootDatum& root_datum(GroupId g) {
    static const RootDatum data[] = {
        build_root_datum(GroupId::GSp4), build_root_datum(GroupId::SL2),
        build_root_datum(GroupId::SL3), build_root_datum(GroupId::GL3),
        build_root_datum(GroupId::GL4)};
    return data[static_cast<int>(g)];
}

i64 RootDatum::pair(const Weight& l, int k) const {
    i64 s = 0;
    for (int i = 0; i < 4; ++i) s += l[i] * coroots[k][i];
    return s;
}

Weight RootDatum::reflect(int k, const Weight& l) const { return l - pair(l, k) * roots[k]; }

Weight RootDatum::act(const WeylElt& w, const Weight& l) const { return matvec(w.mat, l); }

Weight RootDatum::dot(const WeylElt& w, const Weight& l) const {
    return act(w, l + rho_prime) - rho_prime;
}

bool RootDatum::valid(const Weight& l) const {
    for (int i = dim; i < 4; ++i)
        if (l[i] != 0) return false;
    if (id == GroupId::GSp4) return pmod(l[2] - l[0] - l[1], 2) == 0;
    return true;
}

const WeylElt& RootDatum::longest() const {
    const WeylElt* best = &W.front();
    for (const auto& w : W)
        if (w.length() > best->length()) best = &w;
    return *best;
}

const WeylElt& RootDatum::from_matrix(const IntMat& m) const {
    auto it = by_matrix_.find(m);
    if (it == by_matrix_.end()) throw Error(ErrorKind::Invariant, "matrix not in Weyl group");
    return W[it->second];
}

const WeylElt& RootDatum::from_word(const std::vector<int>& word) const {
    IntMat m = identity_mat();
    for (int g : word) {
        if (g < 0 || g >= static_cast<int>(simple.size()))
            throw Error(ErrorKind::InvalidInput, "bad generator index in word");
        m = matmul(m, reflection(simple[g]).mat);
    }
    return from_matrix(m);
}

const WeylElt& RootDatum::mul(const WeylElt& a, const WeylElt& b) const {
    return from_matrix(matmul(a.mat, b.mat));
}

const WeylElt& RootDatum::inverse(const WeylElt& a) const {
    for (const auto& w : W)
        if (matmul(a.mat, w.mat) == identity_mat()) return w;
    throw Error(ErrorKind::Invariant, "no inverse");
}

const WeylElt& RootDatum::reflection(int k) const {
    IntMat m = identity_mat();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] -= roots[k][i] * coroots[k][j];
    return from_matrix(m);
}

std::optional<int> RootDatum::root_index(const Weight& beta) const {
    for (std::size_t k = 0; k < roots.size(); ++k)
        if (roots[k] == beta || roots[k] == -beta) return static_cast<int>(k);
    return std::nullopt;
}

int RootDatum::root_sign(const Weight& beta) const {
    for (const auto& r : roots) {
        if (r == beta) return 1;
        if (r == -beta) return -1;
    }
    return 0;
}

std::vector<int> RootDatum::inversion_set(const WeylElt& w) const {
    std::vector<int> out;
    for (std::size_t k = 0; k < roots.size(); ++k)
        if (root_sign(act(w, roots[k])) < 0) out.push_back(static_cast<int>(k));
    return out;
}

bool RootDatum::dominant(const Weight& l) const {
    for (int k : simple)
        if (pair(l, k) < 0) return false;
    return true;
}

std::string RootDatum::format(const Weight& l) const {
    std::ostringstream os;
    if (id == GroupId::GSp4) {
        os << "(" << l[0] << "," << l[1] << ";" << l[2] << ")";
        return os.str();
    }
    return to_string(l, dim);
}

std::string RootDatum::word_string(const WeylElt& w) const {
    if (w.word.empty()) return "id";
    std::ostringstream os;
    int base = (id == GroupId::GSp4) ? 0 : 1;
    for (int g : w.word) os << "s" << (g + base);
    return os.str();
}

const WeylElt& RootDatum::parse_word(const std::string& s) const {
    if (s == "id" || s == "1" || s.empty()) return identity();
    int base = (id == GroupId::GSp4) ? 0 : 1;
    std::vector<int> word;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] != 's' || i + 1 >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i + 1])))
            throw Error(ErrorKind::InvalidInput, "cannot parse Weyl word '" + s + "'");
        word.push_back(s[i + 1] - '0' - base);
        i += 2;
    }
    return from_word(word);
}

// ---- alcoves ---------------------------------------------------------------

namespace {
constexpr std::array<int, 4> kColumnRoot = {0, 1, 3, 2};
}

const char* alcove_name(Alcove a) {
    switch (a) {
        case Alcove::C0: return "C0";
        case Alcove::C1: return "C1";
        case Alcove::C2: return "C2";
        case Alcove::C3: return "C3";
        case Alcove::D0: return "D0";
        case Alcove::D1: return "D1";
        case Alcove::E0: return "E0";
        case Alcove::E1: return "E1";
        case Alcove::E2: return "E2";
        case Alcove::E3: return "E3";
        case Alcove::NotListed: return "NotListed";
    }
    return "?";
}

Alcove parse_alcove(const std::string& s) {
    for (Alcove a : kListedAlcoves)
        if (s == alcove_name(a)) return a;
    throw Error(ErrorKind::InvalidInput, "unknown alcove '" + s + "'");
}

bool is_restricted_alcove(Alcove a) {
    return a == Alcove::C0 || a == Alcove::C1 || a == Alcove::C2 || a == Alcove::C3;
}

std::array<int, 4> alcove_intervals(Alcove a) {
    switch (a) {
        case Alcove::C0: return {0, 0, 0, 0};
        case Alcove::C1: return {0, 0, 0, 1};
        case Alcove::C2: return {0, 0, 1, 1};
        case Alcove::C3: return {0, 0, 1, 2};
        case Alcove::D0: return {0, 1, 1, 2};
        case Alcove::D1: return {0, 1, 1, 3};
        case Alcove::E0: return {1, 0, 1, 1};
        case Alcove::E1: return {1, 0, 1, 2};
        case Alcove::E2: return {1, 0, 2, 2};
        case Alcove::E3: return {2, 0, 2, 2};
        case Alcove::NotListed: break;
    }
    throw Error(ErrorKind::InvalidInput, "NotListed has no intervals");
}

std::array<i64, 4> alcove_pairings(const Weight& l) {
    const RootDatum& R = gsp4();
    Weight x = l + R.rho_prime;
    std::array<i64, 4> out{};
    for (int c = 0; c < 4; ++c) out[c] = R.pair(x, kColumnRoot[c]);
    return out;
}

Weight dot_action(const WeylElt& w, const Weight& l, const Weight& rho_prime) {
    return matvec(w.mat, l + rho_prime) - rho_prime;
}

Alcove alcove_of(const Weight& l, i64 p) {
    auto pr = alcove_pairings(l);
    for (Alcove a : kListedAlcoves) {
        auto iv = alcove_intervals(a);
        bool ok = true;
        for (int c = 0; c < 4 && ok; ++c) ok = iv[c] * p < pr[c] && pr[c] < (iv[c] + 1) * p;
        if (ok) return a;
    }
    return Alcove::NotListed;
}

int depth_of(const RootDatum& R, const Weight& l, i64 p) {
    Weight x = l + R.rho_prime;
    i64 best = p;
    for (std::size_t k = 0; k < R.roots.size(); ++k) {
        i64 r = pmod(R.pair(x, static_cast<int>(k)), p);
        if (r == 0) return -1;
        best = std::min(best, std::min(r, p - r));
    }
    return static_cast<int>(best - 1);
}

GenericityReport weight_genericity(const RootDatum& R, const Weight& l, i64 p) {
    GenericityReport rep;
    rep.depth = depth_of(R, l, p);
    Weight x = l + R.rho_prime;
    for (std::size_t k = 0; k < R.roots.size(); ++k) {
        i64 r = pmod(R.pair(x, static_cast<int>(k)), p);
        rep.per_root_margins[R.root_names[k]] = std::min(r, p - r);
    }
    return rep;
}

std::optional<Weight> find_deep_witness(Alcove a, int delta, i64 p) {
    // Every listed alcove has <lambda+rho', (2a0+a1)^vee> < 3p, so x < 4p covers it.
    for (i64 x = 0; x < 4 * p; ++x)
        for (i64 y = 0; y <= x; ++y) {
            Weight l(x, y, (x + y) % 2);
            if (alcove_of(l, p) == a && depth_of(l, p) >= delta) return l;
        }
    return std::nullopt;
}

Weight linked_weight(const Weight& l, Alcove target, i64 p) {
    const RootDatum& R = gsp4();
    std::optional<Weight> found;
    for (const auto& w : R.W) {
        Weight base = R.dot(w, l);
        for (i64 i = -8; i <= 8; ++i)
            for (i64 j = -8; j <= 8; ++j) {
                Weight m = base + p * (i * R.roots[0] + j * R.roots[1]);
                if (alcove_of(m, p) != target) continue;
                if (found && *found != m)
                    throw Error(ErrorKind::Depth, "linked weight not unique");
                found = m;
            }
    }
    if (!found) throw Error(ErrorKind::Depth, std::string("no linked weight in ") + alcove_name(target));
    return *found;
}

bool is_restricted(const RootDatum& R, const Weight& l, i64 p) {
    for (int k : R.simple) {
        i64 v = R.pair(l, k);
        if (v < 0 || v > p - 1) return false;
    }
    return true;
}

// ---- extended affine Weyl group -------------------------------------------

AffineWeylElt AffineWeylElt::translation(GroupId g, std::array<i64, 4> mu) {
    AffineWeylElt x;
    x.group = g;
    x.mu = mu;
    return x;
}

AffineWeylElt AffineWeylElt::finite(const RootDatum& R, const WeylElt& w) {
    AffineWeylElt x;
    x.group = R.id;
    x.perm = w.perm;
    return x;
}

AffineWeylElt operator*(const AffineWeylElt& x, const AffineWeylElt& y) {
    AffineWeylElt z;
    z.group = x.group;
    z.mu = x.mu;
    for (int i = 0; i < 4; ++i) z.mu[x.perm[i]] += y.mu[i];
    for (int i = 0; i < 4; ++i) z.perm[i] = x.perm[y.perm[i]];
    return z;
}

AffineWeylElt inverse(const AffineWeylElt& x) {
    // (t_mu w)^{-1} = w^{-1} t_{-mu} = t_{-w^{-1} mu} w^{-1}
    AffineWeylElt z;
    z.group = x.group;
    for (int i = 0; i < 4; ++i) z.perm[x.perm[i]] = i;
    for (int i = 0; i < 4; ++i) z.mu[z.perm[i]] = -x.mu[i];
    return z;
}

int affine_length(const AffineWeylElt& x) {
    const RootDatum& R = root_datum(x.group);
    std::array<int, 4> inv{};
    for (int i = 0; i < 4; ++i) inv[x.perm[i]] = i;
    i64 len = 0;
    for (auto [i, j] : R.torus_roots) {
        i64 m = x.mu[i] - x.mu[j];
        bool stays_positive = inv[i] < inv[j];
        len += stays_positive ? std::abs(m) : std::abs(m + 1);
    }
    return static_cast<int>(len);
}

bool lengths_add(const AffineWeylElt& x, const AffineWeylElt& y) {
    return affine_length(x) + affine_length(y) == affine_length(x * y);
}

std::string to_string(const AffineWeylElt& x) {
    const RootDatum& R = root_datum(x.group);
    std::ostringstream os;
    os << "t(";
    for (int i = 0; i < R.matrix_size; ++i) os << (i ? "," : "") << x.mu[i];
    os << ")*[";
    for (int i = 0; i < R.matrix_size; ++i) os << (i ? "," : "") << x.perm[i];
    os << "]";
    return os.str();
}

}  // namespace modrep
