#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "modrep/common.hpp"

namespace modrep {

enum class GroupId { GSp4, SL2, SL3, GL3, GL4 };

const char* group_name(GroupId g);
GroupId parse_group(const std::string& s);  // throws InvalidInput

using IntMat = std::array<std::array<i64, 4>, 4>;

// Element of the finite Weyl group. The matrix is the canonical form; the word
// is a reduced word found by breadth-first search (shortlex over generators).
struct WeylElt {
    int index = 0;
    std::vector<int> word;
    IntMat mat{};                 // action on character coordinates
    std::array<int, 4> perm{};    // e_i -> e_perm[i] in the standard matrix torus
    int length() const { return static_cast<int>(word.size()); }
    int sign() const { return (word.size() % 2) ? -1 : 1; }
};

class RootDatum {
public:
    GroupId id;
    int dim = 0;         // number of character coordinates
    int matrix_size = 0; // n for the natural n x n matrix realization
    std::vector<Weight> roots;     // positive roots
    std::vector<Weight> coroots;   // <lambda, alpha^vee> = sum_i lambda_i * coroots[k][i]
    std::vector<std::string> root_names;
    std::vector<int> simple;       // indices into roots
    std::vector<Weight> fundamental;  // one per simple root
    Weight rho_prime;
    // Positive roots as e_i - e_j in the standard matrix torus (i < j).
    std::vector<std::pair<int, int>> torus_roots;
    std::vector<WeylElt> W;

    i64 pair(const Weight& l, int k) const;
    Weight reflect(int k, const Weight& l) const;
    Weight act(const WeylElt& w, const Weight& l) const;
    Weight dot(const WeylElt& w, const Weight& l) const;
    bool valid(const Weight& l) const;

    const WeylElt& identity() const { return W.front(); }
    const WeylElt& longest() const;
    const WeylElt& from_word(const std::vector<int>& word) const;
    const WeylElt& mul(const WeylElt& a, const WeylElt& b) const;
    const WeylElt& inverse(const WeylElt& a) const;
    const WeylElt& reflection(int k) const;  // s_alpha for positive root k
    const WeylElt& from_matrix(const IntMat& m) const;

    // R_w^+ = {alpha > 0 : w(alpha) < 0}, as root indices.
    std::vector<int> inversion_set(const WeylElt& w) const;
    // +1 if positive root, -1 if negative root, 0 if not a root.
    int root_sign(const Weight& beta) const;
    std::optional<int> root_index(const Weight& beta) const;  // index of +-beta

    bool dominant(const Weight& l) const;
    std::string format(const Weight& l) const;
    std::string word_string(const WeylElt& w) const;
    const WeylElt& parse_word(const std::string& s) const;  // "s1s0s1", "id", "1"

private:
    friend RootDatum build_root_datum(GroupId g);
    std::map<IntMat, int> by_matrix_;
};

const RootDatum& root_datum(GroupId g);
inline const RootDatum& gsp4() { return root_datum(GroupId::GSp4); }

// ---- GSp4 alcove geometry -------------------------------------------------

enum class Alcove { C0, C1, C2, C3, D0, D1, E0, E1, E2, E3, NotListed };
constexpr std::array<Alcove, 10> kListedAlcoves = {
    Alcove::C0, Alcove::C1, Alcove::C2, Alcove::C3, Alcove::D0,
    Alcove::D1, Alcove::E0, Alcove::E1, Alcove::E2, Alcove::E3};
constexpr std::array<Alcove, 4> kRestrictedAlcoves = {Alcove::C0, Alcove::C1, Alcove::C2,
                                                     Alcove::C3};

const char* alcove_name(Alcove a);
Alcove parse_alcove(const std::string& s);
bool is_restricted_alcove(Alcove a);

// Interval multipliers n such that <lambda+rho', alpha^vee> in (n p, (n+1) p), in
// the column order alpha0, alpha1, 2alpha0+alpha1, alpha0+alpha1.
std::array<int, 4> alcove_intervals(Alcove a);
// Pairings of lambda+rho' in the same column order.
std::array<i64, 4> alcove_pairings(const Weight& l);

Weight dot_action(const WeylElt& w, const Weight& l, const Weight& rho_prime);
Alcove alcove_of(const Weight& l, i64 p);
int depth_of(const RootDatum& R, const Weight& l, i64 p);
inline int depth_of(const Weight& l, i64 p) { return depth_of(gsp4(), l, p); }

struct GenericityReport {
    int depth = -1;
    std::map<std::string, i64> per_root_margins;
    std::optional<bool> weak;
    std::optional<bool> strong;
};
GenericityReport weight_genericity(const RootDatum& R, const Weight& l, i64 p);

// Lexicographic search (x ascending, then y ascending in [0, x]) with z = (x+y) mod 2.
std::optional<Weight> find_deep_witness(Alcove a, int delta, i64 p);

// The dominant weight in alcove `target` that is dot-linked to l under the affine
// Weyl group W_p; throws Depth if it does not exist or is not unique.
Weight linked_weight(const Weight& l, Alcove target, i64 p);

// p-restricted: 0 <= <l, alpha^vee> <= p-1 for simple alpha.
bool is_restricted(const RootDatum& R, const Weight& l, i64 p);

// ---- extended affine Weyl group -------------------------------------------

// t_mu * w with mu a cocharacter in standard torus coordinates.
struct AffineWeylElt {
    GroupId group = GroupId::GSp4;
    std::array<i64, 4> mu{};
    std::array<int, 4> perm{0, 1, 2, 3};

    static AffineWeylElt translation(GroupId g, std::array<i64, 4> mu);
    static AffineWeylElt finite(const RootDatum& R, const WeylElt& w);
    friend bool operator==(const AffineWeylElt& a, const AffineWeylElt& b) {
        return a.group == b.group && a.mu == b.mu && a.perm == b.perm;
    }
};

AffineWeylElt operator*(const AffineWeylElt& x, const AffineWeylElt& y);
AffineWeylElt inverse(const AffineWeylElt& x);
int affine_length(const AffineWeylElt& x);
bool lengths_add(const AffineWeylElt& x, const AffineWeylElt& y);
std::string to_string(const AffineWeylElt& x);

}  // namespace modrep
