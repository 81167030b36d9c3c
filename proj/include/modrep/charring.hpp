#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "modrep/common.hpp"
#include "modrep/rootdata.hpp"

namespace modrep {

enum class CharKind { WeylChi, IrredChiP, SerreF };
const char* char_kind_name(CharKind k);

struct CharSymbol {
    CharKind kind = CharKind::WeylChi;
    Weight weight;
    friend bool operator<(const CharSymbol& a, const CharSymbol& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.weight < b.weight;
    }
    friend bool operator==(const CharSymbol& a, const CharSymbol& b) {
        return a.kind == b.kind && a.weight == b.weight;
    }
};

inline CharSymbol weyl_chi(const Weight& l) { return {CharKind::WeylChi, l}; }
inline CharSymbol irred_chi(const Weight& l) { return {CharKind::IrredChiP, l}; }
// Serre weight symbol; checks restrictedness and reduces c modulo 2(p-1) (GSp4).
CharSymbol serre_symbol(const Weight& l, i64 p);
Weight serre_key(const Weight& l, i64 p);

class VirtualCharacter {
public:
    using Map = std::map<CharSymbol, i64>;

    VirtualCharacter() = default;
    VirtualCharacter(const CharSymbol& s, i64 c = 1) { add(s, c); }

    void add(const CharSymbol& s, i64 c);
    void add(const VirtualCharacter& o, i64 scale = 1);
    i64 coeff(const CharSymbol& s) const;
    const Map& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    VirtualCharacter& operator+=(const VirtualCharacter& o) { add(o, 1); return *this; }
    VirtualCharacter& operator-=(const VirtualCharacter& o) { add(o, -1); return *this; }
    friend VirtualCharacter operator+(VirtualCharacter a, const VirtualCharacter& b) { return a += b; }
    friend VirtualCharacter operator-(VirtualCharacter a, const VirtualCharacter& b) { return a -= b; }
    friend VirtualCharacter operator*(i64 k, VirtualCharacter a);
    friend bool operator==(const VirtualCharacter& a, const VirtualCharacter& b) {
        return a.terms_ == b.terms_;
    }

private:
    Map terms_;
};

std::string to_string(const VirtualCharacter& v, const RootDatum& R);

// Laurent polynomials in the group ring Z[X*(T)].
using WPoly = std::map<Weight, i64>;
WPoly poly_mul(const WPoly& a, const WPoly& b);
WPoly poly_act(const RootDatum& R, const WeylElt& w, const WPoly& a);

// sign 0 when lambda+rho' lies on a wall; otherwise (-1)^l(w) and the dominant
// representative of the dot orbit.
std::pair<int, Weight> weyl_reflect(const RootDatum& R, const Weight& l);
inline std::pair<int, Weight> weyl_reflect(const Weight& l) { return weyl_reflect(gsp4(), l); }

// Signed Weyl dimension (0 on walls).
i64 weyl_dim(const RootDatum& R, const Weight& l);
inline i64 weyl_dim(const Weight& l) { return weyl_dim(gsp4(), l); }

// D(e^lambda) = chi(lambda), extended linearly and normalized to dominant form.
VirtualCharacter demazure(const RootDatum& R, const WPoly& a);

// Steinberg basis b_w of Z[X] over Z[X]^W and its dual b*_w for D(b_v b*_w) = delta.
struct SteinbergBasis {
    std::vector<WPoly> b;      // indexed by WeylElt::index
    std::vector<WPoly> dual;
};
const SteinbergBasis& steinberg_basis(const RootDatum& R);
// Solves for the dual basis by exact linear algebra over a box of monomials.
SteinbergBasis solve_steinberg_dual(const RootDatum& R, int radius);

// Reduction of a Deligne-Lusztig character as an alternating sum of Weyl characters.
struct DLTerm {
    int w1 = 0;        // WeylElt index
    i64 gamma = 0;     // gamma'
    Weight eps;        // epsilon'
    Weight rho_w1;     // rho'_{w1}
};
// The GSp4 coefficient table: chi(w1(mu - sigma eps') + p rho'_{w1} - rho'), weighted by gamma'.
std::vector<DLTerm> dl_table(const RootDatum& R);

// Weyl-character form of R_sigma(mu), valid for any datum and any mu.
VirtualCharacter dl_reduce_weyl(const RootDatum& R, const WeylElt& sigma, const Weight& mu, i64 p);
// GSp4 version: also checks that every surviving weight lies in a listed alcove.
VirtualCharacter dl_reduce(const WeylElt& sigma, const Weight& mu, i64 p);
// Evaluates the coefficient table directly (used to cross-check dl_reduce).
VirtualCharacter dl_reduce_table(const WeylElt& sigma, const Weight& mu, i64 p);

// Jordan-Holder data of GSp4 Weyl modules in the listed alcoves.
const std::vector<Alcove>& weyl_jh_pattern(Alcove a);
VirtualCharacter weyl_jh(const Weight& l, i64 p);

// Weights (with multiplicity) of the Weyl module of dominant l.
std::map<Weight, i64> weyl_module_weights(const RootDatum& R, const Weight& l);

struct RestrictedSplit {
    Weight l0, l1;
};
RestrictedSplit split_restricted(const Weight& l, i64 p);
VirtualCharacter irred_to_serre(const Weight& l, i64 p);

// WeylChi / IrredChiP / SerreF combination -> SerreF combination (GSp4).
VirtualCharacter to_serre(const VirtualCharacter& v, i64 p);

// Dimension of the irreducible L(l) for l in a listed alcove, recursive in the Weyl-module patterns.
i64 irred_dim(const Weight& l, i64 p);
i64 serre_dim(const Weight& key, i64 p);
i64 dimension(const VirtualCharacter& v, i64 p, const RootDatum& R = gsp4());

// Shorthand label relative to a witness (x,y;z): F(a,b)_i or F'(a,b)_i.
std::string serre_label(const Weight& key, const Weight& witness, i64 p);

}  // namespace modrep
