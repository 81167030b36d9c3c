#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "modrep/common.hpp"
#include "modrep/fpgroups.hpp"
#include "modrep/flkisin.hpp"
#include "modrep/rootdata.hpp"

namespace modrep {

// Element of the pro-p extended affine Weyl group, stored as the monomial matrix
// diag(unit) * p^mu * P with P e_i = e_{perm[i]}. Units live in F_p^x.
struct IMBasisElt {
    AffineWeylElt w;
    std::array<i64, 4> unit{1, 1, 1, 1};

    static IMBasisElt identity(GroupId g);
    static IMBasisElt torus(GroupId g, const std::array<i64, 4>& diag);
    static IMBasisElt translation(GroupId g, const std::array<i64, 4>& mu);
    // A monomial matrix over F_p (no translation part).
    static IMBasisElt from_monomial(GroupId g, const SmallMat& m, i64 p);

    bool is_torus() const;
    bool finite() const;  // zero translation part
    friend bool operator==(const IMBasisElt& x, const IMBasisElt& y) { return x.w == y.w && x.unit == y.unit; }
    friend bool operator<(const IMBasisElt& x, const IMBasisElt& y);
};

IMBasisElt mul(const IMBasisElt& x, const IMBasisElt& y, i64 p);
IMBasisElt inverse(const IMBasisElt& x, i64 p);
int length(const IMBasisElt& x);
SmallMat to_matrix(const IMBasisElt& x, i64 p);  // requires finite()
std::string to_string(const IMBasisElt& x);

// Formal Z-linear (or Z/modulus-linear) combination of basis elements.
class HeckeExpr {
public:
    HeckeExpr() = default;
    HeckeExpr(i64 p, i64 modulus = 0) : p_(p), modulus_(modulus) {}
    static HeckeExpr basis(const IMBasisElt& x, i64 p, i64 modulus = 0);
    static HeckeExpr unavailable(i64 p);

    i64 p() const { return p_; }
    i64 modulus() const { return modulus_; }
    bool normal_form_unavailable() const { return unavailable_; }
    const std::map<IMBasisElt, i64>& terms() const { return terms_; }
    i64 coeff(const IMBasisElt& x) const;
    void add(const IMBasisElt& x, i64 c);

    HeckeExpr operator+(const HeckeExpr& o) const;
    HeckeExpr scaled(i64 c) const;
    friend bool operator==(const HeckeExpr& a, const HeckeExpr& b) {
        return a.unavailable_ == b.unavailable_ && a.terms_ == b.terms_;
    }

private:
    i64 reduce(i64 c) const { return modulus_ ? pmod(c, modulus_) : c; }
    i64 p_ = 0, modulus_ = 0;
    bool unavailable_ = false;
    std::map<IMBasisElt, i64> terms_;
};

std::string to_string(const HeckeExpr& h);

// The fixed lift of a simple reflection (from the group context).
IMBasisElt simple_lift(const FiniteGroupContext& ctx, int i);
// n = x_a(1) x_{-a}(-1) x_a(1) with n^2 = alpha^vee(-1); the quadratic relation is stated for it.
IMBasisElt tits_lift(const FiniteGroupContext& ctx, int i);
// alpha_i^vee(z) for the simple root i, computed from the root subgroups.
IMBasisElt simple_coroot(const FiniteGroupContext& ctx, int i, i64 z);

// T_x T_y when lengths add; the quadratic relation when x = t s, y = s t' for a simple
// reflection s; otherwise the NormalFormUnavailable marker.
HeckeExpr product_if_additive(const IMBasisElt& x, const IMBasisElt& y, const FiniteGroupContext& ctx,
                              i64 modulus = 0);

// Bilinear extension of product_if_additive; any unavailable product poisons the result.
HeckeExpr multiply(const HeckeExpr& a, const HeckeExpr& b, const FiniteGroupContext& ctx);

// Diagonal torus T(F_p) of the group.
std::vector<IMBasisElt> torus_elements(const FiniteGroupContext& ctx);

// A character of T(F_p) given by exponents on the diagonal entries.
struct TorusCharacter {
    std::array<i64, 4> exponents{};
};
// epsilon_theta = |T|^{-1} sum_t theta(t)^{-1} T_t with Teichmuller values mod p^N.
HeckeExpr idempotent(const FiniteGroupContext& ctx, const TorusCharacter& theta, int N);

// Matrix of the operator on A[G/U], [g] -> sum over U n^{-1} U / U of [g x].
// Algebra products map to matrix products.
ModMatrix realize(const CosetSpace& S, const HeckeExpr& h, int N);
ModMatrix realize(const CosetSpace& S, const IMBasisElt& x, int N);

struct ThetaRow {
    std::string w;  // word in s0, s1
    int theta = 0;  // index i of theta_i
    int k = 0;
    i64 rbar = 0;
};
struct ThetaImageTable {
    i64 p = 0;
    i64 xi = 0;
    std::vector<ThetaRow> rows;  // the eight Weyl elements
    const ThetaRow& row(const std::string& w) const;
    bool pairings_hold() const;  // k-sums = 3, rbar products = xi
};
ThetaImageTable theta_table(const FLData& fl);

// The elements used around the length-zero element: lambda = (0,0,-1,-1),
// w_Pi = s1 s0 s1, w~_Pi = t_{-lambda} w_Pi.
IMBasisElt hecke_lambda();
IMBasisElt hecke_w_pi();
IMBasisElt hecke_w_pi_tilde();

// F(mu_rhobar) against the filtration of M(w mu0) under w_Pi, for w in {id, s0, s1s0, s0s1s0}.
struct LayerCheck {
    std::string w, w_prime;
    Weight lifted;     // restricted representative of w mu0
    Alcove alcove = Alcove::NotListed;
    int k = 0;         // k_{w'}
    int layer = -1;    // layer of F(mu_rhobar), -1 if absent
    bool exact() const { return layer == k; }
    bool at_least() const { return layer >= k; }
};
std::vector<LayerCheck> layer_consistency(const FLData& fl, int min_depth = 7);

}  // namespace modrep
