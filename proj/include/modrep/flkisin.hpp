#pragma once

#include <array>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "modrep/common.hpp"
#include "modrep/rootdata.hpp"

namespace modrep {

struct FLData {
    i64 p = 0;
    std::array<i64, 4> a{};   // a0 < a1 < a2 < a3
    std::array<i64, 4> xi{};  // xi0..xi3 in F_p^x
    i64 x02 = 0, x03 = 0, x13 = 0;

    i64 b() const { return a[0] + a[3]; }
    i64 xi_total() const;  // xi0 * xi3 mod p
    friend bool operator==(const FLData& x, const FLData& y) {
        return x.p == y.p && x.a == y.a && x.xi == y.xi && x.x02 == y.x02 && x.x03 == y.x03 && x.x13 == y.x13;
    }
};

// nullopt when the data is consistent; otherwise the violated condition.
std::optional<std::string> fl_violation(const FLData& fl, bool require_symplectic = true);
bool is_symplectic(const FLData& fl);

// Inertial margin plus the weak/strong extension-class conditions.
GenericityReport check_genericity(const FLData& fl, int delta);
bool weakly_generic(const FLData& fl, int delta);
bool strongly_generic(const FLData& fl, int delta);

using FpMatrix4 = std::array<std::array<i64, 4>, 4>;
FpMatrix4 fl_matrix(const FLData& fl);
// The b-twisted dual tensored with F(xi), conjugated into the same normal form.
FpMatrix4 fl_dual(const FLData& fl);
// Same matrix evaluated from xi w0 F^{-t} w0 and the diagonal conjugation.
FpMatrix4 fl_dual_by_transpose(const FLData& fl);
FLData fl_dual_data(const FLData& fl);

// ---- Laurent polynomials over F_p -------------------------------------------

class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(i64 p) : p_(p) {}
    static LaurentPoly monomial(i64 p, i64 c, int deg);

    i64 p() const { return p_; }
    i64 coeff(int deg) const;
    void set(int deg, i64 c);
    bool is_zero() const { return terms_.empty(); }
    int valuation() const;  // throws on zero
    int degree() const;
    const std::map<int, i64>& terms() const { return terms_; }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly scaled(i64 c) const;
    LaurentPoly truncated(int prec) const;  // drop degrees >= prec
    friend bool operator==(const LaurentPoly& x, const LaurentPoly& y) { return x.terms_ == y.terms_; }

private:
    i64 p_ = 0;
    std::map<int, i64> terms_;
};

std::string to_string(const LaurentPoly& f);

class LaurentMatrix {
public:
    static constexpr int kLow = -16, kHigh = 32;  // degree window

    explicit LaurentMatrix(i64 p);
    static LaurentMatrix from_monomials(i64 p, const std::array<std::array<std::pair<i64, int>, 4>, 4>& m);
    i64 p() const { return p_; }
    LaurentPoly& at(int i, int j) { return e_[i][j]; }
    const LaurentPoly& at(int i, int j) const { return e_[i][j]; }

    LaurentMatrix operator*(const LaurentMatrix& o) const;  // throws WindowOverflow
    LaurentMatrix transpose() const;
    LaurentMatrix scaled(const LaurentPoly& f) const;
    friend bool operator==(const LaurentMatrix& x, const LaurentMatrix& y) { return x.e_ == y.e_; }

    LaurentPoly det() const;
    // All k x k minors (k = 1..4).
    std::vector<LaurentPoly> minors(int k) const;

private:
    void check_window() const;
    i64 p_;
    std::array<std::array<LaurentPoly, 4>, 4> e_;
};

std::string to_string(const LaurentMatrix& m);

// The symplectic form with A^t J A = nu J.
LaurentMatrix symplectic_form(i64 p);

LaurentMatrix kisin_matrix(const FLData& fl);
// Variant without the xi^{-1} on entries (3,1) and (3,2); symplectic only when xi = 1.
LaurentMatrix kisin_matrix_printed(const FLData& fl);

struct KisinChecks {
    bool symplectic = false;  // A^t J A = xi v^3 J
    bool minors2 = false;     // all 2x2 minors divisible by v
    bool minors3 = false;     // all 3x3 minors divisible by v^3
    bool det_unit_v6 = false;
};
KisinChecks check_kisin(const LaurentMatrix& A, i64 xi);

// Iwahori double coset of A as a GL4 monomial matrix v^mu sigma.
using Shape = AffineWeylElt;
Shape shape_of(const LaurentMatrix& A);
Shape expected_fl_shape();
// v^3 w0 x^{-t} w0.
Shape symplectic_dual_shape(const Shape& x);

struct Zeta {
    i64 zeta1 = 0, zeta2 = 0;
};
Zeta zeta_invariants(const FLData& fl, int delta = 7);

struct FLDiagonal {
    i64 p = 0;
    std::array<i64, 4> a{};
    std::array<i64, 4> xi{};
};
FLData recover_fl(const FLDiagonal& d, i64 zeta1, i64 zeta2);

struct TypesAndWeights {
    Weight mu0;        // lowest alcove presentation of the type
    Weight mu_rhobar;  // the obvious Serre weight
};
TypesAndWeights types_and_weights(const FLData& fl);

// Seeded sampler of strongly delta-generic symplectic data.
FLData random_strongly_generic(i64 p, int delta, std::mt19937_64& rng);

}  // namespace modrep
