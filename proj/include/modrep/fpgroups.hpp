#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "modrep/common.hpp"
#include "modrep/rootdata.hpp"

namespace modrep {

// n x n matrix over F_p (n <= 4).
struct SmallMat {
    int n = 0;
    std::array<i64, 16> a{};
    i64& at(int i, int j) { return a[i * 4 + j]; }
    i64 at(int i, int j) const { return a[i * 4 + j]; }
    static SmallMat identity(int n);
    friend bool operator==(const SmallMat& x, const SmallMat& y) { return x.n == y.n && x.a == y.a; }
};

SmallMat mat_mul(const SmallMat& x, const SmallMat& y, i64 p);
SmallMat mat_inverse(const SmallMat& x, i64 p);
SmallMat mat_transpose(const SmallMat& x);
i64 mat_det(const SmallMat& x, i64 p);

class FiniteGroupContext {
public:
    FiniteGroupContext(GroupId g, i64 p);

    const RootDatum& datum() const { return *R_; }
    GroupId group() const { return R_->id; }
    i64 p() const { return p_; }
    int n() const { return R_->matrix_size; }

    const std::vector<SmallMat>& generators() const { return gens_; }
    // x_alpha(t) for positive root k; negative=true gives the opposite root group.
    SmallMat root_element(int k, i64 t, bool negative = false) const;
    SmallMat simple_lift(int i) const { return simple_lifts_[i]; }
    // Product of simple lifts along the reduced word of w.
    SmallMat weyl_lift(const WeylElt& w) const;
    SmallMat torus_element(const std::array<i64, 4>& diag) const;

    bool in_group(const SmallMat& g) const;
    bool in_borel(const SmallMat& g) const;

    // Exponents e with lambda(t) = prod_i t_ii^{e_i} on the diagonal torus.
    std::array<i64, 4> torus_exponents(const Weight& l) const;
    // Teichmuller-lifted character value on the diagonal of an upper-triangular b.
    std::uint32_t character(const Weight& l, const SmallMat& b, int N) const;

private:
    const RootDatum* R_;
    i64 p_;
    i64 gen_root_;  // primitive root mod p
    std::vector<SmallMat> gens_;
    std::vector<SmallMat> simple_lifts_;
};

enum class Quotient { Borel, Unipotent };

// Canonical coset representatives of G(F_p)/B(F_p) or G(F_p)/U(F_p).
class CosetSpace {
public:
    const FiniteGroupContext& ctx() const { return *ctx_; }
    Quotient quotient() const { return q_; }
    std::size_t size() const { return reps_.size(); }
    const SmallMat& rep(std::size_t i) const { return reps_[i]; }
    const SmallMat& rep_inverse(std::size_t i) const { return inv_[i]; }

    struct Located {
        std::size_t index;
        SmallMat b;  // rep^{-1} h, in B (or U)
    };
    Located locate(const SmallMat& h) const;

    using Key = std::array<std::uint8_t, 16>;
    Key canonical_key(const SmallMat& h) const;

private:
    friend CosetSpace enumerate_flags(const FiniteGroupContext& ctx, Quotient q, std::size_t budget);
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept;
    };
    const FiniteGroupContext* ctx_ = nullptr;
    Quotient q_ = Quotient::Borel;
    std::vector<SmallMat> reps_, inv_;
    std::unordered_map<Key, std::size_t, KeyHash> index_;
};

CosetSpace enumerate_flags(const FiniteGroupContext& ctx, Quotient q = Quotient::Borel,
                           std::size_t budget = 2'000'000);

// Sum_{w in W} p^{l(w)}.
i64 bruhat_count(const RootDatum& R, i64 p);

// Dense matrix over Z/m, columns are images of basis vectors.
struct ModMatrix {
    std::size_t rows = 0, cols = 0;
    std::uint32_t modulus = 1;
    std::vector<std::uint32_t> a;
    ModMatrix() = default;
    ModMatrix(std::size_t r, std::size_t c, std::uint32_t m) : rows(r), cols(c), modulus(m), a(r * c, 0) {}
    static ModMatrix identity(std::size_t n, std::uint32_t m);
    std::uint32_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    std::uint32_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
    friend bool operator==(const ModMatrix& x, const ModMatrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.modulus == y.modulus && x.a == y.a;
    }
};
ModMatrix operator*(const ModMatrix& x, const ModMatrix& y);

// Left action of g on M(lambda) (Borel) or on A[G/U] (Unipotent; lambda ignored).
ModMatrix action_matrix(const CosetSpace& S, const Weight& l, const SmallMat& g, int N);

// T_w: M(lambda) -> M(w lambda), as the composite of simple-reflection factors.
ModMatrix intertwiner(const CosetSpace& S, const Weight& l, const WeylElt& w, int N);
// The same operator summed directly over the p^{l(w)} cosets, for a given lift of w.
ModMatrix intertwiner_direct(const CosetSpace& S, const Weight& l, const WeylElt& w, const SmallMat& lift, int N);

struct ElementaryDivisorProfile {
    i64 p = 0;
    int N = 0;
    std::vector<int> exponents;  // sorted ascending
    std::map<int, int> histogram() const;
    std::vector<i64> layer_dims(int max_layer) const;  // d_i = #{e_j >= i}
    i64 valuation_of_det() const;
};

struct SmithResult {
    ElementaryDivisorProfile profile;
    std::vector<int> column_exponent;  // exponent attached to column j of Q
    ModMatrix Q, Qinv;                 // only when transforms are tracked
};
SmithResult smith_form(ModMatrix M, i64 p, int N, bool track_transforms);
ElementaryDivisorProfile elementary_divisors(const ModMatrix& M, i64 p, int N);

std::vector<i64> filtration_dims(const CosetSpace& S, const Weight& l, const WeylElt& w, int N);

struct NormalizedIntertwiner {
    int i = 0;
    ModMatrix matrix;         // p^{-i} T on the basis Q diag(p^{max(0,i-e_j)}) Q^{-1}, mod p^{N-i}
    ModMatrix sublattice;     // that basis, mod p^N
    std::vector<int> column_exponent;
    ModMatrix Q;
    i64 rank_on_layer = 0;    // mod-p rank of T' on M(w,i) / p
    bool kills_next_layer = false;
};
NormalizedIntertwiner normalized_intertwiner(const CosetSpace& S, const Weight& l, const WeylElt& w, int i, int N);

// Rank of a matrix over F_p (entries reduced mod p first).
i64 rank_mod_p(const ModMatrix& M, i64 p);

}  // namespace modrep
