#pragma once

#include <map>
#include <vector>

#include "modrep/charring.hpp"
#include "modrep/rootdata.hpp"

namespace modrep {

struct SumFormulaTerm {
    int root = 0;  // index into RootDatum::roots
    i64 r = 0;     // 0 < r <= p-1
    i64 m = 0;     // <lambda, alpha^vee> = r + m (p-1)
};

std::vector<SumFormulaTerm> sum_formula_terms(const RootDatum& R, const Weight& l, const WeylElt& w, i64 p);

// 2 nu(lambda, w) in Weyl characters (the halving is left to the caller).
VirtualCharacter sum_formula_twice(const RootDatum& R, const Weight& l, const WeylElt& w, i64 p);

// nu(lambda, w). For GSp4 weights deep enough to reduce, the result is in Serre weights;
// otherwise it stays in Weyl characters. Throws HalfInteger if the halving fails.
VirtualCharacter sum_formula(const RootDatum& R, const Weight& l, const WeylElt& w, i64 p);
inline VirtualCharacter sum_formula(const Weight& l, const WeylElt& w, i64 p) {
    return sum_formula(gsp4(), l, w, p);
}

// dim nu(lambda, w), valid for every datum and every lambda with positive pairings on R_w^+.
i64 sum_formula_dim(const RootDatum& R, const Weight& l, const WeylElt& w, i64 p);

// Serre-weight decomposition of the principal series M(lambda) (GSp4).
VirtualCharacter principal_series(const Weight& l, i64 p);

struct FiltrationProfile {
    Weight lambda;
    int w = 0;  // WeylElt index
    std::vector<VirtualCharacter> layers;
    std::size_t factor_count() const;
};

FiltrationProfile graded_pieces(const Weight& l, const WeylElt& w, i64 p, int min_depth = 7);

// Jordan-Holder alcove pattern of the Weyl module in alcove a, derived from the
// Weyl-module sum formula sum_{alpha>0} sum_{0<mp<<lambda+rho',alpha^vee>} v_p(mp) chi(s_{alpha,mp}.lambda)
// at a deep witness; each alcove counted at most once. Independent of the embedded table.
std::vector<Alcove> derive_weyl_jh(Alcove a, i64 p);

// Largest |tr(t | M(lambda)) - sum_F tr(t | F)| over seeded regular split torus elements t,
// with F running over the given Serre weights (multiplicity one). Zero when the weights
// are exactly the Jordan-Holder factors of M(lambda) as far as split tori can see.
double torus_trace_defect(const Weight& lambda, const std::vector<Weight>& serre_weights, i64 p, int samples = 25,
                          u64 seed = 1);

struct A3Row {
    Alcove alcove;
    FiltrationProfile profile;
};
std::vector<A3Row> table_a3(i64 p);

}  // namespace modrep
