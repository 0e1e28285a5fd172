#pragma once

#include <string>
#include <vector>

#include "latmat/poset.hpp"

namespace latmat {

enum class PsiMethod { recursive, mobius, join_closed, upper_closed, dirichlet };
const char* psi_method_name(PsiMethod m);

/*
 * The mass vector of a basis D under f: the unique values with
 * f(d_k) = sum of values over all d_v >= d_k. Each computation form tags
 * the vector with the method that produced it; all forms agree exactly
 * wherever their hypotheses hold.
 */
struct PsiVector {
    OrderedSubset basis;
    std::vector<Rat> values;
    PsiMethod method;
};

// Top-down recursion: value(d_k) = f(d_k) - sum of values strictly above d_k.
PsiVector psi_recursive(const OrderedSubset& d, const PosetFunction& f);

// Möbius inversion over the induced subposet (D, <=).
PsiVector psi_mobius(const OrderedSubset& d, const PosetFunction& f);

// Which Möbius function backs the join-closed form: the interval union P_D,
// or (equivalently, since a join-closed D generates itself) the induced
// subposet on D.
enum class MobiusVariant { interval_union, generated_sublattice };

// Join-closed form: a double sum over host elements z in [d_k, vee D] that
// dominate no later basis member, and w in [z, vee D], weighted by the
// Möbius function of P_D. Requires D join-closed and f total on P_D.
PsiVector psi_join_closed(const OrderedSubset& d, const PosetFunction& f,
                          MobiusVariant variant = MobiusVariant::interval_union);

// Upper-closed form: Möbius inversion with the host poset's Möbius function.
// Requires D upper-closed up to vee D (so P_D = D).
PsiVector psi_upper_closed(const OrderedSubset& d, const PosetFunction& f);

// Dirichlet-convolution form on integer-labeled carriers: value(d_k) =
// [zeta * (f_{d_k} mu)](lcm D / d_k). Requires D multiple-closed up to lcm D.
PsiVector psi_dirichlet(const OrderedSubset& d, const PosetFunction& f);

// The defining reconstruction identity, checked exactly.
bool psi_reconstructs(const PsiVector& psi, const PosetFunction& f);

}  // namespace latmat
