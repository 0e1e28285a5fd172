#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "latmat/matrix.hpp"
#include "latmat/poset.hpp"
#include "latmat/psi.hpp"

namespace latmat::engine {

enum class MatrixKind { join, meet };
enum class DetMethod { cauchy_binet, join_closed, upper_closed, auto_select };
enum class InvMethod { cofactor_cb, join_closed, upper_closed, auto_select };

const char* kind_name(MatrixKind k);
const char* det_method_name(DetMethod m);
const char* inv_method_name(InvMethod m);
MatrixKind parse_kind(const std::string& s);          // "join" | "meet"
DetMethod parse_det_method(const std::string& s);     // "auto" | "cauchy-binet" | ...
InvMethod parse_inv_method(const std::string& s);     // "auto" | "cofactor-cb" | ...

/*
 * The data of one matrix computation: which kind of matrix, the row set X,
 * the column set Y, the function f, and an optional basis D that must
 * contain every pairwise join of X and Y. X and Y may have different sizes
 * for building and factorizing; determinants and inverses need |X| = |Y|.
 */
struct MatrixSpec {
    MatrixKind kind;
    OrderedSubset x;
    OrderedSubset y;
    PosetFunction f;
    std::optional<OrderedSubset> d;

    MatrixSpec(MatrixKind kind_, OrderedSubset x_, OrderedSubset y_, PosetFunction f_,
               std::optional<OrderedSubset> d_ = std::nullopt);
};

// Work cap for subset enumeration: refuse when the number of column subsets
// exceeds `cap` unless `force` is set.
struct Limits {
    std::uint64_t cap = 1'000'000;
    bool force = false;
};

// Entry (i, j) is f(x_i v y_j) or f(x_i ^ y_j).
RatMatrix build_matrix(const MatrixSpec& spec);

// The n x m 0/1 matrix with e_ij = 1 iff x_i <= d_j.
RatMatrix incidence_e(const OrderedSubset& x, const OrderedSubset& d);

// The basis actually used when none is supplied: the join closure of the set
// of all pairwise joins x_i v y_j.
OrderedSubset default_basis(const MatrixSpec& spec);

// [X,Y]_f = E(X) * diag(psi) * E(Y)^T.
struct JoinFactorization {
    RatMatrix ex, lambda, ey;
    PsiVector psi;
    OrderedSubset basis;
};
JoinFactorization factorize_join(const MatrixSpec& spec);

// (X,Y)_f = Delta_X * E(X) * diag(psi of 1/f) * E(Y)^T * Delta_Y, for
// semimultiplicative nonzero f.
struct MeetFactorization {
    RatMatrix delta_x, ex, lambda, ey, delta_y;
    PsiVector psi;
    OrderedSubset basis;
};
MeetFactorization factorize_meet(const MatrixSpec& spec);

struct DetResult {
    Rat value;
    DetMethod method;
    OrderedSubset basis;  // the D the computation ran on (= S for closed-set forms)
};
DetResult det_closed_form(const MatrixSpec& spec, DetMethod method = DetMethod::auto_select,
                          const Limits& limits = {});

struct InvResult {
    RatMatrix inverse;
    InvMethod method;
    OrderedSubset basis;
};
InvResult inverse_closed_form(const MatrixSpec& spec, InvMethod method = InvMethod::auto_select,
                              const Limits& limits = {});

// Checks f(a)f(b) = f(a^b)f(a v b) over all carrier pairs; on failure the
// witness holds the first offending pair in carrier order.
struct SemimultReport {
    bool ok = false;
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};
SemimultReport semimultiplicative_check(const PosetFunction& f, const FinitePoset& p);

}  // namespace latmat::engine
