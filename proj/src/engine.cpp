#include "latmat/engine.hpp"

#include <cassert>

#include "latmat/combinatorics.hpp"
#include "latmat/error.hpp"
#include "latmat/kernels.hpp"
#include "latmat/oracle.hpp"

namespace latmat::engine {

const char* kind_name(MatrixKind k) { return k == MatrixKind::join ? "join" : "meet"; }

const char* det_method_name(DetMethod m) {
    switch (m) {
        case DetMethod::cauchy_binet: return "cauchy-binet";
        case DetMethod::join_closed: return "join-closed";
        case DetMethod::upper_closed: return "upper-closed";
        case DetMethod::auto_select: return "auto";
    }
    return "?";
}

const char* inv_method_name(InvMethod m) {
    switch (m) {
        case InvMethod::cofactor_cb: return "cofactor-cb";
        case InvMethod::join_closed: return "join-closed";
        case InvMethod::upper_closed: return "upper-closed";
        case InvMethod::auto_select: return "auto";
    }
    return "?";
}

MatrixKind parse_kind(const std::string& s) {
    if (s == "join") return MatrixKind::join;
    if (s == "meet") return MatrixKind::meet;
    throw ParseError("unknown matrix kind '" + s + "' (expected join or meet)");
}

DetMethod parse_det_method(const std::string& s) {
    if (s == "auto") return DetMethod::auto_select;
    if (s == "cauchy-binet") return DetMethod::cauchy_binet;
    if (s == "join-closed") return DetMethod::join_closed;
    if (s == "upper-closed") return DetMethod::upper_closed;
    throw ParseError("unknown determinant method '" + s + "'");
}

InvMethod parse_inv_method(const std::string& s) {
    if (s == "auto") return InvMethod::auto_select;
    if (s == "cofactor-cb") return InvMethod::cofactor_cb;
    if (s == "join-closed") return InvMethod::join_closed;
    if (s == "upper-closed") return InvMethod::upper_closed;
    throw ParseError("unknown inverse method '" + s + "'");
}

MatrixSpec::MatrixSpec(MatrixKind kind_, OrderedSubset x_, OrderedSubset y_, PosetFunction f_,
                       std::optional<OrderedSubset> d_)
    : kind(kind_), x(std::move(x_)), y(std::move(y_)), f(std::move(f_)), d(std::move(d_)) {
    const FinitePoset* host = &x.host();
    if (&y.host() != host || &f.host() != host || (d && &d->host() != host))
        throw Error(ErrorCategory::input, "X, Y, f and D must share one host poset");
}

namespace {

ByteMatrix incidence_bytes(const OrderedSubset& x, const OrderedSubset& d) {
    const FinitePoset& p = x.host();
    ByteMatrix e(x.size(), d.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < d.size(); ++j)
            if (p.leq(x[i], d[j])) e.at(i, j) = 1;
    return e;
}

OrderedSubset resolve_basis(const MatrixSpec& spec) {
    const FinitePoset& p = spec.x.host();
    if (spec.d) {
        for (std::size_t i = 0; i < spec.x.size(); ++i)
            for (std::size_t j = 0; j < spec.y.size(); ++j) {
                std::size_t jn = p.join(spec.x[i], spec.y[j]);
                if (!spec.d->contains_host_index(jn))
                    throw BasisError("basis D omits the join '" + p.label(jn) + "'");
            }
        return *spec.d;
    }
    return default_basis(spec);
}

void require_defined_nonzero(const PosetFunction& f, const OrderedSubset& s, const char* where) {
    const FinitePoset& p = s.host();
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (!f.defined(s[k]))
            throw MissingValueError(std::string("f undefined at '") + p.label(s[k]) + "' (" + where + ")");
        if (f.at(s[k]) == 0)
            throw ZeroValueError(std::string("f vanishes at '") + p.label(s[k]) + "' (" + where + ")");
    }
}

void require_pairs_semimultiplicative(const PosetFunction& f, const OrderedSubset& x,
                                      const OrderedSubset& y) {
    const FinitePoset& p = x.host();
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < y.size(); ++j) {
            std::size_t mt = p.meet(x[i], y[j]);
            std::size_t jn = p.join(x[i], y[j]);
            if (f.at(x[i]) * f.at(y[j]) != f.at(mt) * f.at(jn))
                throw SemimultiplicativityError("f is not semimultiplicative at ('" + p.label(x[i]) +
                                                "', '" + p.label(y[j]) + "')");
        }
    }
}

void check_subset_cap(std::size_t m, std::size_t n, const Limits& limits) {
    if (limits.force) return;
    Int count = binomial(m, n);
    if (count > Int(static_cast<unsigned long>(limits.cap)))
        throw CombinatorialBlowupError("C(" + std::to_string(m) + "," + std::to_string(n) + ") = " +
                                       to_string(count) + " column subsets exceed the cap of " +
                                       std::to_string(limits.cap) + " (raise --cap or pass --force)");
}

enum class ClosedForm { upper, join, none };

ClosedForm classify(const MatrixSpec& spec) {
    if (!spec.x.same_members(spec.y)) return ClosedForm::none;
    ClosureFlags flags = closure_predicates(spec.x);
    if (flags.is_upper_closed_up_to_join) return ClosedForm::upper;
    if (flags.is_join_closed) return ClosedForm::join;
    return ClosedForm::none;
}

void require_same_set(const MatrixSpec& spec, const char* form) {
    if (!spec.x.same_members(spec.y))
        throw HypothesisError(std::string(form) + " form requires X = Y");
}

std::vector<Rat> prefactors(const PosetFunction& f, const OrderedSubset& s) {
    std::vector<Rat> out(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) out[k] = f.at(s[k]);
    return out;
}

// Shared shape of the Möbius-quotient inverse: entry (i, j) is the sum of
// mu(x_k, x_i) * mu(x_k, x_j) / psi_k over members x_k below the host meet
// of x_i and x_j.
template <typename MobiusFn>
RatMatrix mobius_quotient_inverse(const OrderedSubset& s, const std::vector<Rat>& psi, MobiusFn mu) {
    const FinitePoset& p = s.host();
    const std::size_t n = s.size();
    for (std::size_t k = 0; k < n; ++k)
        if (psi[k] == 0)
            throw ZeroPsiError("psi vanishes at '" + p.label(s[k]) + "'; the matrix is singular");

    RatMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            std::size_t mt = p.meet(s[i], s[j]);
            Rat sum(0);
            for (std::size_t k = 0; k < n && s[k] <= mt; ++k) {
                if (!p.leq(s[k], mt)) continue;
                Int w = mu(k, i) * mu(k, j);
                if (w != 0) sum += Rat(w) / psi[k];
            }
            b.at(i, j) = sum;
            b.at(j, i) = std::move(sum);
        }
    }
    return b;
}

void debug_verify_inverse(const MatrixSpec& spec, const RatMatrix& inv) {
#ifndef NDEBUG
    RatMatrix m = build_matrix(spec);
    assert(oracle::identity_check(oracle::matmul(m, inv)));
    assert(oracle::identity_check(oracle::matmul(inv, m)));
#else
    (void)spec;
    (void)inv;
#endif
}

}  // namespace

RatMatrix build_matrix(const MatrixSpec& spec) {
    const FinitePoset& p = spec.x.host();
    RatMatrix m(spec.x.size(), spec.y.size());
    for (std::size_t i = 0; i < spec.x.size(); ++i)
        for (std::size_t j = 0; j < spec.y.size(); ++j) {
            std::size_t e = spec.kind == MatrixKind::join ? p.join(spec.x[i], spec.y[j])
                                                          : p.meet(spec.x[i], spec.y[j]);
            m.at(i, j) = spec.f.at(e);
        }
    return m;
}

RatMatrix incidence_e(const OrderedSubset& x, const OrderedSubset& d) {
    const FinitePoset& p = x.host();
    RatMatrix e(x.size(), d.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < d.size(); ++j)
            if (p.leq(x[i], d[j])) e.at(i, j) = 1;
    return e;
}

OrderedSubset default_basis(const MatrixSpec& spec) {
    const FinitePoset& p = spec.x.host();
    std::vector<char> present(p.size(), 0);
    std::vector<std::size_t> joins;
    for (std::size_t i = 0; i < spec.x.size(); ++i)
        for (std::size_t j = 0; j < spec.y.size(); ++j) {
            std::size_t jn = p.join(spec.x[i], spec.y[j]);
            if (!present[jn]) {
                present[jn] = 1;
                joins.push_back(jn);
            }
        }
    return join_closure(OrderedSubset::from_indices(p, std::move(joins)));
}

JoinFactorization factorize_join(const MatrixSpec& spec) {
    OrderedSubset basis = resolve_basis(spec);
    PsiVector psi = psi_recursive(basis, spec.f);
    RatMatrix ex = incidence_e(spec.x, basis);
    RatMatrix ey = incidence_e(spec.y, basis);
    RatMatrix lambda = RatMatrix::diagonal(psi.values);
    return JoinFactorization{std::move(ex), std::move(lambda), std::move(ey), std::move(psi),
                             std::move(basis)};
}

MeetFactorization factorize_meet(const MatrixSpec& spec) {
    OrderedSubset basis = resolve_basis(spec);
    require_defined_nonzero(spec.f, spec.x, "X");
    require_defined_nonzero(spec.f, spec.y, "Y");
    require_defined_nonzero(spec.f, basis, "basis D");
    require_pairs_semimultiplicative(spec.f, spec.x, spec.y);

    PosetFunction recip = spec.f.reciprocal();
    PsiVector psi = psi_recursive(basis, recip);
    RatMatrix ex = incidence_e(spec.x, basis);
    RatMatrix ey = incidence_e(spec.y, basis);
    RatMatrix lambda = RatMatrix::diagonal(psi.values);
    RatMatrix delta_x = RatMatrix::diagonal(prefactors(spec.f, spec.x));
    RatMatrix delta_y = RatMatrix::diagonal(prefactors(spec.f, spec.y));
    return MeetFactorization{std::move(delta_x), std::move(ex),    std::move(lambda),
                             std::move(ey),      std::move(delta_y), std::move(psi),
                             std::move(basis)};
}

DetResult det_closed_form(const MatrixSpec& spec, DetMethod method, const Limits& limits) {
    if (spec.x.size() != spec.y.size())
        throw DimensionError("determinant needs |X| = |Y|");
    const std::size_t n = spec.x.size();

    if (method == DetMethod::auto_select) {
        switch (classify(spec)) {
            case ClosedForm::upper: method = DetMethod::upper_closed; break;
            case ClosedForm::join: method = DetMethod::join_closed; break;
            case ClosedForm::none: method = DetMethod::cauchy_binet; break;
        }
    }

    const bool meet_kind = spec.kind == MatrixKind::meet;

    if (method == DetMethod::cauchy_binet) {
        OrderedSubset basis = resolve_basis(spec);
        if (meet_kind) {
            require_defined_nonzero(spec.f, spec.x, "X");
            require_defined_nonzero(spec.f, spec.y, "Y");
            require_defined_nonzero(spec.f, basis, "basis D");
            require_pairs_semimultiplicative(spec.f, spec.x, spec.y);
        }
        if (n > basis.size()) return DetResult{Rat(0), method, std::move(basis)};
        check_subset_cap(basis.size(), n, limits);

        const PosetFunction recip = spec.f.reciprocal();
        PsiVector psi = psi_recursive(basis, meet_kind ? recip : spec.f);
        ByteMatrix bx = incidence_bytes(spec.x, basis);
        ByteMatrix by = incidence_bytes(spec.y, basis);
        Rat value = kernels::cauchy_binet_sum(bx, by, psi.values);
        if (meet_kind)
            for (std::size_t v = 0; v < n; ++v) value *= spec.f.at(spec.x[v]) * spec.f.at(spec.y[v]);
        return DetResult{std::move(value), method, std::move(basis)};
    }

    const char* form = method == DetMethod::join_closed ? "join-closed" : "upper-closed";
    require_same_set(spec, form);
    const OrderedSubset& s = spec.x;
    if (method == DetMethod::join_closed && !closure_predicates(s).is_join_closed)
        throw HypothesisError("S is not join-closed");
    if (meet_kind) {
        require_defined_nonzero(spec.f, s, "S");
        require_pairs_semimultiplicative(spec.f, s, s);
    }

    const PosetFunction recip = spec.f.reciprocal();
    const PosetFunction& g = meet_kind ? recip : spec.f;
    PsiVector psi = method == DetMethod::join_closed ? psi_mobius(s, g) : psi_upper_closed(s, g);

    Rat value(1);
    for (std::size_t v = 0; v < n; ++v) {
        value *= psi.values[v];
        if (meet_kind) value *= spec.f.at(s[v]) * spec.f.at(s[v]);
    }
    return DetResult{std::move(value), method, s};
}

InvResult inverse_closed_form(const MatrixSpec& spec, InvMethod method, const Limits& limits) {
    if (spec.x.size() != spec.y.size())
        throw DimensionError("inverse needs |X| = |Y|");
    const std::size_t n = spec.x.size();

    if (method == InvMethod::auto_select) {
        switch (classify(spec)) {
            case ClosedForm::upper: method = InvMethod::upper_closed; break;
            case ClosedForm::join: method = InvMethod::join_closed; break;
            case ClosedForm::none: method = InvMethod::cofactor_cb; break;
        }
    }

    const bool meet_kind = spec.kind == MatrixKind::meet;

    if (method == InvMethod::cofactor_cb) {
        OrderedSubset basis = resolve_basis(spec);
        if (meet_kind) {
            require_defined_nonzero(spec.f, spec.x, "X");
            require_defined_nonzero(spec.f, spec.y, "Y");
            require_defined_nonzero(spec.f, basis, "basis D");
            require_pairs_semimultiplicative(spec.f, spec.x, spec.y);
        }
        if (n > basis.size())
            throw SingularMatrixError("the matrix has rank below its size (|X| exceeds |D|)");
        check_subset_cap(basis.size(), n, limits);
        if (n > 0) check_subset_cap(basis.size(), n - 1, limits);

        const PosetFunction recip = spec.f.reciprocal();
        PsiVector psi = psi_recursive(basis, meet_kind ? recip : spec.f);
        ByteMatrix bx = incidence_bytes(spec.x, basis);
        ByteMatrix by = incidence_bytes(spec.y, basis);
        Rat det = kernels::cauchy_binet_sum(bx, by, psi.values);
        if (det == 0) throw SingularMatrixError("matrix is singular");
        RatMatrix b = kernels::cofactor_inverse(bx, by, psi.values, det);
        if (meet_kind) {
            // (X,Y)_f inverse = Delta_Y^-1 [X,Y]_{1/f}^-1 Delta_X^-1.
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    b.at(i, j) /= spec.f.at(spec.y[i]) * spec.f.at(spec.x[j]);
        }
        InvResult out{std::move(b), method, std::move(basis)};
        debug_verify_inverse(spec, out.inverse);
        return out;
    }

    const char* form = method == InvMethod::join_closed ? "join-closed" : "upper-closed";
    require_same_set(spec, form);
    const OrderedSubset& s = spec.x;
    if (method == InvMethod::join_closed && !closure_predicates(s).is_join_closed)
        throw HypothesisError("S is not join-closed");
    if (meet_kind) {
        require_defined_nonzero(spec.f, s, "S");
        require_pairs_semimultiplicative(spec.f, s, s);
    }

    const PosetFunction recip = spec.f.reciprocal();
    const PosetFunction& g = meet_kind ? recip : spec.f;
    const FinitePoset& p = s.host();

    RatMatrix b(n, n);
    if (method == InvMethod::join_closed) {
        PsiVector psi = psi_mobius(s, g);
        FinitePoset sub = p.induced(s.indices());
        b = mobius_quotient_inverse(s, psi.values,
                                    [&sub](std::size_t k, std::size_t i) { return sub.mobius(k, i); });
    } else {
        PsiVector psi = psi_upper_closed(s, g);
        b = mobius_quotient_inverse(
            s, psi.values, [&p, &s](std::size_t k, std::size_t i) { return p.mobius(s[k], s[i]); });
    }
    if (meet_kind)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) b.at(i, j) /= spec.f.at(s[i]) * spec.f.at(s[j]);

    InvResult out{std::move(b), method, s};
    debug_verify_inverse(spec, out.inverse);
    return out;
}

SemimultReport semimultiplicative_check(const PosetFunction& f, const FinitePoset& p) {
    const std::size_t n = p.size();
    const long long total = static_cast<long long>(n) * static_cast<long long>(n);
    // 0 = ok, 1 = no bound, 2 = identity fails, 3 = missing value
    long long first_bad = total;
    int bad_kind = 0;

#pragma omp parallel
    {
        long long local_bad = total;
        int local_kind = 0;
#pragma omp for schedule(static) nowait
        for (long long cell = 0; cell < total; ++cell) {
            const std::size_t a = static_cast<std::size_t>(cell) / n;
            const std::size_t b = static_cast<std::size_t>(cell) % n;
            if (a > b || cell >= local_bad) continue;
            int kind = 0;
            auto mt = p.meet_opt(a, b);
            auto jn = p.join_opt(a, b);
            if (!mt || !jn) {
                kind = 1;
            } else {
                try {
                    if (f.at(a) * f.at(b) != f.at(*mt) * f.at(*jn)) kind = 2;
                } catch (const MissingValueError&) {
                    kind = 3;
                }
            }
            if (kind != 0 && cell < local_bad) {
                local_bad = cell;
                local_kind = kind;
            }
        }
#pragma omp critical(latmat_semimult)
        {
            if (local_bad < first_bad) {
                first_bad = local_bad;
                bad_kind = local_kind;
            }
        }
    }

    if (first_bad == total) return SemimultReport{true, std::nullopt};
    const std::size_t a = static_cast<std::size_t>(first_bad) / n;
    const std::size_t b = static_cast<std::size_t>(first_bad) % n;
    if (bad_kind == 1)
        throw NoBoundError("no meet or join of '" + p.label(a) + "' and '" + p.label(b) + "'");
    if (bad_kind == 3)
        throw MissingValueError("f undefined on the interval of '" + p.label(a) + "' and '" + p.label(b) + "'");
    return SemimultReport{false, std::make_pair(a, b)};
}

}  // namespace latmat::engine
