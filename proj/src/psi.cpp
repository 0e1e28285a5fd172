#include "latmat/psi.hpp"

#include "latmat/divisor.hpp"
#include "latmat/error.hpp"

namespace latmat {

const char* psi_method_name(PsiMethod m) {
    switch (m) {
        case PsiMethod::recursive: return "recursive";
        case PsiMethod::mobius: return "mobius";
        case PsiMethod::join_closed: return "join_closed";
        case PsiMethod::upper_closed: return "upper_closed";
        case PsiMethod::dirichlet: return "dirichlet";
    }
    return "?";
}

PsiVector psi_recursive(const OrderedSubset& d, const PosetFunction& f) {
    const FinitePoset& p = d.host();
    const std::size_t m = d.size();
    std::vector<Rat> values(m);
    for (std::size_t k = m; k-- > 0;) {
        Rat v = f.at(d[k]);
        for (std::size_t t = k + 1; t < m; ++t)
            if (p.less(d[k], d[t])) v -= values[t];
        values[k] = std::move(v);
    }
    return PsiVector{d, std::move(values), PsiMethod::recursive};
}

PsiVector psi_mobius(const OrderedSubset& d, const PosetFunction& f) {
    const FinitePoset& p = d.host();
    const std::size_t m = d.size();
    FinitePoset sub = p.induced(d.indices());
    std::vector<Rat> values(m);
    for (std::size_t k = 0; k < m; ++k) {
        Rat v(0);
        for (std::size_t t = k; t < m; ++t) {
            if (!p.leq(d[k], d[t])) continue;
            const Int& mu = sub.mobius(k, t);
            if (mu != 0) v += f.at(d[t]) * Rat(mu);
        }
        values[k] = std::move(v);
    }
    return PsiVector{d, std::move(values), PsiMethod::mobius};
}

PsiVector psi_join_closed(const OrderedSubset& d, const PosetFunction& f, MobiusVariant variant) {
    const FinitePoset& p = d.host();
    if (!closure_predicates(d).is_join_closed)
        throw HypothesisError("basis is not join-closed");

    if (variant == MobiusVariant::generated_sublattice) {
        // A join-closed set generates itself, so the generated-sublattice
        // Möbius function is just the induced one.
        PsiVector out = psi_mobius(d, f);
        out.method = PsiMethod::join_closed;
        return out;
    }

    const OrderedSubset pd = upper_part(d);
    const FinitePoset sub = p.induced(pd.indices());
    const std::size_t vee = pd.indices().back();  // top of P_D = vee D
    const std::size_t m = d.size();
    std::vector<Rat> values(m);
    for (std::size_t k = 0; k < m; ++k) {
        Rat acc(0);
        for (std::size_t zpos = 0; zpos < pd.size(); ++zpos) {
            const std::size_t z = pd[zpos];
            if (!p.leq(d[k], z)) continue;
            bool later_below = false;
            for (std::size_t t = k + 1; t < m && !later_below; ++t) later_below = p.leq(d[t], z);
            if (later_below) continue;
            for (std::size_t wpos = zpos; wpos < pd.size(); ++wpos) {
                const std::size_t w = pd[wpos];
                if (!p.leq(z, w) || !p.leq(w, vee)) continue;
                const Int& mu = sub.mobius(zpos, wpos);
                if (mu != 0) acc += f.at(w) * Rat(mu);
            }
        }
        values[k] = std::move(acc);
    }
    return PsiVector{d, std::move(values), PsiMethod::join_closed};
}

PsiVector psi_upper_closed(const OrderedSubset& d, const PosetFunction& f) {
    const FinitePoset& p = d.host();
    if (!closure_predicates(d).is_upper_closed_up_to_join)
        throw HypothesisError("basis is not upper-closed up to its join");
    const std::size_t m = d.size();
    std::vector<Rat> values(m);
    for (std::size_t k = 0; k < m; ++k) {
        Rat v(0);
        for (std::size_t t = k; t < m; ++t) {
            if (!p.leq(d[k], d[t])) continue;
            const Int& mu = p.mobius(d[k], d[t]);
            if (mu != 0) v += f.at(d[t]) * Rat(mu);
        }
        values[k] = std::move(v);
    }
    return PsiVector{d, std::move(values), PsiMethod::upper_closed};
}

PsiVector psi_dirichlet(const OrderedSubset& d, const PosetFunction& f) {
    const FinitePoset& p = d.host();
    const std::size_t m = d.size();
    std::vector<Int> members(m);
    for (std::size_t k = 0; k < m; ++k) members[k] = label_value(p, d[k]);
    if (!is_multiple_closed(members))
        throw HypothesisError("basis is not multiple-closed up to its lcm");

    const Int big = lcm_of_set(members);
    auto eval = [&](const Int& x) -> Rat {
        // Multiple-closedness keeps every evaluation point inside the basis.
        std::size_t idx = p.index_of(to_string(x));
        return f.at(idx);
    };
    std::vector<Rat> values(m);
    for (std::size_t k = 0; k < m; ++k) values[k] = dirichlet_psi(eval, members[k], big / members[k]);
    return PsiVector{d, std::move(values), PsiMethod::dirichlet};
}

bool psi_reconstructs(const PsiVector& psi, const PosetFunction& f) {
    const OrderedSubset& d = psi.basis;
    const FinitePoset& p = d.host();
    for (std::size_t k = 0; k < d.size(); ++k) {
        Rat sum(0);
        for (std::size_t v = k; v < d.size(); ++v)
            if (p.leq(d[k], d[v])) sum += psi.values[v];
        if (sum != f.at(d[k])) return false;
    }
    return true;
}

}  // namespace latmat
