#pragma once

#include <random>
#include <vector>

#include "latmat/divisor.hpp"
#include "latmat/poset.hpp"

namespace testutil {

using latmat::Int;
using latmat::Rat;

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    std::size_t below(std::size_t k) { return k == 0 ? 0 : static_cast<std::size_t>(gen() % k); }
    long int_in(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::size_t>(hi - lo + 1))); }
    Rat rational() { return latmat::make_rat(Int(int_in(-9, 9)), Int(int_in(1, 9))); }
    Rat nonzero_rational() {
        Rat q = rational();
        while (q == 0) q = rational();
        return q;
    }
};

// Random poset on up to max_n elements labeled e0, e1, ...: random arcs only
// from lower to higher declaration index, then transitive closure via build.
inline latmat::FinitePoset random_poset(Rng& rng, std::size_t max_n) {
    const std::size_t n = 1 + rng.below(max_n);
    std::vector<latmat::ElementId> ids;
    for (std::size_t i = 0; i < n; ++i) ids.push_back("e" + std::to_string(i));
    std::vector<std::pair<latmat::ElementId, latmat::ElementId>> rels;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng.below(3) == 0) rels.emplace_back(ids[i], ids[j]);
    return latmat::FinitePoset::build(ids, rels);
}

inline latmat::FinitePoset random_divisor_lattice(Rng& rng, Int& n_out) {
    n_out = Int(rng.int_in(2, 360));
    return latmat::divisor_poset(n_out);
}

inline latmat::PosetFunction random_function(Rng& rng, const latmat::FinitePoset& p) {
    latmat::PosetFunction f(p);
    for (std::size_t i = 0; i < p.size(); ++i) f.set(i, rng.rational());
    return f;
}

inline latmat::OrderedSubset random_subset(Rng& rng, const latmat::FinitePoset& p, std::size_t max_size) {
    const std::size_t want = 1 + rng.below(std::min(max_size, p.size()));
    std::vector<char> used(p.size(), 0);
    std::vector<std::size_t> picks;
    while (picks.size() < want) {
        std::size_t i = rng.below(p.size());
        if (!used[i]) {
            used[i] = 1;
            picks.push_back(i);
        }
    }
    return latmat::OrderedSubset::from_indices(p, std::move(picks));
}

}  // namespace testutil
