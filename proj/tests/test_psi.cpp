#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "latmat/divisor.hpp"
#include "latmat/error.hpp"
#include "latmat/psi.hpp"

using namespace latmat;

namespace {

std::vector<Rat> rats(std::initializer_list<long> xs) {
    std::vector<Rat> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("recursion on a chain") {
    std::vector<Int> vals{Int(1), Int(2), Int(3)};
    FinitePoset p = chain_poset(vals);
    auto d = OrderedSubset::from_labels(p, p.carrier());
    PosetFunction f = PosetFunction::identity(p);
    PsiVector psi = psi_recursive(d, f);
    CHECK(psi.values == rats({-1, -1, 3}));
    CHECK(psi.method == PsiMethod::recursive);
    CHECK(psi_reconstructs(psi, f));
}

TEST_CASE("singleton basis returns f itself") {
    FinitePoset p = divisor_poset(Int(6));
    auto d = OrderedSubset::from_labels(p, {"6"});
    PosetFunction f = PosetFunction::identity(p);
    CHECK(psi_recursive(d, f).values == rats({6}));
    CHECK(psi_mobius(d, f).values == rats({6}));
    CHECK(psi_join_closed(d, f).values == rats({6}));
    CHECK(psi_upper_closed(d, f).values == rats({6}));
}

TEST_CASE("divisors of 6 under the identity function") {
    FinitePoset p = divisor_poset(Int(6));
    auto d = OrderedSubset::from_labels(p, p.carrier());
    PosetFunction f = PosetFunction::identity(p);
    PsiVector psi = psi_recursive(d, f);
    CHECK(psi.values == rats({2, -4, -3, 6}));
    CHECK(psi_mobius(d, f).values == psi.values);
    CHECK(psi_dirichlet(d, f).values == psi.values);
}

TEST_CASE("join-closed form agrees on {2,3,6} inside the divisors of 12") {
    FinitePoset p = divisor_poset(Int(12));
    auto d = OrderedSubset::from_labels(p, {"2", "3", "6"});
    PosetFunction f = PosetFunction::identity(p);
    PsiVector expect = psi_mobius(d, f);
    CHECK(psi_join_closed(d, f).values == expect.values);
    CHECK(psi_join_closed(d, f, MobiusVariant::generated_sublattice).values == expect.values);
    CHECK(psi_upper_closed(d, f).values == expect.values);
}

TEST_CASE("join-closed form when the interval union is strictly larger") {
    // D = {2, 12} is join-closed in the divisors of 12, but P_D = {2,4,6,12}.
    // The double sum over P_D must still produce the same masses:
    // psi(12) = 12 and psi(2) = 2 - 12 = -10 (checked by hand via the
    // inner Möbius sums over z in {2,4,6}: 4 - 8 - 6 = -10).
    FinitePoset p = divisor_poset(Int(12));
    auto d = OrderedSubset::from_labels(p, {"2", "12"});
    CHECK(upper_part(d).labels() == std::vector<ElementId>{"2", "4", "6", "12"});
    PosetFunction f = PosetFunction::identity(p);
    PsiVector via_union = psi_join_closed(d, f);
    CHECK(via_union.values == rats({-10, 12}));
    CHECK(psi_mobius(d, f).values == via_union.values);
    CHECK(psi_recursive(d, f).values == via_union.values);
}

TEST_CASE("chain forms agree") {
    std::vector<Int> vals{Int(4), Int(5), Int(6)};
    FinitePoset p = chain_poset(vals);
    auto d = OrderedSubset::from_labels(p, p.carrier());
    PosetFunction f = PosetFunction::linear_shift(p, make_rat(Int(1), Int(2)));
    PsiVector rec = psi_recursive(d, f);
    CHECK(psi_mobius(d, f).values == rec.values);
    CHECK(psi_join_closed(d, f).values == rec.values);
    CHECK(psi_upper_closed(d, f).values == rec.values);
}

TEST_CASE("hypothesis violations are reported") {
    FinitePoset p = divisor_poset(Int(12));
    PosetFunction f = PosetFunction::identity(p);
    auto not_join_closed = OrderedSubset::from_labels(p, {"2", "3"});
    CHECK_THROWS_AS(psi_join_closed(not_join_closed, f), HypothesisError);
    CHECK_THROWS_AS(psi_upper_closed(not_join_closed, f), HypothesisError);
    auto not_multiple_closed = OrderedSubset::from_labels(p, {"2", "12"});  // 4, 6 missing
    CHECK_THROWS_AS(psi_dirichlet(not_multiple_closed, f), HypothesisError);
}

TEST_CASE("missing function values are reported") {
    FinitePoset p = divisor_poset(Int(6));
    auto d = OrderedSubset::from_labels(p, p.carrier());
    PosetFunction partial(p);
    partial.set("1", Rat(1));
    CHECK_THROWS_AS(psi_recursive(d, partial), MissingValueError);
}

TEST_CASE("random cross-form agreement and reconstruction") {
    testutil::Rng rng(4242);
    for (int rep = 0; rep < 120; ++rep) {
        FinitePoset p = testutil::random_poset(rng, 8);
        PosetFunction f = testutil::random_function(rng, p);
        auto d = testutil::random_subset(rng, p, p.size());

        PsiVector rec = psi_recursive(d, f);
        CHECK(psi_mobius(d, f).values == rec.values);
        CHECK(psi_reconstructs(rec, f));
    }
}

TEST_CASE("random closed-set forms agree on divisor lattices") {
    testutil::Rng rng(515);
    for (int rep = 0; rep < 40; ++rep) {
        Int n;
        FinitePoset p = testutil::random_divisor_lattice(rng, n);
        PosetFunction f = testutil::random_function(rng, p);

        auto dj = join_closure(testutil::random_subset(rng, p, 4));
        CHECK(psi_join_closed(dj, f).values == psi_mobius(dj, f).values);

        auto du = upper_part(testutil::random_subset(rng, p, 4));
        CHECK(psi_upper_closed(du, f).values == psi_recursive(du, f).values);

        std::vector<Int> seeds;
        auto picks = testutil::random_subset(rng, p, 3);
        for (std::size_t i : picks.indices()) seeds.push_back(label_value(p, i));
        std::vector<ElementId> ids;
        for (const Int& v : multiple_closure(seeds)) ids.push_back(to_string(v));
        auto dm = OrderedSubset::from_labels(p, ids);
        CHECK(psi_dirichlet(dm, f).values == psi_mobius(dm, f).values);
    }
}

TEST_CASE("permutation-consistent determinism") {
    // Swapping function values between two incomparable basis elements
    // permutes the two mass values the same way.
    FinitePoset p = divisor_poset(Int(6));
    auto d = OrderedSubset::from_labels(p, p.carrier());
    PosetFunction f(p);
    f.set("1", Rat(10));
    f.set("2", Rat(3));
    f.set("3", Rat(5));
    f.set("6", Rat(7));
    PosetFunction g(p);
    g.set("1", Rat(10));
    g.set("2", Rat(5));
    g.set("3", Rat(3));
    g.set("6", Rat(7));
    PsiVector pf = psi_recursive(d, f);
    PsiVector pg = psi_recursive(d, g);
    CHECK(pf.values[d.position_of(p.index_of("2")).value()] ==
          pg.values[d.position_of(p.index_of("3")).value()]);
    CHECK(pf.values[d.position_of(p.index_of("1")).value()] ==
          pg.values[d.position_of(p.index_of("1")).value()]);
}
