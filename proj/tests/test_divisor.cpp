#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "latmat/divisor.hpp"
#include "latmat/error.hpp"

using namespace latmat;

namespace {
std::vector<Int> ints(std::initializer_list<long> xs) {
    std::vector<Int> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}
}  // namespace

TEST_CASE("gcd and lcm of sets") {
    auto s = ints({2, 3, 4});
    CHECK(lcm_of_set(s) == 12);
    auto one = ints({42});
    CHECK(lcm_of_set(one) == 42);
    CHECK(gcd_of_set(one) == 42);
    auto t = ints({6, 10, 15});
    CHECK(lcm_of_set(t) == 30);
    CHECK(gcd_of_set(t) == 1);
    std::vector<Int> empty;
    CHECK_THROWS_AS(lcm_of_set(empty), EmptySetError);
    CHECK_THROWS_AS(gcd_of_set(empty), EmptySetError);
}

TEST_CASE("factorization and divisor enumeration") {
    auto f = factorize(Int(360));
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<Int, unsigned>{Int(2), 3u});
    CHECK(f[1] == std::pair<Int, unsigned>{Int(3), 2u});
    CHECK(f[2] == std::pair<Int, unsigned>{Int(5), 1u});
    CHECK(divisors_of(Int(12)) == ints({1, 2, 3, 4, 6, 12}));
    CHECK(divisors_of(Int(1)) == ints({1}));
}

TEST_CASE("number-theoretic mobius") {
    CHECK(nt_mobius(Int(1)) == 1);
    CHECK(nt_mobius(Int(6)) == 1);
    CHECK(nt_mobius(Int(12)) == 0);
    CHECK(nt_mobius(Int(30)) == -1);
}

TEST_CASE("multiple closure") {
    CHECK(multiple_closure(ints({2, 3})) == ints({2, 3, 6}));
    auto closed = ints({1, 2, 3, 4, 6, 12});
    CHECK(multiple_closure(closed) == closed);
    CHECK(is_multiple_closed(closed));
    CHECK(multiple_closure(ints({12})) == ints({12}));
    CHECK_FALSE(is_multiple_closed(ints({2, 3})));
}

TEST_CASE("lcm-closed predicate") {
    CHECK(is_lcm_closed(ints({2, 3, 6})));
    CHECK_FALSE(is_lcm_closed(ints({2, 3})));
}

TEST_CASE("multiple-closed sets are lcm-closed") {
    testutil::Rng rng(13);
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<Int> seed;
        const std::size_t k = 1 + rng.below(3);
        for (std::size_t i = 0; i < k; ++i) seed.emplace_back(rng.int_in(1, 60));
        std::vector<Int> closed = multiple_closure(seed);
        CHECK(is_multiple_closed(closed));
        CHECK(is_lcm_closed(closed));
    }
}

TEST_CASE("dirichlet convolution values") {
    auto identity = [](const Int& n) { return Rat(n); };
    CHECK(dirichlet_psi(identity, Int(1), Int(6)) == 2);
    CHECK(dirichlet_psi(identity, Int(2), Int(6)) == 4);
    CHECK(dirichlet_psi(identity, Int(7), Int(1)) == 7);

    ArithmeticalFunctionValues sparse;
    sparse.set(Int(3), Rat(1));
    CHECK_THROWS_AS(dirichlet_psi(sparse, Int(3), Int(2)), MissingValueError);
}

TEST_CASE("divisor poset construction") {
    FinitePoset p = divisor_poset(Int(12));
    CHECK(p.size() == 6);
    CHECK(p.leq("2", "12"));
    CHECK_FALSE(p.leq("4", "6"));
    CHECK_THROWS_AS(divisor_poset_on({Int(0)}), ParseError);
    CHECK(label_value(p, p.index_of("12")) == 12);
}

TEST_CASE("chain poset construction") {
    auto vals = ints({-3, 0, 7});
    FinitePoset p = chain_poset(vals);
    CHECK(p.carrier() == std::vector<ElementId>{"-3", "0", "7"});
    CHECK(p.leq("-3", "7"));
    CHECK_THROWS_AS(chain_poset(ints({1, 1})), DuplicateElementError);
}

TEST_CASE("rational parsing is strict") {
    CHECK(parse_rational("-2/4") == make_rat(Int(-1), Int(2)));
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(parse_rational("0.5"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational(" 1"), ParseError);
    CHECK_THROWS_AS(parse_positive_integer("-3"), ParseError);
}
