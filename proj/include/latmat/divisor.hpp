#pragma once

#include <functional>
#include <map>
#include <span>
#include <vector>

#include "latmat/poset.hpp"
#include "latmat/rational.hpp"

namespace latmat {

Int gcd_of_set(std::span<const Int> s);  // EmptySetError on empty input
Int lcm_of_set(std::span<const Int> s);

// Trial division; exact, intended for inputs whose prime factors are modest.
std::vector<std::pair<Int, unsigned>> factorize(Int n);
std::vector<Int> divisors_of(const Int& n);  // sorted ascending

// Number-theoretic Möbius function: 0 on squareful n, else (-1)^#prime factors.
int nt_mobius(const Int& n);

// M_S: every divisor of lcm S that is a multiple of some member. Sorted.
std::vector<Int> multiple_closure(std::vector<Int> s);
bool is_multiple_closed(const std::vector<Int>& s);
bool is_lcm_closed(const std::vector<Int>& s);

// Total-on-demand map from positive integers to exact rationals.
class ArithmeticalFunctionValues {
public:
    void set(const Int& n, Rat value);
    bool defined(const Int& n) const;
    const Rat& at(const Int& n) const;  // MissingValueError

    static ArithmeticalFunctionValues identity_on(std::span<const Int> points);

private:
    std::map<Int, Rat> values_;
};

// The convolution value [zeta * (f_a mu)](n) = sum over d | n of f(a*d) mu(d).
Rat dirichlet_psi(const std::function<Rat(const Int&)>& f, const Int& a, const Int& n);
Rat dirichlet_psi(const ArithmeticalFunctionValues& f, const Int& a, const Int& n);

// Divisor lattices: positive integers ordered by divisibility, carrier listed
// ascending (a linear extension of divisibility).
FinitePoset divisor_poset(const Int& n);                        // all divisors of n
FinitePoset divisor_poset_containing(std::span<const Int> s);   // all divisors of lcm S
FinitePoset divisor_poset_on(std::vector<Int> carrier);         // exactly the given integers

// Chain x1 < x2 < ... < xn under the natural integer order.
FinitePoset chain_poset(std::span<const Int> values);

// Parse an integer-labeled carrier element back to its value.
Int label_value(const FinitePoset& p, std::size_t idx);

}  // namespace latmat
