#include "latmat/divisor.hpp"

#include <algorithm>

#include "latmat/error.hpp"

namespace latmat {

Int gcd_of_set(std::span<const Int> s) {
    if (s.empty()) throw EmptySetError("gcd of an empty set");
    Int g = s[0];
    for (std::size_t i = 1; i < s.size(); ++i) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s[i].get_mpz_t());
    return g;
}

Int lcm_of_set(std::span<const Int> s) {
    if (s.empty()) throw EmptySetError("lcm of an empty set");
    Int l = s[0];
    for (std::size_t i = 1; i < s.size(); ++i) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), s[i].get_mpz_t());
    return l;
}

std::vector<std::pair<Int, unsigned>> factorize(Int n) {
    if (n <= 0) throw ParseError("factorize needs a positive integer");
    std::vector<std::pair<Int, unsigned>> factors;
    Int p(2);
    while (p * p <= n) {
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            factors.emplace_back(p, e);
        }
        p += (p == 2) ? 1 : 2;
    }
    if (n > 1) factors.emplace_back(n, 1);
    return factors;
}

std::vector<Int> divisors_of(const Int& n) {
    std::vector<Int> divs{Int(1)};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t base = divs.size();
        Int pk(1);
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

int nt_mobius(const Int& n) {
    if (n <= 0) throw ParseError("mobius needs a positive integer");
    int sign = 1;
    for (const auto& [p, e] : factorize(n)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

std::vector<Int> multiple_closure(std::vector<Int> s) {
    if (s.empty()) throw EmptySetError("multiple closure of an empty set");
    const Int l = lcm_of_set(s);
    std::vector<Int> out;
    for (const Int& y : divisors_of(l)) {
        for (const Int& x : s) {
            if (y % x == 0) {
                out.push_back(y);
                break;
            }
        }
    }
    return out;
}

bool is_multiple_closed(const std::vector<Int>& s) {
    std::vector<Int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    return multiple_closure(sorted) == sorted;
}

bool is_lcm_closed(const std::vector<Int>& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i; j < s.size(); ++j) {
            Int l;
            mpz_lcm(l.get_mpz_t(), s[i].get_mpz_t(), s[j].get_mpz_t());
            if (std::find(s.begin(), s.end(), l) == s.end()) return false;
        }
    }
    return true;
}

void ArithmeticalFunctionValues::set(const Int& n, Rat value) { values_[n] = std::move(value); }

bool ArithmeticalFunctionValues::defined(const Int& n) const { return values_.count(n) != 0; }

const Rat& ArithmeticalFunctionValues::at(const Int& n) const {
    auto it = values_.find(n);
    if (it == values_.end()) throw MissingValueError("arithmetical function undefined at " + to_string(n));
    return it->second;
}

ArithmeticalFunctionValues ArithmeticalFunctionValues::identity_on(std::span<const Int> points) {
    ArithmeticalFunctionValues f;
    for (const Int& n : points) f.set(n, Rat(n));
    return f;
}

Rat dirichlet_psi(const std::function<Rat(const Int&)>& f, const Int& a, const Int& n) {
    Rat acc(0);
    for (const Int& d : divisors_of(n)) {
        int mu = nt_mobius(d);
        if (mu == 0) continue;
        Rat term = f(a * d);
        acc += (mu > 0) ? term : Rat(-term);
    }
    return acc;
}

Rat dirichlet_psi(const ArithmeticalFunctionValues& f, const Int& a, const Int& n) {
    return dirichlet_psi([&f](const Int& x) -> Rat { return f.at(x); }, a, n);
}

FinitePoset divisor_poset_on(std::vector<Int> carrier) {
    if (carrier.empty()) throw EmptySetError("divisor poset needs a nonempty carrier");
    std::sort(carrier.begin(), carrier.end());
    carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
    for (const Int& v : carrier)
        if (v <= 0) throw ParseError("divisor poset elements must be positive");
    const std::size_t n = carrier.size();
    std::vector<ElementId> labels(n);
    std::vector<char> leq(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        labels[i] = to_string(carrier[i]);
        for (std::size_t j = 0; j < n; ++j)
            if (carrier[j] % carrier[i] == 0) leq[i * n + j] = 1;
    }
    return FinitePoset::from_leq(std::move(labels), std::move(leq));
}

FinitePoset divisor_poset(const Int& n) { return divisor_poset_on(divisors_of(n)); }

FinitePoset divisor_poset_containing(std::span<const Int> s) {
    return divisor_poset(lcm_of_set(s));
}

FinitePoset chain_poset(std::span<const Int> values) {
    if (values.empty()) throw EmptySetError("chain needs at least one value");
    std::vector<Int> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1]) throw DuplicateElementError("repeated chain value " + to_string(sorted[i]));
    const std::size_t n = sorted.size();
    std::vector<ElementId> labels(n);
    std::vector<char> leq(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        labels[i] = to_string(sorted[i]);
        for (std::size_t j = i; j < n; ++j) leq[i * n + j] = 1;
    }
    return FinitePoset::from_leq(std::move(labels), std::move(leq));
}

Int label_value(const FinitePoset& p, std::size_t idx) { return parse_integer(p.label(idx)); }

}  // namespace latmat
