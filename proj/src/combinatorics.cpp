#include "latmat/combinatorics.hpp"

namespace latmat {

Int binomial(std::size_t m, std::size_t n) {
    if (n > m) return 0;
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(n));
    return out;
}

std::vector<std::size_t> first_combination(std::size_t n) {
    std::vector<std::size_t> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = i;
    return c;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t m) {
    const std::size_t n = c.size();
    if (n == 0) return false;
    std::size_t i = n;
    while (i-- > 0) {
        if (c[i] + (n - i) < m) {
            ++c[i];
            for (std::size_t j = i + 1; j < n; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace latmat
