#pragma once

#include <cstddef>
#include <vector>

#include "latmat/rational.hpp"

namespace latmat {

Int binomial(std::size_t m, std::size_t n);

// Lexicographic enumeration of strictly increasing index tuples in [0, m).
// first_combination(0) is the empty tuple, of which there is exactly one.
std::vector<std::size_t> first_combination(std::size_t n);
bool next_combination(std::vector<std::size_t>& c, std::size_t m);

}  // namespace latmat
