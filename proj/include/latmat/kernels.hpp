#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "latmat/matrix.hpp"
#include "latmat/rational.hpp"

namespace latmat {

// Compact 0/1 incidence matrix used by the minor-enumeration kernels.
struct ByteMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<signed char> a;

    ByteMatrix() = default;
    ByteMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
    signed char& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    signed char at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// Exact determinant of the square minor picked by `cols` (and, if skip_row is
// nonnegative, by dropping that row). Fraction-free integer elimination.
Int minor_det(const ByteMatrix& m, std::span<const std::size_t> cols, std::ptrdiff_t skip_row = -1);

namespace kernels {

/*
 * OpenMP-parallel minor-enumeration kernels. Subset terms are independent
 * and exact, so any evaluation order produces bit-identical results; the
 * serial counterparts in latmat::reference are kept for testing and for the
 * benchmark target.
 */

// Sum over all size-n column subsets K of det(EX[:,K]) * det(EY[:,K]) *
// product of psi over K. Returns 0 when EX has more rows than columns.
Rat cauchy_binet_sum(const ByteMatrix& ex, const ByteMatrix& ey, std::span<const Rat> psi);

// Cofactor grid: b_ij = (-1)^(i+j)/det * sum over size-(n-1) column subsets
// of det(EX minus row j) * det(EY minus row i) * psi product.
RatMatrix cofactor_inverse(const ByteMatrix& ex, const ByteMatrix& ey, std::span<const Rat> psi,
                           const Rat& det);

}  // namespace kernels

namespace reference {

// Straightforward single-threaded versions of the kernels above.
Rat cauchy_binet_sum(const ByteMatrix& ex, const ByteMatrix& ey, std::span<const Rat> psi);
RatMatrix cofactor_inverse(const ByteMatrix& ex, const ByteMatrix& ey, std::span<const Rat> psi,
                           const Rat& det);

}  // namespace reference

}  // namespace latmat
