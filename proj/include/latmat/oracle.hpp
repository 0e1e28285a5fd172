#pragma once

#include "latmat/matrix.hpp"

namespace latmat::oracle {

/*
 * Ground-truth exact linear algebra, independent of all lattice structure.
 * Everything here is deliberately plain: fraction-free elimination for the
 * determinant, Gauss-Jordan for the inverse, first-nonzero pivoting.
 */

Rat det(const RatMatrix& m);           // NotSquareError
Rat det_cofactor(const RatMatrix& m);  // Laplace expansion; second det route
RatMatrix inverse(const RatMatrix& m); // SingularMatrixError, NotSquareError

RatMatrix matmul(const RatMatrix& a, const RatMatrix& b);  // DimensionError
bool identity_check(const RatMatrix& m);

}  // namespace latmat::oracle
