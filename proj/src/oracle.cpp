#include "latmat/oracle.hpp"

#include <utility>
#include <vector>

#include "latmat/error.hpp"

namespace latmat::oracle {

Rat det(const RatMatrix& m) {
    if (!m.square()) throw NotSquareError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Rat(1);

    std::vector<Rat> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m.at(i, j);

    int sign = 1;
    Rat prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r * n + k] == 0) ++r;
            if (r == n) return Rat(0);
            for (std::size_t j = k; j < n; ++j) std::swap(a[k * n + j], a[r * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
            a[i * n + k] = 0;
        }
        prev = a[k * n + k];
    }
    Rat d = a[n * n - 1];
    return sign < 0 ? Rat(-d) : d;
}

Rat det_cofactor(const RatMatrix& m) {
    if (!m.square()) throw NotSquareError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Rat(1);
    if (n == 1) return m.at(0, 0);
    Rat acc(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        RatMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        Rat term = m.at(0, j) * det_cofactor(minor);
        if (j % 2) term = -term;
        acc += term;
    }
    return acc;
}

RatMatrix inverse(const RatMatrix& m) {
    if (!m.square()) throw NotSquareError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix a = m;
    RatMatrix inv = RatMatrix::identity(n);

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t r = k;
        while (r < n && a.at(r, k) == 0) ++r;
        if (r == n) throw SingularMatrixError("matrix is singular");
        if (r != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(k, j), a.at(r, j));
                std::swap(inv.at(k, j), inv.at(r, j));
            }
        }
        const Rat pivot = a.at(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a.at(k, j) /= pivot;
            inv.at(k, j) /= pivot;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a.at(i, k) == 0) continue;
            const Rat factor = a.at(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) -= factor * a.at(k, j);
                inv.at(i, j) -= factor * inv.at(k, j);
            }
        }
    }
    if (!identity_check(matmul(m, inv))) throw SingularMatrixError("inverse postcondition failed");
    return inv;
}

RatMatrix matmul(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("matmul dimension mismatch");
    RatMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rat& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

bool identity_check(const RatMatrix& m) {
    if (!m.square()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != Rat(i == j ? 1 : 0)) return false;
    return true;
}

}  // namespace latmat::oracle
