#include "latmat/kernels.hpp"

#include <cstdint>

#include "latmat/combinatorics.hpp"
#include "latmat/error.hpp"

namespace latmat {

namespace {

constexpr std::size_t kChunk = 4096;

Int bareiss_int_det(std::vector<Int>& s, std::size_t k) {
    if (k == 0) return Int(1);
    int sign = 1;
    Int prev(1), tmp;
    for (std::size_t kk = 0; kk + 1 < k; ++kk) {
        if (s[kk * k + kk] == 0) {
            std::size_t r = kk + 1;
            while (r < k && s[r * k + kk] == 0) ++r;
            if (r == k) return Int(0);
            for (std::size_t j = kk; j < k; ++j) std::swap(s[kk * k + j], s[r * k + j]);
            sign = -sign;
        }
        for (std::size_t i = kk + 1; i < k; ++i) {
            for (std::size_t j = kk + 1; j < k; ++j) {
                tmp = s[i * k + j] * s[kk * k + kk] - s[i * k + kk] * s[kk * k + j];
                mpz_divexact(s[i * k + j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
            s[i * k + kk] = 0;
        }
        prev = s[kk * k + kk];
    }
    Int d = s[k * k - 1];
    return sign < 0 ? Int(-d) : d;
}

Int minor_det_scratch(const ByteMatrix& m, std::span<const std::size_t> cols, std::ptrdiff_t skip_row,
                      std::vector<Int>& scratch) {
    const std::size_t k = cols.size();
    scratch.resize(k * k);
    std::size_t r = 0;
    for (std::size_t i = 0; i < m.rows; ++i) {
        if (static_cast<std::ptrdiff_t>(i) == skip_row) continue;
        for (std::size_t c = 0; c < k; ++c) scratch[r * k + c] = m.at(i, cols[c]);
        ++r;
    }
    if (r != k) throw DimensionError("minor is not square");
    return bareiss_int_det(scratch, k);
}

// Fills `flat` with up to kChunk combinations of size n, each a block of n
// indices. Returns the number filled; `more` tracks whether the enumeration
// is exhausted.
std::size_t fill_chunk(std::vector<std::size_t>& combo, std::size_t m, bool& more,
                       std::vector<std::size_t>& flat) {
    const std::size_t n = combo.size();
    std::size_t count = 0;
    while (more && count < kChunk) {
        for (std::size_t j = 0; j < n; ++j) flat[count * n + j] = combo[j];
        ++count;
        more = next_combination(combo, m);
    }
    return count;
}

Rat psi_product(std::span<const Rat> psi, const std::size_t* cols, std::size_t n) {
    Rat p(1);
    for (std::size_t j = 0; j < n; ++j) p *= psi[cols[j]];
    return p;
}

}  // namespace

Int minor_det(const ByteMatrix& m, std::span<const std::size_t> cols, std::ptrdiff_t skip_row) {
    std::vector<Int> scratch;
    return minor_det_scratch(m, cols, skip_row, scratch);
}

namespace kernels {

Rat cauchy_binet_sum(const ByteMatrix& ex, const ByteMatrix& ey, std::span<const Rat> psi) {
    const std::size_t n = ex.rows;
    const std::size_t m = ex.cols;
    if (ey.rows != n || ey.cols != m || psi.size() != m)
        throw DimensionError("incidence factors disagree on the basis size");
    if (n > m) return Rat(0);

    Rat acc(0);
    std::vector<std::size_t> combo = first_combination(n);
    std::vector<std::size_t> flat(kChunk * std::max<std::size_t>(n, 1));
    bool more = true;
    while (more) {
        const std::size_t count = fill_chunk(combo, m, more, flat);
        if (count == 0) break;
#pragma omp parallel
        {
            Rat local(0);
            std::vector<Int> scratch;
#pragma omp for schedule(static) nowait
            for (long long c = 0; c < static_cast<long long>(count); ++c) {
                const std::size_t* cols = &flat[static_cast<std::size_t>(c) * n];
                std::span<const std::size_t> colspan(cols, n);
                Int dx = minor_det_scratch(ex, colspan, -1, scratch);
                if (dx == 0) continue;
                Int dy = minor_det_scratch(ey, colspan, -1, scratch);
                if (dy == 0) continue;
                local += Rat(dx * dy) * psi_product(psi, cols, n);
            }
#pragma omp critical(latmat_cb_sum)
            acc += local;
        }
    }
    return acc;
}

RatMatrix cofactor_inverse(const ByteMatrix& ex, const ByteMatrix& ey, std::span<const Rat> psi,
                           const Rat& det) {
    const std::size_t n = ex.rows;
    const std::size_t m = ex.cols;
    if (ey.rows != n || ey.cols != m || psi.size() != m)
        throw DimensionError("incidence factors disagree on the basis size");
    if (det == 0) throw SingularMatrixError("cofactor inverse of a singular matrix");
    if (n == 0) return RatMatrix(0, 0);
    const std::size_t r = n - 1;

    RatMatrix acc(n, n);
    std::vector<std::size_t> combo = first_combination(r);
    std::vector<std::size_t> flat(kChunk * std::max<std::size_t>(r, 1));
    std::vector<Rat> prod(kChunk);
    std::vector<Int> dx(kChunk * n), dy(kChunk * n);
    bool more = true;
    while (more) {
        const std::size_t count = fill_chunk(combo, m, more, flat);
        if (count == 0) break;
#pragma omp parallel
        {
            std::vector<Int> scratch;
#pragma omp for schedule(static)
            for (long long c = 0; c < static_cast<long long>(count); ++c) {
                const std::size_t ci = static_cast<std::size_t>(c);
                const std::size_t* cols = &flat[ci * r];
                std::span<const std::size_t> colspan(cols, r);
                prod[ci] = psi_product(psi, cols, r);
                for (std::size_t row = 0; row < n; ++row) {
                    dx[ci * n + row] = minor_det_scratch(ex, colspan, static_cast<std::ptrdiff_t>(row), scratch);
                    dy[ci * n + row] = minor_det_scratch(ey, colspan, static_cast<std::ptrdiff_t>(row), scratch);
                }
            }
#pragma omp for schedule(static)
            for (long long cell = 0; cell < static_cast<long long>(n * n); ++cell) {
                const std::size_t i = static_cast<std::size_t>(cell) / n;
                const std::size_t j = static_cast<std::size_t>(cell) % n;
                Rat sum(0);
                for (std::size_t ci = 0; ci < count; ++ci) {
                    if (prod[ci] == 0) continue;
                    Int w = dx[ci * n + j] * dy[ci * n + i];
                    if (w != 0) sum += Rat(w) * prod[ci];
                }
                acc.at(i, j) += sum;
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            acc.at(i, j) /= det;
            if ((i + j) % 2) acc.at(i, j) = -acc.at(i, j);
        }
    return acc;
}

}  // namespace kernels

namespace reference {

Rat cauchy_binet_sum(const ByteMatrix& ex, const ByteMatrix& ey, std::span<const Rat> psi) {
    const std::size_t n = ex.rows;
    const std::size_t m = ex.cols;
    if (ey.rows != n || ey.cols != m || psi.size() != m)
        throw DimensionError("incidence factors disagree on the basis size");
    if (n > m) return Rat(0);

    Rat acc(0);
    std::vector<std::size_t> combo = first_combination(n);
    bool more = true;
    while (more) {
        Rat term = Rat(minor_det(ex, combo)) * Rat(minor_det(ey, combo));
        if (term != 0) {
            for (std::size_t j = 0; j < n; ++j) term *= psi[combo[j]];
            acc += term;
        }
        more = next_combination(combo, m);
    }
    return acc;
}

RatMatrix cofactor_inverse(const ByteMatrix& ex, const ByteMatrix& ey, std::span<const Rat> psi,
                           const Rat& det) {
    const std::size_t n = ex.rows;
    const std::size_t m = ex.cols;
    if (det == 0) throw SingularMatrixError("cofactor inverse of a singular matrix");
    if (n == 0) return RatMatrix(0, 0);
    RatMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Rat sum(0);
            std::vector<std::size_t> combo = first_combination(n - 1);
            bool more = true;
            while (more) {
                Rat term = Rat(minor_det(ex, combo, static_cast<std::ptrdiff_t>(j))) *
                           Rat(minor_det(ey, combo, static_cast<std::ptrdiff_t>(i)));
                if (term != 0) {
                    for (std::size_t c = 0; c + 1 < n; ++c) term *= psi[combo[c]];
                    sum += term;
                }
                more = next_combination(combo, m);
            }
            if ((i + j) % 2) sum = -sum;
            b.at(i, j) = sum / det;
        }
    }
    return b;
}

}  // namespace reference

}  // namespace latmat
