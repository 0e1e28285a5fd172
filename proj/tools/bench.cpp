// Times the OpenMP minor-enumeration kernels against the serial reference
// implementations on a mid-sized divisor lattice and checks that both produce
// identical exact results.

#include <chrono>
#include <cstdio>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "latmat/combinatorics.hpp"
#include "latmat/divisor.hpp"
#include "latmat/engine.hpp"
#include "latmat/kernels.hpp"
#include "latmat/psi.hpp"

using namespace latmat;

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

template <typename F>
std::pair<double, decltype(std::declval<F>()())> timed(F&& fn) {
    auto start = std::chrono::steady_clock::now();
    auto value = fn();
    return {ms_since(start), std::move(value)};
}

}  // namespace

int main() {
    // Divisor lattice of 2^3 * 3^3 * 5 * 7; X deliberately not join-closed so
    // the default basis grows past X itself.
    FinitePoset host = divisor_poset(Int(7560));
    OrderedSubset x = OrderedSubset::from_labels(
        host, {"2", "9", "12", "70", "105", "108"});
    PosetFunction f = PosetFunction::identity(host);

    engine::MatrixSpec spec(engine::MatrixKind::join, x, x, f);
    OrderedSubset basis = engine::default_basis(spec);
    PsiVector psi = psi_recursive(basis, f);

    ByteMatrix e(x.size(), basis.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (host.leq(x[i], basis[j])) e.at(i, j) = 1;

    const std::size_t n = x.size();
    const std::size_t m = basis.size();
    std::printf("bench: n=%zu m=%zu det-subsets=%s inverse-subsets=%s\n", n, m,
                to_string(binomial(m, n)).c_str(), to_string(binomial(m, n - 1)).c_str());
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (OpenMP disabled)\n");
#endif

    auto [serial_det_ms, serial_det] =
        timed([&] { return reference::cauchy_binet_sum(e, e, psi.values); });
    auto [parallel_det_ms, parallel_det] =
        timed([&] { return kernels::cauchy_binet_sum(e, e, psi.values); });
    bool det_equal = serial_det == parallel_det;

    auto [serial_inv_ms, serial_inv] =
        timed([&] { return reference::cofactor_inverse(e, e, psi.values, serial_det); });
    auto [parallel_inv_ms, parallel_inv] =
        timed([&] { return kernels::cofactor_inverse(e, e, psi.values, parallel_det); });
    bool inv_equal = serial_inv == parallel_inv;

    std::printf("%-24s %10s %12s %8s %6s\n", "kernel", "serial_ms", "parallel_ms", "speedup", "equal");
    std::printf("%-24s %10.1f %12.1f %7.2fx %6s\n", "cauchy-binet-det", serial_det_ms,
                parallel_det_ms, serial_det_ms / parallel_det_ms, det_equal ? "yes" : "NO");
    std::printf("%-24s %10.1f %12.1f %7.2fx %6s\n", "cofactor-inverse", serial_inv_ms,
                parallel_inv_ms, serial_inv_ms / parallel_inv_ms, inv_equal ? "yes" : "NO");
    std::printf("det: %s\n", to_string(serial_det).c_str());
    return det_equal && inv_equal ? 0 : 1;
}
