// AVX2 variants of the quadrature inner loops.  This translation unit is the
// only one compiled with -mavx2 -mfma; callers reach it through the runtime
// dispatch in kernels.cpp.

#include "umbral/kernels.hpp"

#include <immintrin.h>

#include <cmath>
#include <cstddef>

namespace umbral {

double poisson_pair_sum_avx2(const double* x, const double* w, std::size_t n,
                             const pair_sum_inputs& in) {
    const __m256d u = _mm256_set1_pd(in.u);
    const __m256d v1 = _mm256_set1_pd(in.v1);
    const __m256d v2 = _mm256_set1_pd(in.v2);
    const __m256d s1 = _mm256_set1_pd(in.s1);
    const __m256d s2 = _mm256_set1_pd(in.s2);
    const __m256d c12 = _mm256_set1_pd(in.c1 * in.c2);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d xv = _mm256_loadu_pd(x + i);
        __m256d wv = _mm256_loadu_pd(w + i);
        __m256d d2 = _mm256_sub_pd(xv, v2);
        __m256d d1 = _mm256_sub_pd(_mm256_sub_pd(u, xv), v1);
        __m256d q2 = _mm256_fmadd_pd(d2, d2, s2);
        __m256d q1 = _mm256_fmadd_pd(d1, d1, s1);
        __m256d denom = _mm256_mul_pd(q1, q2);
        __m256d term = _mm256_div_pd(_mm256_mul_pd(wv, c12), denom);
        acc = _mm256_add_pd(acc, term);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) {
        double d2 = x[i] - in.v2;
        double d1 = (in.u - x[i]) - in.v1;
        total += w[i] * (in.c1 * in.c2) / ((d1 * d1 + in.s1) * (d2 * d2 + in.s2));
    }
    return total;
}

double weierstrass_pair_sum_avx2(const double* x, const double* w, std::size_t n,
                                 const pair_sum_inputs& in) {
    const __m256d u = _mm256_set1_pd(in.u);
    const __m256d v1 = _mm256_set1_pd(in.v1);
    const __m256d v2 = _mm256_set1_pd(in.v2);
    const __m256d ns1 = _mm256_set1_pd(-in.s1);
    const __m256d ns2 = _mm256_set1_pd(-in.s2);
    const double c = in.c1 * in.c2;
    double total = 0.0;
    std::size_t i = 0;
    alignas(32) double args[4];
    for (; i + 4 <= n; i += 4) {
        __m256d xv = _mm256_loadu_pd(x + i);
        __m256d d2 = _mm256_sub_pd(xv, v2);
        __m256d d1 = _mm256_sub_pd(_mm256_sub_pd(u, xv), v1);
        // exponents of both factors combine into one exp per node
        __m256d e = _mm256_mul_pd(_mm256_mul_pd(d2, d2), ns2);
        e = _mm256_fmadd_pd(_mm256_mul_pd(d1, d1), ns1, e);
        _mm256_store_pd(args, e);
        for (int j = 0; j < 4; ++j)
            total += w[i + static_cast<std::size_t>(j)] * c * std::exp(args[j]);
    }
    for (; i < n; ++i) {
        double d2 = x[i] - in.v2;
        double d1 = (in.u - x[i]) - in.v1;
        total += w[i] * c * std::exp(-(d2 * d2) * in.s2 - (d1 * d1) * in.s1);
    }
    return total;
}

} // namespace umbral
