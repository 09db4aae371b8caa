// Compiled with -mavx2 -mfma; only dispatched to on CPUs that support both.

#include "lcabp/kernels.hpp"

#if defined(LCABP_HAVE_AVX2)

#include <immintrin.h>

#include <algorithm>
#include <cmath>

namespace lcabp::kernels {
namespace {

const __m256d kSignMask = _mm256_set1_pd(-0.0);

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

inline double hmax(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_max_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_max_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vy = _mm256_loadu_pd(y + i);
        vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
        _mm256_storeu_pd(y + i, vy);
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    __m256d acc2 = _mm256_setzero_pd();
    __m256d acc3 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
        acc2 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 8), _mm256_loadu_pd(y + i + 8), acc2);
        acc3 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 12), _mm256_loadu_pd(y + i + 12), acc3);
    }
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    }
    double result = hsum(_mm256_add_pd(_mm256_add_pd(acc0, acc1), _mm256_add_pd(acc2, acc3)));
    for (; i < n; ++i) result += x[i] * y[i];
    return result;
}

double nrm2sq_avx2(const double* x, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256d v0 = _mm256_loadu_pd(x + i);
        __m256d v1 = _mm256_loadu_pd(x + i + 4);
        acc0 = _mm256_fmadd_pd(v0, v0, acc0);
        acc1 = _mm256_fmadd_pd(v1, v1, acc1);
    }
    for (; i + 4 <= n; i += 4) {
        __m256d v = _mm256_loadu_pd(x + i);
        acc0 = _mm256_fmadd_pd(v, v, acc0);
    }
    double result = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) result += x[i] * x[i];
    return result;
}

double max_abs_avx2(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_max_pd(acc, _mm256_andnot_pd(kSignMask, _mm256_loadu_pd(x + i)));
    }
    double result = hmax(acc);
    for (; i < n; ++i) result = std::max(result, std::fabs(x[i]));
    return result;
}

double max_abs_diff_avx2(const double* x, const double* y, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
        acc = _mm256_max_pd(acc, _mm256_andnot_pd(kSignMask, d));
    }
    double result = hmax(acc);
    for (; i < n; ++i) result = std::max(result, std::fabs(x[i] - y[i]));
    return result;
}

void soft_threshold_avx2(const double* u, double kappa, double* out, std::size_t n) {
    const __m256d vk = _mm256_set1_pd(kappa);
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v = _mm256_loadu_pd(u + i);
        __m256d mag = _mm256_max_pd(_mm256_sub_pd(_mm256_andnot_pd(kSignMask, v), vk), zero);
        _mm256_storeu_pd(out + i, _mm256_or_pd(mag, _mm256_and_pd(v, kSignMask)));
    }
    for (; i < n; ++i) out[i] = std::copysign(std::max(std::fabs(u[i]) - kappa, 0.0), u[i]);
}

void clamp_box_avx2(const double* u, double kappa, double* out, std::size_t n) {
    const __m256d vk = _mm256_set1_pd(kappa);
    const __m256d vmk = _mm256_set1_pd(-kappa);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(out + i, _mm256_min_pd(_mm256_max_pd(_mm256_loadu_pd(u + i), vmk), vk));
    }
    for (; i < n; ++i) out[i] = std::min(std::max(u[i], -kappa), kappa);
}

void matvec_avx2(const double* a, std::size_t m, std::size_t n, const double* x, double* y) {
    for (std::size_t i = 0; i < m; ++i) y[i] = dot_avx2(a + i * n, x, n);
}

void matvec_t_avx2(const double* a, std::size_t m, std::size_t n, const double* x, double* y) {
    std::fill(y, y + n, 0.0);
    for (std::size_t i = 0; i < m; ++i) axpy_avx2(x[i], a + i * n, y, n);
}

}  // namespace

const Ops& ops_avx2() {
    static const Ops ops = {
        axpy_avx2,     dot_avx2,           nrm2sq_avx2,
        max_abs_avx2,  max_abs_diff_avx2,  soft_threshold_avx2,
        clamp_box_avx2, matvec_avx2,       matvec_t_avx2,
    };
    return ops;
}

}  // namespace lcabp::kernels

#endif  // LCABP_HAVE_AVX2
