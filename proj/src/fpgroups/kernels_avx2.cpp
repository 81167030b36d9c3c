#include <immintrin.h>

#include "modrep/kernels.hpp"

namespace modrep::kernels {

namespace {

// Exact in double: the products stay below 2^52.
__attribute__((target("avx2,fma"))) void axpy_avx2_impl(std::uint32_t* dst, const std::uint32_t* src,
                                                        std::uint32_t c, std::uint32_t m,
                                                        std::size_t len) {
    const __m256d vc = _mm256_set1_pd(static_cast<double>(c));
    const __m256d vm = _mm256_set1_pd(static_cast<double>(m));
    const __m256d vinv = _mm256_set1_pd(1.0 / static_cast<double>(m));
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= len; i += 4) {
        __m256d s = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(src + i)));
        __m256d d = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(dst + i)));
        __m256d x = _mm256_fmadd_pd(vc, s, d);
        __m256d q = _mm256_floor_pd(_mm256_mul_pd(x, vinv));
        __m256d r = _mm256_fnmadd_pd(q, vm, x);
        r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), vm));
        r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, vm, _CMP_GE_OQ), vm));
        _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i), _mm256_cvttpd_epi32(r));
    }
    if (i < len) axpy_mod_scalar(dst + i, src + i, c, m, len - i);
}

}  // namespace

AxpyFn axpy_mod_avx2() {
    __builtin_cpu_init();
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return axpy_avx2_impl;
    return nullptr;
}

}  // namespace modrep::kernels
