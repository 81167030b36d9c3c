#include "modrep/kernels.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>

namespace modrep::kernels {

namespace {

void axpy_neon_impl(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::uint32_t m,
                    std::size_t len) {
    const float64x2_t vc = vdupq_n_f64(static_cast<double>(c));
    const float64x2_t vm = vdupq_n_f64(static_cast<double>(m));
    const float64x2_t vinv = vdupq_n_f64(1.0 / static_cast<double>(m));
    std::size_t i = 0;
    for (; i + 2 <= len; i += 2) {
        float64x2_t s = vcvtq_f64_u64(vmovl_u32(vld1_u32(src + i)));
        float64x2_t d = vcvtq_f64_u64(vmovl_u32(vld1_u32(dst + i)));
        float64x2_t x = vfmaq_f64(d, vc, s);
        float64x2_t q = vrndmq_f64(vmulq_f64(x, vinv));
        float64x2_t r = vfmsq_f64(x, q, vm);
        uint64x2_t neg = vcltq_f64(r, vdupq_n_f64(0.0));
        r = vaddq_f64(r, vreinterpretq_f64_u64(vandq_u64(neg, vreinterpretq_u64_f64(vm))));
        uint64x2_t big = vcgeq_f64(r, vm);
        r = vsubq_f64(r, vreinterpretq_f64_u64(vandq_u64(big, vreinterpretq_u64_f64(vm))));
        vst1_u32(dst + i, vmovn_u64(vcvtq_u64_f64(r)));
    }
    if (i < len) axpy_mod_scalar(dst + i, src + i, c, m, len - i);
}

}  // namespace

AxpyFn axpy_mod_neon() { return axpy_neon_impl; }

}  // namespace modrep::kernels
#endif
