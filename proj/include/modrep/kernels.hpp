#pragma once

#include <cstddef>
#include <cstdint>

namespace modrep::kernels {

// dst[i] = (dst[i] + c * src[i]) mod m, for 0 <= dst[i], src[i], c < m < 2^26.
using AxpyFn = void (*)(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c,
                        std::uint32_t m, std::size_t len);

void axpy_mod_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::uint32_t m,
                     std::size_t len);

// Null when the variant is not compiled in or the CPU lacks the instructions.
AxpyFn axpy_mod_avx2();
AxpyFn axpy_mod_neon();

// Selected once at startup; MODREP_KERNEL=scalar forces the reference kernel.
AxpyFn axpy_mod();
const char* active_kernel_name();

constexpr std::uint32_t kMaxModulus = 1u << 26;

}  // namespace modrep::kernels
