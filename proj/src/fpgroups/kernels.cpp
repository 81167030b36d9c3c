#include "modrep/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace modrep::kernels {

void axpy_mod_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::uint32_t m,
                     std::size_t len) {
    const std::uint64_t cc = c;
    for (std::size_t i = 0; i < len; ++i)
        dst[i] = static_cast<std::uint32_t>((dst[i] + cc * src[i]) % m);
}

#if !defined(MODREP_HAVE_AVX2)
AxpyFn axpy_mod_avx2() { return nullptr; }
#endif
#if !defined(__aarch64__)
AxpyFn axpy_mod_neon() { return nullptr; }
#endif

namespace {
struct Choice {
    AxpyFn fn;
    const char* name;
};

Choice choose() {
    const char* env = std::getenv("MODREP_KERNEL");
    bool force_scalar = env && std::strcmp(env, "scalar") == 0;
    if (!force_scalar) {
        if (AxpyFn f = axpy_mod_avx2()) return {f, "avx2"};
        if (AxpyFn f = axpy_mod_neon()) return {f, "neon"};
    }
    return {axpy_mod_scalar, "scalar"};
}

const Choice& choice() {
    static const Choice c = choose();
    return c;
}
}  // namespace

AxpyFn axpy_mod() { return choice().fn; }
const char* active_kernel_name() { return choice().name; }

}  // namespace modrep::kernels
