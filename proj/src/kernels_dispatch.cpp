#include <cstdlib>
#include <cstring>
#include <string>

#include "kernels_impl.hpp"
#include "srmdp/errors.hpp"

namespace srmdp {

namespace {

enum class Forced { none, scalar, avx2, neon };

Forced forced_variant() {
    const char* env = std::getenv("SRMDP_KERNELS");
    if (!env || *env == '\0') return Forced::none;
    if (std::strcmp(env, "scalar") == 0) return Forced::scalar;
    if (std::strcmp(env, "avx2") == 0) return Forced::avx2;
    if (std::strcmp(env, "neon") == 0) return Forced::neon;
    throw ConfigError("SRMDP_KERNELS must be one of scalar, avx2, neon (got \"" +
                      std::string(env) + "\")");
}

#if defined(SRMDP_BUILD_AVX2)
bool cpu_has_avx2() { return __builtin_cpu_supports("avx2") != 0; }
#endif

bool avx2_available() {
#if defined(SRMDP_BUILD_AVX2)
    return cpu_has_avx2();
#else
    return false;
#endif
}

bool neon_available() {
#if defined(SRMDP_BUILD_NEON)
    return true;
#else
    return false;
#endif
}

}  // namespace

const KernelSet& select_kernels(std::uint32_t p) {
    const Forced forced = forced_variant();
    if (forced == Forced::avx2 && !avx2_available())
        throw ConfigError("SRMDP_KERNELS=avx2 but AVX2 kernels are not available on this machine");
    if (forced == Forced::neon && !neon_available())
        throw ConfigError("SRMDP_KERNELS=neon but NEON kernels are not available on this machine");
    if (forced == Forced::scalar) return *detail::scalar_set_for(p);
#if defined(SRMDP_BUILD_AVX2)
    if (forced == Forced::avx2 || (forced == Forced::none && cpu_has_avx2()))
        return *detail::avx2_set_for(p);
#endif
#if defined(SRMDP_BUILD_NEON)
    if (forced == Forced::neon || forced == Forced::none) return *detail::neon_set_for(p);
#endif
    return *detail::scalar_set_for(p);
}

std::vector<const KernelSet*> available_kernel_sets(std::uint32_t p) {
    std::vector<const KernelSet*> out{detail::scalar_set_for(p)};
#if defined(SRMDP_BUILD_AVX2)
    if (cpu_has_avx2()) out.push_back(detail::avx2_set_for(p));
#endif
#if defined(SRMDP_BUILD_NEON)
    out.push_back(detail::neon_set_for(p));
#endif
    return out;
}

}  // namespace srmdp
