// Private: scalar reference kernels shared between translation units.
#ifndef SRMDP_KERNELS_IMPL_HPP
#define SRMDP_KERNELS_IMPL_HPP

#include "srmdp/kernels.hpp"

namespace srmdp::detail {

// P == 0 means runtime prime; P > 0 lets the compiler fold the modulus.
template <std::uint32_t P>
void scalar_acc_axpy(std::uint64_t* acc, std::uint32_t c, const std::uint32_t* x, std::size_t n) {
    if (c == 0) return;
    if (P == 2 || c == 1) {  // residues mod 2 leave only c == 1 here
        for (std::size_t i = 0; i < n; ++i) acc[i] += x[i];
    } else {
        const std::uint64_t cc = c;
        for (std::size_t i = 0; i < n; ++i) acc[i] += cc * x[i];
    }
}

template <std::uint32_t P>
void scalar_mod_reduce(std::uint32_t* dst, const std::uint64_t* src, std::size_t n, std::uint32_t p) {
    const std::uint64_t m = P ? P : p;
    if (m == 2) {
        for (std::size_t i = 0; i < n; ++i) dst[i] = static_cast<std::uint32_t>(src[i] & 1u);
    } else {
        for (std::size_t i = 0; i < n; ++i) dst[i] = static_cast<std::uint32_t>(src[i] % m);
    }
}

template <std::uint32_t P>
void scalar_add_mod(std::uint32_t* dst, const std::uint32_t* a, const std::uint32_t* b, std::size_t n,
                    std::uint32_t p) {
    const std::uint32_t m = P ? P : p;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t t = a[i] + b[i];
        dst[i] = t >= m ? t - m : t;
    }
}

template <std::uint32_t P>
void scalar_sub_mod(std::uint32_t* dst, const std::uint32_t* a, const std::uint32_t* b, std::size_t n,
                    std::uint32_t p) {
    const std::uint32_t m = P ? P : p;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t t = a[i] + m - b[i];
        dst[i] = t >= m ? t - m : t;
    }
}

template <std::uint32_t P>
void scalar_submul_mod(std::uint32_t* dst, std::uint32_t c, const std::uint32_t* x, std::size_t n,
                       std::uint32_t p) {
    const std::uint32_t m = P ? P : p;
    if (m == 2) {
        if (c == 0) return;
        for (std::size_t i = 0; i < n; ++i) dst[i] ^= x[i];
        return;
    }
    const std::uint64_t nc = m - c % m;  // dst - c*x == dst + (m-c)*x (mod m)
    for (std::size_t i = 0; i < n; ++i) {
        dst[i] = static_cast<std::uint32_t>((dst[i] + nc * x[i]) % m);
    }
}

template <std::uint32_t P>
void scalar_scale_mod(std::uint32_t* dst, std::uint32_t c, const std::uint32_t* x, std::size_t n,
                      std::uint32_t p) {
    const std::uint64_t m = P ? P : p;
    if (c == 0) {
        for (std::size_t i = 0; i < n; ++i) dst[i] = 0;
    } else if (c == 1) {
        for (std::size_t i = 0; i < n; ++i) dst[i] = x[i];
    } else {
        const std::uint64_t cc = c;
        for (std::size_t i = 0; i < n; ++i) dst[i] = static_cast<std::uint32_t>(cc * x[i] % m);
    }
}

const KernelSet* scalar_set_for(std::uint32_t p);

#if defined(SRMDP_BUILD_AVX2)
const KernelSet* avx2_set_for(std::uint32_t p);
#endif
#if defined(SRMDP_BUILD_NEON)
const KernelSet* neon_set_for(std::uint32_t p);
#endif

}  // namespace srmdp::detail

#endif
