// AVX2 kernel variants.  This TU is the only one compiled with -mavx2; it must
// not be entered unless __builtin_cpu_supports("avx2") (see kernels_dispatch).
#include <immintrin.h>

#include "kernels_impl.hpp"

namespace srmdp::detail {

namespace {

void avx2_acc_axpy(std::uint64_t* acc, std::uint32_t c, const std::uint32_t* x, std::size_t n) {
    const __m256i vc = _mm256_set1_epi64x(c);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        __m256i lo = _mm256_cvtepu32_epi64(_mm256_castsi256_si128(vx));
        __m256i hi = _mm256_cvtepu32_epi64(_mm256_extracti128_si256(vx, 1));
        __m256i a0 = _mm256_loadu_si256(reinterpret_cast<__m256i*>(acc + i));
        __m256i a1 = _mm256_loadu_si256(reinterpret_cast<__m256i*>(acc + i + 4));
        // operands < 2^32, so the low-word product is the full 64-bit product
        a0 = _mm256_add_epi64(a0, _mm256_mul_epu32(lo, vc));
        a1 = _mm256_add_epi64(a1, _mm256_mul_epu32(hi, vc));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), a0);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i + 4), a1);
    }
    const std::uint64_t cc = c;
    for (; i < n; ++i) acc[i] += cc * x[i];
}

void avx2_acc_accumulate(std::uint64_t* acc, std::uint32_t c, const std::uint32_t* x, std::size_t n) {
    // p == 2 path: a residue c is 0 or 1
    if (c == 0) return;
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        __m256i lo = _mm256_cvtepu32_epi64(_mm256_castsi256_si128(vx));
        __m256i hi = _mm256_cvtepu32_epi64(_mm256_extracti128_si256(vx, 1));
        __m256i a0 = _mm256_loadu_si256(reinterpret_cast<__m256i*>(acc + i));
        __m256i a1 = _mm256_loadu_si256(reinterpret_cast<__m256i*>(acc + i + 4));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), _mm256_add_epi64(a0, lo));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i + 4), _mm256_add_epi64(a1, hi));
    }
    for (; i < n; ++i) acc[i] += x[i];
}

template <std::uint32_t P>
void avx2_add_mod(std::uint32_t* dst, const std::uint32_t* a, const std::uint32_t* b, std::size_t n,
                  std::uint32_t p) {
    const std::uint32_t m = P ? P : p;
    const __m256i vm = _mm256_set1_epi32(static_cast<int>(m));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i t = _mm256_add_epi32(va, vb);
        // t < 2m < 2^26: t - m wraps for t < m, so unsigned min picks the reduced value
        __m256i r = _mm256_min_epu32(t, _mm256_sub_epi32(t, vm));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), r);
    }
    for (; i < n; ++i) {
        std::uint32_t t = a[i] + b[i];
        dst[i] = t >= m ? t - m : t;
    }
}

template <std::uint32_t P>
void avx2_sub_mod(std::uint32_t* dst, const std::uint32_t* a, const std::uint32_t* b, std::size_t n,
                  std::uint32_t p) {
    const std::uint32_t m = P ? P : p;
    const __m256i vm = _mm256_set1_epi32(static_cast<int>(m));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i t = _mm256_sub_epi32(va, vb);
        __m256i mask = _mm256_cmpgt_epi32(vb, va);  // values < 2^25, signed compare safe
        __m256i r = _mm256_add_epi32(t, _mm256_and_si256(mask, vm));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), r);
    }
    for (; i < n; ++i) {
        std::uint32_t t = a[i] + m - b[i];
        dst[i] = t >= m ? t - m : t;
    }
}

void avx2_xor_submul(std::uint32_t* dst, std::uint32_t c, const std::uint32_t* x, std::size_t n,
                     std::uint32_t p) {
    // p == 2: dst -= c*x collapses to dst ^= x (c is 0 or 1)
    (void)p;
    if (c == 0) return;
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i vd = _mm256_loadu_si256(reinterpret_cast<__m256i*>(dst + i));
        __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(vd, vx));
    }
    for (; i < n; ++i) dst[i] ^= x[i];
}

const KernelSet kAvx2Generic = {
    "avx2",          &avx2_acc_axpy, &scalar_mod_reduce<0>, &avx2_add_mod<0>,
    &avx2_sub_mod<0>, &scalar_submul_mod<0>, &scalar_scale_mod<0>,
};
const KernelSet kAvx2P2 = {
    "avx2-p2",       &avx2_acc_accumulate, &scalar_mod_reduce<2>, &avx2_add_mod<2>,
    &avx2_sub_mod<2>, &avx2_xor_submul, &scalar_scale_mod<2>,
};
const KernelSet kAvx2P3 = {
    "avx2-p3",       &avx2_acc_axpy, &scalar_mod_reduce<3>, &avx2_add_mod<3>,
    &avx2_sub_mod<3>, &scalar_submul_mod<3>, &scalar_scale_mod<3>,
};
const KernelSet kAvx2P5 = {
    "avx2-p5",       &avx2_acc_axpy, &scalar_mod_reduce<5>, &avx2_add_mod<5>,
    &avx2_sub_mod<5>, &scalar_submul_mod<5>, &scalar_scale_mod<5>,
};

}  // namespace

const KernelSet* avx2_set_for(std::uint32_t p) {
    switch (p) {
        case 2: return &kAvx2P2;
        case 3: return &kAvx2P3;
        case 5: return &kAvx2P5;
        default: return &kAvx2Generic;
    }
}

}  // namespace srmdp::detail
