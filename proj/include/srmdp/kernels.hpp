#ifndef SRMDP_KERNELS_HPP
#define SRMDP_KERNELS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace srmdp {

// Inner-loop primitives for dense mod-p coefficient vectors.  All "mod"
// entry points expect inputs already reduced into [0, p) and a prime
// p < 2^25, so products fit raw 64-bit accumulation (checked at field
// construction).  Variants (scalar / AVX2 / NEON, with p-specialized forms)
// share this table; dispatch picks one per (p, CPU) at runtime.
struct KernelSet {
    const char* name;

    // acc[i] += c * x[i]  (64-bit accumulators, no reduction)
    void (*acc_axpy)(std::uint64_t* acc, std::uint32_t c, const std::uint32_t* x, std::size_t n);

    // dst[i] = src[i] mod p
    void (*mod_reduce)(std::uint32_t* dst, const std::uint64_t* src, std::size_t n, std::uint32_t p);

    // dst[i] = (a[i] + b[i]) mod p
    void (*add_mod)(std::uint32_t* dst, const std::uint32_t* a, const std::uint32_t* b, std::size_t n,
                    std::uint32_t p);

    // dst[i] = (a[i] - b[i]) mod p
    void (*sub_mod)(std::uint32_t* dst, const std::uint32_t* a, const std::uint32_t* b, std::size_t n,
                    std::uint32_t p);

    // dst[i] = (dst[i] - c * x[i]) mod p
    void (*submul_mod)(std::uint32_t* dst, std::uint32_t c, const std::uint32_t* x, std::size_t n,
                       std::uint32_t p);

    // dst[i] = (c * x[i]) mod p
    void (*scale_mod)(std::uint32_t* dst, std::uint32_t c, const std::uint32_t* x, std::size_t n,
                      std::uint32_t p);
};

// Best variant for this prime on this CPU.  Honors SRMDP_KERNELS=scalar|avx2|neon;
// an unknown name or a variant this machine cannot run raises ConfigError.
const KernelSet& select_kernels(std::uint32_t p);

// Every variant usable on this CPU for this prime, scalar reference first.
std::vector<const KernelSet*> available_kernel_sets(std::uint32_t p);

}  // namespace srmdp

#endif
