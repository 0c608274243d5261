// NEON kernel variants (aarch64; NEON is baseline there, no runtime probe).
#include <arm_neon.h>

#include "kernels_impl.hpp"

namespace srmdp::detail {

namespace {

void neon_acc_axpy(std::uint64_t* acc, std::uint32_t c, const std::uint32_t* x, std::size_t n) {
    const uint32x2_t vc = vdup_n_u32(c);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        uint32x4_t vx = vld1q_u32(x + i);
        uint64x2_t a0 = vld1q_u64(acc + i);
        uint64x2_t a1 = vld1q_u64(acc + i + 2);
        a0 = vmlal_u32(a0, vget_low_u32(vx), vc);
        a1 = vmlal_u32(a1, vget_high_u32(vx), vc);
        vst1q_u64(acc + i, a0);
        vst1q_u64(acc + i + 2, a1);
    }
    const std::uint64_t cc = c;
    for (; i < n; ++i) acc[i] += cc * x[i];
}

template <std::uint32_t P>
void neon_add_mod(std::uint32_t* dst, const std::uint32_t* a, const std::uint32_t* b, std::size_t n,
                  std::uint32_t p) {
    const std::uint32_t m = P ? P : p;
    const uint32x4_t vm = vdupq_n_u32(m);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        uint32x4_t t = vaddq_u32(vld1q_u32(a + i), vld1q_u32(b + i));
        uint32x4_t ge = vcgeq_u32(t, vm);
        vst1q_u32(dst + i, vsubq_u32(t, vandq_u32(ge, vm)));
    }
    for (; i < n; ++i) {
        std::uint32_t t = a[i] + b[i];
        dst[i] = t >= m ? t - m : t;
    }
}

template <std::uint32_t P>
void neon_sub_mod(std::uint32_t* dst, const std::uint32_t* a, const std::uint32_t* b, std::size_t n,
                  std::uint32_t p) {
    const std::uint32_t m = P ? P : p;
    const uint32x4_t vm = vdupq_n_u32(m);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        uint32x4_t va = vld1q_u32(a + i);
        uint32x4_t vb = vld1q_u32(b + i);
        uint32x4_t t = vsubq_u32(va, vb);  // wraps when a < b
        uint32x4_t lt = vcltq_u32(va, vb);
        vst1q_u32(dst + i, vaddq_u32(t, vandq_u32(lt, vm)));
    }
    for (; i < n; ++i) {
        std::uint32_t t = a[i] + m - b[i];
        dst[i] = t >= m ? t - m : t;
    }
}

void neon_xor_submul(std::uint32_t* dst, std::uint32_t c, const std::uint32_t* x, std::size_t n,
                     std::uint32_t p) {
    (void)p;
    if (c == 0) return;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        vst1q_u32(dst + i, veorq_u32(vld1q_u32(dst + i), vld1q_u32(x + i)));
    }
    for (; i < n; ++i) dst[i] ^= x[i];
}

const KernelSet kNeonGeneric = {
    "neon",          &neon_acc_axpy, &scalar_mod_reduce<0>, &neon_add_mod<0>,
    &neon_sub_mod<0>, &scalar_submul_mod<0>, &scalar_scale_mod<0>,
};
const KernelSet kNeonP2 = {
    "neon-p2",       &neon_acc_axpy, &scalar_mod_reduce<2>, &neon_add_mod<2>,
    &neon_sub_mod<2>, &neon_xor_submul, &scalar_scale_mod<2>,
};
const KernelSet kNeonP3 = {
    "neon-p3",       &neon_acc_axpy, &scalar_mod_reduce<3>, &neon_add_mod<3>,
    &neon_sub_mod<3>, &scalar_submul_mod<3>, &scalar_scale_mod<3>,
};
const KernelSet kNeonP5 = {
    "neon-p5",       &neon_acc_axpy, &scalar_mod_reduce<5>, &neon_add_mod<5>,
    &neon_sub_mod<5>, &scalar_submul_mod<5>, &scalar_scale_mod<5>,
};

}  // namespace

const KernelSet* neon_set_for(std::uint32_t p) {
    switch (p) {
        case 2: return &kNeonP2;
        case 3: return &kNeonP3;
        case 5: return &kNeonP5;
        default: return &kNeonGeneric;
    }
}

}  // namespace srmdp::detail
