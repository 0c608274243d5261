#include "kernels_impl.hpp"

namespace srmdp::detail {

namespace {

template <std::uint32_t P>
constexpr KernelSet make_scalar_set(const char* name) {
    return KernelSet{
        name,
        &scalar_acc_axpy<P>,
        &scalar_mod_reduce<P>,
        &scalar_add_mod<P>,
        &scalar_sub_mod<P>,
        &scalar_submul_mod<P>,
        &scalar_scale_mod<P>,
    };
}

constexpr KernelSet kScalarGeneric = make_scalar_set<0>("scalar");
constexpr KernelSet kScalarP2 = make_scalar_set<2>("scalar-p2");
constexpr KernelSet kScalarP3 = make_scalar_set<3>("scalar-p3");
constexpr KernelSet kScalarP5 = make_scalar_set<5>("scalar-p5");

}  // namespace

const KernelSet* scalar_set_for(std::uint32_t p) {
    switch (p) {
        case 2: return &kScalarP2;
        case 3: return &kScalarP3;
        case 5: return &kScalarP5;
        default: return &kScalarGeneric;
    }
}

}  // namespace srmdp::detail
