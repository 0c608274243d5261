#include <doctest.h>

#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "srmdp/kernels.hpp"

using namespace srmdp;

namespace {

// independent reference semantics for every kernel entry point
void ref_acc_axpy(std::uint64_t* acc, std::uint32_t c, const std::uint32_t* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) acc[i] += static_cast<std::uint64_t>(c) * x[i];
}
void ref_mod_reduce(std::uint32_t* dst, const std::uint64_t* src, std::size_t n, std::uint32_t p) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = static_cast<std::uint32_t>(src[i] % p);
}
void ref_add_mod(std::uint32_t* d, const std::uint32_t* a, const std::uint32_t* b, std::size_t n,
                 std::uint32_t p) {
    for (std::size_t i = 0; i < n; ++i) d[i] = (a[i] + b[i]) % p;
}
void ref_sub_mod(std::uint32_t* d, const std::uint32_t* a, const std::uint32_t* b, std::size_t n,
                 std::uint32_t p) {
    for (std::size_t i = 0; i < n; ++i) d[i] = (a[i] + p - b[i]) % p;
}
void ref_submul_mod(std::uint32_t* d, std::uint32_t c, const std::uint32_t* x, std::size_t n,
                    std::uint32_t p) {
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t prod = static_cast<std::uint64_t>(c) * x[i] % p;
        d[i] = static_cast<std::uint32_t>((d[i] + p - prod) % p);
    }
}
void ref_scale_mod(std::uint32_t* d, std::uint32_t c, const std::uint32_t* x, std::size_t n,
                   std::uint32_t p) {
    for (std::size_t i = 0; i < n; ++i)
        d[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * x[i] % p);
}

std::vector<std::uint32_t> random_residues(std::mt19937_64& rng, std::size_t n, std::uint32_t p) {
    std::vector<std::uint32_t> v(n);
    for (auto& x : v) x = static_cast<std::uint32_t>(rng() % p);
    return v;
}

}  // namespace

TEST_CASE("every available kernel set matches the reference semantics") {
    // sizes chosen to exercise SIMD main loops and scalar tails
    const std::size_t sizes[] = {0, 1, 2, 3, 7, 8, 9, 15, 16, 31, 64, 100, 1025};
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 65537u}) {
        const auto sets = available_kernel_sets(p);
        REQUIRE(!sets.empty());
        CHECK(std::strstr(sets.front()->name, "scalar") != nullptr);
        for (const KernelSet* ks : sets) {
            const std::string set_name = ks->name;
            CAPTURE(p);
            CAPTURE(set_name);
            std::mt19937_64 rng(0xC0FFEEu + p);
            for (std::size_t n : sizes) {
                const auto a = random_residues(rng, n, p);
                const auto b = random_residues(rng, n, p);
                const std::uint32_t c = static_cast<std::uint32_t>(rng() % p);

                std::vector<std::uint64_t> acc(n), acc_ref(n);
                for (std::size_t i = 0; i < n; ++i) acc[i] = acc_ref[i] = rng() % (1u << 20);
                ks->acc_axpy(acc.data(), c, a.data(), n);
                ref_acc_axpy(acc_ref.data(), c, a.data(), n);
                CHECK(acc == acc_ref);

                std::vector<std::uint32_t> out(n), out_ref(n);
                ks->mod_reduce(out.data(), acc.data(), n, p);
                ref_mod_reduce(out_ref.data(), acc_ref.data(), n, p);
                CHECK(out == out_ref);

                ks->add_mod(out.data(), a.data(), b.data(), n, p);
                ref_add_mod(out_ref.data(), a.data(), b.data(), n, p);
                CHECK(out == out_ref);

                ks->sub_mod(out.data(), a.data(), b.data(), n, p);
                ref_sub_mod(out_ref.data(), a.data(), b.data(), n, p);
                CHECK(out == out_ref);

                out = b;
                out_ref = b;
                ks->submul_mod(out.data(), c, a.data(), n, p);
                ref_submul_mod(out_ref.data(), c, a.data(), n, p);
                CHECK(out == out_ref);

                ks->scale_mod(out.data(), c, a.data(), n, p);
                ref_scale_mod(out_ref.data(), c, a.data(), n, p);
                CHECK(out == out_ref);
            }
        }
    }
}

TEST_CASE("select_kernels returns one of the available sets") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const KernelSet& chosen = select_kernels(p);
        bool found = false;
        for (const KernelSet* ks : available_kernel_sets(p))
            if (ks == &chosen) found = true;
        CHECK(found);
    }
}

TEST_CASE("kernel sets handle saturated residues near the accumulator guard") {
    // largest supported prime shape: residues p-1 with p just below 2^25
    const std::uint32_t p = 33554393;  // prime < 2^25
    for (const KernelSet* ks : available_kernel_sets(p)) {
        CAPTURE(ks->name);
        const std::size_t n = 257;
        std::vector<std::uint32_t> a(n, p - 1), b(n, p - 1), out(n), out_ref(n);
        std::vector<std::uint64_t> acc(n, 0), acc_ref(n, 0);
        // repeated worst-case accumulation: n * (p-1)^2 stays below 2^63
        for (int rep = 0; rep < 4; ++rep) {
            ks->acc_axpy(acc.data(), p - 1, a.data(), n);
            ref_acc_axpy(acc_ref.data(), p - 1, a.data(), n);
        }
        CHECK(acc == acc_ref);
        ks->mod_reduce(out.data(), acc.data(), n, p);
        ref_mod_reduce(out_ref.data(), acc_ref.data(), n, p);
        CHECK(out == out_ref);
        ks->add_mod(out.data(), a.data(), b.data(), n, p);
        ref_add_mod(out_ref.data(), a.data(), b.data(), n, p);
        CHECK(out == out_ref);
        out = b;
        out_ref = b;
        ks->submul_mod(out.data(), p - 1, a.data(), n, p);
        ref_submul_mod(out_ref.data(), p - 1, a.data(), n, p);
        CHECK(out == out_ref);
    }
}
