#include "srmdp/field.hpp"

#include <algorithm>
#include <sstream>

#include "srmdp/intmath.hpp"

namespace srmdp {

namespace {

std::uint64_t powmod_small(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = r * a % m;  // m < 2^25: no overflow
        a = a * a % m;
        e >>= 1;
    }
    return r;
}

std::uint32_t inv_mod_p(std::uint32_t c, std::uint32_t p) {
    return static_cast<std::uint32_t>(powmod_small(c, p - 2, p));
}

using Poly = std::vector<std::uint32_t>;

// degree of a coefficient vector; -1 for the zero polynomial
std::ptrdiff_t poly_deg(const Poly& a) {
    for (std::ptrdiff_t d = static_cast<std::ptrdiff_t>(a.size()) - 1; d >= 0; --d) {
        if (a[static_cast<std::size_t>(d)]) return d;
    }
    return -1;
}

// Arithmetic modulo an arbitrary monic polynomial, usable before (and during)
// Field construction; the Field's own element ops reuse the same routines.
struct RawMod {
    std::uint32_t p;
    const Poly& f;  // monic, degree N
    std::vector<std::pair<std::size_t, std::uint32_t>> terms;  // non-leading nonzero terms
    const KernelSet* ker;
    std::size_t N;

    RawMod(std::uint32_t p_, const Poly& f_, const KernelSet* ker_) : p(p_), f(f_), ker(ker_) {
        N = f.size() - 1;
        for (std::size_t j = 0; j < N; ++j) {
            if (f[j]) terms.emplace_back(j, f[j]);
        }
    }

    // out = a * b mod f; a, b of length <= N (reduced)
    void mul(Poly& out, const std::uint32_t* a, std::size_t na, const std::uint32_t* b,
             std::size_t nb) const {
        thread_local std::vector<std::uint64_t> acc;
        thread_local Poly tmp;
        const std::size_t conv_len = na + nb >= 1 ? na + nb - 1 : 0;
        acc.assign(conv_len, 0);
        for (std::size_t i = 0; i < na; ++i) {
            if (a[i]) ker->acc_axpy(acc.data() + i, a[i], b, nb);
        }
        tmp.resize(conv_len);
        ker->mod_reduce(tmp.data(), acc.data(), conv_len, p);
        reduce_in_place(tmp);
        out.assign(N, 0);
        std::copy(tmp.begin(), tmp.begin() + std::min(tmp.size(), N), out.begin());
    }

    // reduce an arbitrary-length polynomial mod f
    void reduce_in_place(Poly& t) const {
        if (t.size() <= N) return;
        const bool dense = terms.size() > 8;
        for (std::size_t d = t.size() - 1; d >= N; --d) {
            const std::uint32_t c = t[d];
            if (c) {
                if (dense) {
                    ker->submul_mod(t.data() + (d - N), c, f.data(), N, p);
                } else {
                    for (const auto& [j, m] : terms) {
                        const std::uint32_t cm =
                            static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * m % p);
                        std::uint32_t v = t[d - N + j] + p - cm;
                        t[d - N + j] = v >= p ? v - p : v;
                    }
                }
                t[d] = 0;
            }
            if (d == N) break;
        }
        t.resize(N);
    }

    void powp(Poly& h) const {  // h = h^p mod f
        if (p == 2) {
            Poly r;
            mul(r, h.data(), h.size(), h.data(), h.size());
            h = std::move(r);
            return;
        }
        Poly base = h, r(N, 0);
        r[0] = 1;
        std::uint32_t e = p;
        while (e) {
            if (e & 1) {
                Poly t;
                mul(t, r.data(), r.size(), base.data(), base.size());
                r = std::move(t);
            }
            e >>= 1;
            if (e) {
                Poly t;
                mul(t, base.data(), base.size(), base.data(), base.size());
                base = std::move(t);
            }
        }
        h = std::move(r);
    }

    Poly pow(const Poly& base, const BigInt& e) const {
        Poly r(N, 0);
        r[0] = 1;
        if (e == 0) return r;
        const unsigned top = boost::multiprecision::msb(e);
        for (unsigned i = top + 1; i-- > 0;) {
            Poly t;
            mul(t, r.data(), r.size(), r.data(), r.size());
            r = std::move(t);
            if (boost::multiprecision::bit_test(e, i)) {
                mul(t, r.data(), r.size(), base.data(), base.size());
                r = std::move(t);
            }
        }
        return r;
    }
};

// gcd of polynomials over F_p (not mod anything); result monic unless zero
Poly poly_gcd(Poly a, Poly b, std::uint32_t p, const KernelSet* ker) {
    std::ptrdiff_t da = poly_deg(a), db = poly_deg(b);
    while (db >= 0) {
        while (da >= db) {
            const std::uint32_t lead = a[static_cast<std::size_t>(da)];
            if (lead) {
                const std::uint32_t c = static_cast<std::uint32_t>(
                    static_cast<std::uint64_t>(lead) * inv_mod_p(b[static_cast<std::size_t>(db)], p) % p);
                ker->submul_mod(a.data() + (da - db), c, b.data(), static_cast<std::size_t>(db) + 1, p);
            }
            --da;
            while (da >= 0 && a[static_cast<std::size_t>(da)] == 0) --da;
            if (da < 0) break;
        }
        std::swap(a, b);
        std::swap(da, db);
    }
    if (da < 0) return {};
    a.resize(static_cast<std::size_t>(da) + 1);
    const std::uint32_t s = inv_mod_p(a.back(), p);
    if (s != 1) {
        for (auto& x : a) x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * s % p);
    }
    return a;
}

bool rabin_test(std::uint32_t p, const Poly& f, const KernelSet* ker) {
    const std::size_t N = f.size() - 1;
    if (N == 1) return true;
    RawMod rm(p, f, ker);
    Poly z(N, 0);
    z[1] = 1;  // the residue of z itself (N >= 2)
    Poly h = z;
    std::vector<std::size_t> checkpoints;
    for (std::uint64_t q : prime_factors_u64(N)) checkpoints.push_back(N / q);
    std::sort(checkpoints.begin(), checkpoints.end());
    std::size_t ci = 0;
    for (std::size_t d = 1; d <= N; ++d) {
        rm.powp(h);  // h = z^(p^d)
        while (ci < checkpoints.size() && checkpoints[ci] == d) {
            Poly diff(N);
            ker->sub_mod(diff.data(), h.data(), z.data(), N, p);
            if (poly_deg(poly_gcd(diff, f, p, ker)) != 0) return false;
            ++ci;
        }
    }
    return h == z;
}

std::size_t rabin_witness_degree(std::uint32_t p, const Poly& f, const KernelSet* ker) {
    const std::size_t N = f.size() - 1;
    RawMod rm(p, f, ker);
    Poly z(N, 0);
    if (N >= 2) z[1] = 1;
    Poly h = z;
    for (std::size_t d = 1; d <= N / 2; ++d) {
        rm.powp(h);
        Poly diff(N);
        ker->sub_mod(diff.data(), h.data(), z.data(), N, p);
        if (poly_deg(poly_gcd(diff, f, p, ker)) > 0) return d;
    }
    return 0;  // no proper factor found (caller decides what that means)
}

void validate_prime(std::uint32_t p) {
    if (!is_prime_u64(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
    if (p >= (1u << 25)) {
        throw UnsupportedField("p = " + std::to_string(p) + " exceeds the 2^25 kernel limit");
    }
}

// enumeration shared by find_primitive_poly / find_irreducible_poly:
// candidates z^N + sum(c_i z^i) ordered by integer value of (c_{N-1}..c_0)_p
Poly candidate_from_counter(const BigInt& val, std::uint32_t p, std::size_t N) {
    Poly f(N + 1, 0);
    f[N] = 1;
    BigInt v = val;
    for (std::size_t i = 0; i < N; ++i) {
        f[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
    }
    return f;
}

}  // namespace

std::string to_string(Primitivity s) {
    switch (s) {
        case Primitivity::verified_primitive: return "verified-primitive";
        case Primitivity::verified_irreducible_only: return "verified-irreducible-only";
        case Primitivity::asserted_unchecked: return "asserted-unchecked";
    }
    return "?";
}

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly, std::size_t* witness_degree) {
    validate_prime(p);
    if (poly.size() < 2) throw ConfigError("modulus degree must be at least 1");
    Poly f = poly;
    for (auto& c : f) c %= p;
    if (f.back() != 1) throw NotMonic("modulus must be monic");
    const KernelSet* ker = &select_kernels(p);
    if (rabin_test(p, f, ker)) return true;
    if (witness_degree) *witness_degree = rabin_witness_degree(p, f, ker);
    return false;
}

FieldPtr Field::make(std::uint32_t p, std::vector<std::uint32_t> modulus, bool require_primitive,
                     std::uint64_t factor_budget) {
    validate_prime(p);
    if (modulus.size() < 2) throw ConfigError("modulus degree must be at least 1");
    for (auto& c : modulus) c %= p;
    if (modulus.back() != 1) throw NotMonic("modulus must be monic");
    const std::size_t N = modulus.size() - 1;
    if (N > 65536) throw UnsupportedField("extension degree " + std::to_string(N) + " too large");
    // u64 accumulators must hold N*(p-1)^2
    const BigInt worst = BigInt(N) * (p - 1) * (p - 1);
    if (worst >> 63 != 0) throw UnsupportedField("N*(p-1)^2 would overflow 64-bit accumulation");

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->degree_ = N;
    f->modulus_ = std::move(modulus);
    f->kernels_ = &select_kernels(p);
    f->order_ = pow_bigint(BigInt(p), N);
    for (std::size_t j = 0; j < N; ++j) {
        if (f->modulus_[j]) f->modulus_terms_.emplace_back(j, f->modulus_[j]);
    }

    if (!rabin_test(p, f->modulus_, f->kernels_)) {
        const std::size_t wd = rabin_witness_degree(p, f->modulus_, f->kernels_);
        std::ostringstream os;
        os << "modulus is reducible over F_" << p;
        if (wd) os << " (has an irreducible factor of degree " << wd << ")";
        throw Reducible(os.str());
    }

    if (!require_primitive) {
        f->primitivity_ = Primitivity::verified_irreducible_only;
        return f;
    }

    const BigInt group = f->order_ - 1;
    if (group == 1) {
        f->primitivity_ = Primitivity::verified_primitive;
        return f;
    }
    Factorization fact = trial_factor(group, factor_budget);
    if (!fact.complete) {
        f->primitivity_ = Primitivity::asserted_unchecked;
        std::ostringstream os;
        os << "primitivity asserted but not verified: trial division up to " << factor_budget
           << " left a composite cofactor of " << boost::multiprecision::msb(fact.cofactor) + 1
           << " bits in p^N-1";
        f->warnings_.push_back(os.str());
        return f;
    }
    const FieldElement a = f->alpha();
    for (const auto& [q, mult] : fact.factors) {
        (void)mult;
        if (pow(a, group / q) == f->one()) {
            std::ostringstream os;
            os << "alpha is not primitive: alpha^((p^N-1)/" << q << ") = 1";
            throw NotPrimitive(os.str());
        }
    }
    f->primitivity_ = Primitivity::verified_primitive;
    return f;
}

FieldPtr Field::make_auto(std::uint32_t p, std::size_t N, std::uint64_t factor_budget) {
    return make(p, find_primitive_poly(p, N, factor_budget), true, factor_budget);
}

FieldPtr Field::make_prime_field(std::uint32_t p) {
    return make(p, {0, 1}, false);
}

FieldElement Field::zero() const {
    return FieldElement(this, FieldElement::Coeffs(degree_, 0));
}

FieldElement Field::one() const {
    FieldElement::Coeffs c(degree_, 0);
    c[0] = 1;
    return FieldElement(this, std::move(c));
}

FieldElement Field::alpha() const {
    FieldElement::Coeffs c(degree_, 0);
    if (degree_ == 1) {
        // alpha = residue of z = -c0 in F_p
        c[0] = (p_ - modulus_[0]) % p_;
    } else {
        c[1] = 1;
    }
    return FieldElement(this, std::move(c));
}

FieldElement Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
    if (coeffs.size() > degree_) {
        throw FormatError("coefficient list longer than extension degree");
    }
    FieldElement::Coeffs c(degree_, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = coeffs[i] % p_;
    return FieldElement(this, std::move(c));
}

FieldElement Field::from_index(const BigInt& index) const {
    if (index < 0 || index >= order_) throw ConfigError("element index out of range");
    FieldElement::Coeffs c(degree_, 0);
    BigInt v = index;
    for (std::size_t i = 0; i < degree_ && v != 0; ++i) {
        c[i] = static_cast<std::uint32_t>(v % p_);
        v /= p_;
    }
    return FieldElement(this, std::move(c));
}

bool FieldElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](std::uint32_t x) { return x == 0; });
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (field_ != o.field_) throw MixedFields("comparing elements of different fields");
    return c_ == o.c_;
}

namespace {

const Field* common_field(const FieldElement& a, const FieldElement& b, const char* op) {
    if (!a.field() || !b.field()) throw Error(std::string(op) + ": uninitialized element");
    if (a.field() != b.field()) throw MixedFields(std::string(op) + ": elements of different fields");
    return a.field();
}

}  // namespace

FieldElement add(const FieldElement& a, const FieldElement& b) {
    const Field* f = common_field(a, b, "add");
    FieldElement::Coeffs c(f->degree());
    f->kernels().add_mod(c.data(), a.c_.data(), b.c_.data(), f->degree(), f->p());
    return FieldElement(f, std::move(c));
}

FieldElement sub(const FieldElement& a, const FieldElement& b) {
    const Field* f = common_field(a, b, "sub");
    FieldElement::Coeffs c(f->degree());
    f->kernels().sub_mod(c.data(), a.c_.data(), b.c_.data(), f->degree(), f->p());
    return FieldElement(f, std::move(c));
}

FieldElement neg(const FieldElement& a) {
    if (!a.field()) throw Error("neg: uninitialized element");
    const Field* f = a.field();
    FieldElement::Coeffs c(f->degree());
    const std::uint32_t p = f->p();
    for (std::size_t i = 0; i < f->degree(); ++i) c[i] = a.c_[i] ? p - a.c_[i] : 0;
    return FieldElement(f, std::move(c));
}

FieldElement mul(const FieldElement& a, const FieldElement& b) {
    const Field* f = common_field(a, b, "mul");
    RawMod rm(f->p_, f->modulus_, f->kernels_);
    Poly out;
    rm.mul(out, a.c_.data(), a.c_.size(), b.c_.data(), b.c_.size());
    return FieldElement(f, FieldElement::Coeffs(out.begin(), out.end()));
}

FieldElement inv(const FieldElement& a) {
    if (!a.field()) throw Error("inv: uninitialized element");
    if (a.is_zero()) throw DivisionByZero("inv(0)");
    const Field* f = a.field();
    const std::uint32_t p = f->p_;
    const std::size_t N = f->degree_;
    const KernelSet& ker = *f->kernels_;

    // extended Euclid keeping s_i with s_i * a == r_i (mod modulus); stop as
    // soon as the divisor r1 is a constant, whose cofactor s1 has degree
    // <= N-1 and is the inverse up to that constant
    Poly r0 = f->modulus_;
    Poly r1(a.c_.begin(), a.c_.end());
    r1.resize(N + 1, 0);
    Poly s0(N + 1, 0), s1(N + 1, 0);
    s1[0] = 1;
    std::ptrdiff_t d0 = static_cast<std::ptrdiff_t>(N), d1 = poly_deg(r1);
    while (d1 > 0) {
        if (d0 < d1) {
            std::swap(r0, r1);
            std::swap(s0, s1);
            std::swap(d0, d1);
            continue;  // d1 may have hit zero (or below); re-test
        }
        const std::size_t shift = static_cast<std::size_t>(d0 - d1);
        const std::uint32_t c = static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(r0[static_cast<std::size_t>(d0)]) *
            inv_mod_p(r1[static_cast<std::size_t>(d1)], p) % p);
        ker.submul_mod(r0.data() + shift, c, r1.data(), static_cast<std::size_t>(d1) + 1, p);
        ker.submul_mod(s0.data() + shift, c, s1.data(), N + 1 - shift, p);
        while (d0 >= 0 && r0[static_cast<std::size_t>(d0)] == 0) --d0;
    }
    // gcd(a, modulus) must be a nonzero constant for an irreducible modulus
    if (d1 != 0) throw InternalCheckFailure("inv: gcd with irreducible modulus not constant");
    const std::uint32_t scale = inv_mod_p(r1[0], p);
    FieldElement::Coeffs out(N, 0);
    for (std::size_t i = 0; i < N; ++i) {
        out[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(s1[i]) * scale % p);
    }
    FieldElement res(f, std::move(out));
    if (!(mul(res, a) == f->one())) throw InternalCheckFailure("inv: postcondition a * a^-1 == 1 failed");
    return res;
}

FieldElement pow(const FieldElement& a, const BigInt& e) {
    if (!a.field()) throw Error("pow: uninitialized element");
    const Field* f = a.field();
    if (e < 0) return pow(inv(a), -e);
    FieldElement r = f->one();
    if (e == 0) return r;
    const unsigned top = boost::multiprecision::msb(e);
    for (unsigned i = top + 1; i-- > 0;) {
        r = mul(r, r);
        if (boost::multiprecision::bit_test(e, i)) r = mul(r, a);
    }
    return r;
}

FieldElement pow2exp(const Field& f, std::uint64_t e) {
    FieldElement r = f.alpha();
    for (std::uint64_t i = 0; i < e; ++i) r = mul(r, r);
    return r;
}

std::vector<std::uint32_t> find_primitive_poly(std::uint32_t p, std::size_t N,
                                               std::uint64_t factor_budget) {
    validate_prime(p);
    if (N == 0) throw ConfigError("extension degree must be at least 1");
    const BigInt order = pow_bigint(BigInt(p), N);
    const BigInt group = order - 1;
    std::vector<BigInt> prime_divisors;
    if (group > 1) {
        Factorization fact = trial_factor(group, factor_budget);
        if (!fact.complete) {
            throw BudgetExceeded("find_primitive_poly: cannot fully factor p^N-1 within budget",
                                 fact.cofactor, BigInt(factor_budget));
        }
        for (const auto& [q, mult] : fact.factors) {
            (void)mult;
            prime_divisors.push_back(q);
        }
    }
    const KernelSet* ker = &select_kernels(p);
    for (BigInt val = 1; val < order; ++val) {
        if (val % p == 0) continue;  // constant term zero: z divides f (or alpha = 0 at N = 1)
        Poly f = candidate_from_counter(val, p, N);
        if (!rabin_test(p, f, ker)) continue;
        RawMod rm(p, f, ker);
        Poly alpha(N, 0);
        if (N == 1) {
            alpha[0] = (p - f[0]) % p;
        } else {
            alpha[1] = 1;
        }
        bool primitive = true;
        for (const BigInt& q : prime_divisors) {
            Poly t = rm.pow(alpha, group / q);
            if (poly_deg(t) == 0 && t[0] == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return f;
    }
    throw NotFound("no primitive polynomial found (exhausted candidates)");
}

std::vector<std::uint32_t> find_irreducible_poly(std::uint32_t p, std::size_t N) {
    validate_prime(p);
    if (N == 0) throw ConfigError("extension degree must be at least 1");
    const KernelSet* ker = &select_kernels(p);
    const BigInt order = pow_bigint(BigInt(p), N);
    for (BigInt val = 1; val < order; ++val) {
        if (N > 1 && val % p == 0) continue;
        Poly f = candidate_from_counter(val, p, N);
        if (rabin_test(p, f, ker)) return f;
    }
    throw NotFound("no irreducible polynomial found (exhausted candidates)");
}

}  // namespace srmdp
