#ifndef SRMDP_FIELD_HPP
#define SRMDP_FIELD_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "srmdp/errors.hpp"
#include "srmdp/kernels.hpp"

namespace srmdp {

class Field;
class FieldElement;
using FieldPtr = std::shared_ptr<const Field>;

enum class Primitivity {
    verified_primitive,        // alpha's order proved equal to p^N - 1
    verified_irreducible_only, // irreducibility proved, primitivity not requested
    asserted_unchecked,        // primitivity requested but p^N - 1 resisted factoring
};

std::string to_string(Primitivity s);

// GF(p^N) in the polynomial basis F_p[z]/(rho(z)), alpha = residue class of z.
// Immutable and shared; elements keep a plain pointer to their field, so a
// Field must outlive every element created from it (hold the FieldPtr).
class Field {
  public:
    static constexpr std::uint64_t kDefaultFactorBudget = 1'000'000;

    // Verifies p prime and rho irreducible (Rabin).  With require_primitive,
    // additionally proves alpha generates the multiplicative group whenever
    // p^N - 1 can be fully factored within factor_budget trial divisions;
    // otherwise the field is tagged asserted_unchecked and carries a warning.
    static FieldPtr make(std::uint32_t p, std::vector<std::uint32_t> modulus,
                         bool require_primitive = false,
                         std::uint64_t factor_budget = kDefaultFactorBudget);

    // Searches for the least primitive modulus of degree N (find_primitive_poly).
    static FieldPtr make_auto(std::uint32_t p, std::size_t N,
                              std::uint64_t factor_budget = kDefaultFactorBudget);

    // F_p itself, as GF(p^1) with modulus z (alpha = 0; fine for constructions
    // that never evaluate alpha, e.g. binomial Toeplitz matrices).
    static FieldPtr make_prime_field(std::uint32_t p);

    std::uint32_t p() const { return p_; }
    std::size_t degree() const { return degree_; }             // N
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    Primitivity primitivity() const { return primitivity_; }
    const std::vector<std::string>& warnings() const { return warnings_; }
    const BigInt& order() const { return order_; }             // p^N
    const KernelSet& kernels() const { return *kernels_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement alpha() const;
    // Constant coefficient vector (low degree first); may be shorter than N.
    FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
    // Index in [0, p^N), interpreted as base-p digits.
    FieldElement from_index(const BigInt& index) const;

  private:
    Field() = default;

    std::uint32_t p_ = 0;
    std::size_t degree_ = 0;
    std::vector<std::uint32_t> modulus_;
    // non-leading nonzero terms of the modulus, for sparse reduction
    std::vector<std::pair<std::size_t, std::uint32_t>> modulus_terms_;
    Primitivity primitivity_ = Primitivity::verified_irreducible_only;
    std::vector<std::string> warnings_;
    BigInt order_;
    const KernelSet* kernels_ = nullptr;

    friend class FieldElement;
    friend FieldElement mul(const FieldElement&, const FieldElement&);
    friend FieldElement inv(const FieldElement&);
};

class FieldElement {
  public:
    using Coeffs = boost::container::small_vector<std::uint32_t, 8>;

    FieldElement() = default;  // unusable until assigned from a field

    const Field* field() const { return field_; }
    bool is_zero() const;
    // Coefficients of the residue-class representative, length N, low first.
    const Coeffs& coeffs() const { return c_; }

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

  private:
    friend class Field;
    friend FieldElement add(const FieldElement&, const FieldElement&);
    friend FieldElement sub(const FieldElement&, const FieldElement&);
    friend FieldElement neg(const FieldElement&);
    friend FieldElement mul(const FieldElement&, const FieldElement&);
    friend FieldElement inv(const FieldElement&);

    FieldElement(const Field* f, Coeffs c) : field_(f), c_(std::move(c)) {}

    const Field* field_ = nullptr;
    Coeffs c_;
};

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement sub(const FieldElement& a, const FieldElement& b);
FieldElement neg(const FieldElement& a);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement inv(const FieldElement& a);  // DivisionByZero on zero
// a^e for any integer e (negative inverts); pow(a, 0) = 1.
FieldElement pow(const FieldElement& a, const BigInt& e);
// alpha^(2^e) by e squarings — exact for astronomically large exponents.
FieldElement pow2exp(const Field& f, std::uint64_t e);

// Least primitive (resp. irreducible) monic modulus of degree N over F_p,
// candidates ordered by integer value of the non-leading coefficients.
// find_primitive_poly requires a full factorization of p^N - 1 and throws
// BudgetExceeded if trial division up to factor_budget cannot provide one.
std::vector<std::uint32_t> find_primitive_poly(std::uint32_t p, std::size_t N,
                                               std::uint64_t factor_budget = Field::kDefaultFactorBudget);
std::vector<std::uint32_t> find_irreducible_poly(std::uint32_t p, std::size_t N);

// Rabin's test; on failure *witness_degree (if non-null) receives the degree
// of a proper irreducible factor.
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly,
                    std::size_t* witness_degree = nullptr);

}  // namespace srmdp

#endif
