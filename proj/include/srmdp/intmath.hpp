#ifndef SRMDP_INTMATH_HPP
#define SRMDP_INTMATH_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "srmdp/errors.hpp"

namespace srmdp {

bool is_prime_u64(std::uint64_t n);

// Miller-Rabin with fixed pseudo-random bases; exact below 2^64, strong
// probabilistic test above.
bool is_probable_prime(const BigInt& n, int rounds = 40);

struct Factorization {
    std::map<BigInt, unsigned> factors;  // prime -> multiplicity
    bool complete = false;               // false if a composite cofactor remains
    BigInt cofactor = 1;                 // unfactored remainder (1 when complete)
};

// Trial division by 2 and odd numbers up to `limit`, then a primality test on
// what is left.  complete=false means the cofactor resisted the budget.
Factorization trial_factor(const BigInt& n, std::uint64_t limit);

BigInt pow_bigint(const BigInt& base, std::uint64_t exp);

// Smallest integer >= sqrt(n); n >= 0.
BigInt isqrt_ceil(const BigInt& n);

BigInt binomial_bigint(std::uint64_t n, std::uint64_t k);

std::vector<std::uint64_t> prime_factors_u64(std::uint64_t n);

}  // namespace srmdp

#endif
