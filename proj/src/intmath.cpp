#include "srmdp/intmath.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

namespace srmdp {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<__uint128_t>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic witness set for the full 64-bit range.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool is_probable_prime(const BigInt& n, int rounds) {
    if (n < 2) return false;
    if (n <= std::numeric_limits<std::uint64_t>::max()) {
        return is_prime_u64(static_cast<std::uint64_t>(n));
    }
    return boost::multiprecision::miller_rabin_test(n, rounds);
}

Factorization trial_factor(const BigInt& n, std::uint64_t limit) {
    Factorization out;
    if (n <= 0) throw ConfigError("trial_factor: argument must be positive");
    BigInt m = n;
    auto strip = [&](std::uint64_t d) {
        unsigned mult = 0;
        while (m % d == 0) {
            m /= d;
            ++mult;
        }
        if (mult) out.factors[BigInt(d)] += mult;
    };
    strip(2);
    strip(3);
    // Wheel over 6k±1.
    for (std::uint64_t d = 5; d <= limit && BigInt(d) * d <= m; d += 6) {
        strip(d);
        strip(d + 2);
    }
    if (m == 1) {
        out.complete = true;
    } else if (is_probable_prime(m)) {
        out.factors[m] += 1;
        out.complete = true;
    } else {
        out.cofactor = m;
        out.complete = false;
        return out;
    }
    out.cofactor = 1;
    return out;
}

BigInt pow_bigint(const BigInt& base, std::uint64_t exp) {
    BigInt r = 1, b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

BigInt isqrt_ceil(const BigInt& n) {
    if (n < 0) throw ConfigError("isqrt_ceil: negative argument");
    if (n == 0) return 0;
    BigInt s = boost::multiprecision::sqrt(n);  // floor
    return (s * s == n) ? s : s + 1;
}

BigInt binomial_bigint(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

std::vector<std::uint64_t> prime_factors_u64(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2) ? 1 : 2) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace srmdp
