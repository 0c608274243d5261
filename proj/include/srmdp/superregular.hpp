#ifndef SRMDP_SUPERREGULAR_HPP
#define SRMDP_SUPERREGULAR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "srmdp/band.hpp"
#include "srmdp/matrix.hpp"

namespace srmdp {

// (n, k, delta) with 0 < k < n and (n - k) | delta; derived quantities are
// computed once and never stored inconsistently.
struct CodeParams {
    std::size_t n = 0, k = 0, delta = 0;
    std::size_t M = 0;   // max(n - k, k)
    std::size_t L = 0;   // floor(delta / k) + delta / (n - k)
    std::size_t nu = 0;  // delta / (n - k)

    CodeParams() = default;
    CodeParams(std::size_t n, std::size_t k, std::size_t delta);  // ParamsInvalid
};

// Exponent indices e(i, j) of a matrix whose in-band entries are alpha^(2^e);
// e = -1 marks positions outside the band (structural zeros).
struct ExponentMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<std::int64_t> e;

    std::int64_t at(std::size_t r, std::size_t c) const { return e[r * cols + c]; }
    bool present(std::size_t r, std::size_t c) const { return at(r, c) >= 0; }
    std::int64_t max_exponent() const;
};

// Exponents of the generating row [C_0 | C_1 | ... | C_L]: M x (L+1)M, all
// present, e(i, j) = i + j.  Moving right or down doubles the entry.
ExponentMatrix exponents_block_row(const CodeParams& params);
// Exponents of the full block-Toeplitz arrangement: block (bi, bj) present
// iff bi >= bj, local entry e = (bi - bj) * M + li + lj.
ExponentMatrix exponents_full(const CodeParams& params);
// Same, restricted to the (n-k) x k top-left corners of the blocks.
ExponentMatrix exponents_parity(const CodeParams& params);

// Band patterns of the two arrangements.
BandPattern pattern_full(const CodeParams& params);
BandPattern pattern_parity(const CodeParams& params);

// The L+1 square blocks C_0 ... C_L of order M, with the concatenated row
// [C_0 | ... | C_L] having entry alpha^(2^(i+j)) at (i, j).
std::vector<Matrix> build_superregular_blocks(const CodeParams& params, const FieldPtr& field);
// Their (n-k) x k top-left corners, the seeds of the parity construction.
std::vector<Matrix> build_parity_seed_blocks(const CodeParams& params, const FieldPtr& field);

// Lower block-triangular block-Toeplitz arrangement of equal-shape blocks:
// block (i, j) = blocks[i - j] for i >= j, zero above the diagonal.
Matrix block_toeplitz(const std::vector<Matrix>& blocks);

// Lower triangular Toeplitz matrix of order r with first column the binomial
// coefficients C(r-1, 0), ..., C(r-1, r-1) reduced into the field.
Matrix binomial_toeplitz(const FieldPtr& field, std::size_t r);

enum class Verdict { superregular, not_superregular, incomplete };
std::string to_string(Verdict v);

struct MinorWitness {
    MinorIndex index;        // 0-based
    FieldElement determinant;
};

struct CheckOptions {
    std::size_t max_order = 0;  // 0 = up to full order
    bool collect_all = false;   // keep enumerating past the first zero minor
    unsigned threads = 1;
};

struct SuperregularReport {
    Verdict verdict = Verdict::incomplete;
    std::uint64_t minors_checked = 0;   // ordinal of the last evaluated minor
    std::size_t max_order_checked = 0;
    std::vector<MinorWitness> witnesses;  // zero minors, canonical order
    std::vector<std::string> warnings;
};

// Evaluates every nontrivial minor of m (per pattern) in canonical order.
// Verdict superregular requires full-order enumeration with no zero minor;
// a max_order cap with no witness yields incomplete.  Stops at the first
// witness unless collect_all.  Throws PatternMismatch when m's shape differs
// from the pattern or an out-of-band entry is nonzero.  The verdict,
// minors_checked and witness set are thread-count independent.
SuperregularReport check_superregular(const Matrix& m, const BandPattern& pattern,
                                      const CheckOptions& opts = {});

// Test oracle: true iff every permutation term of det(m) has a zero factor,
// decided by searching for a system of distinct representatives over the
// nonzero entries.  Throws BudgetExceeded above order_limit.
bool is_trivial_minor_oracle(const Matrix& m, std::size_t order_limit = 7);

struct UniqueMaxResult {
    bool ok = true;
    std::uint64_t minors_checked = 0;
    std::optional<MinorIndex> violation;  // first minor with a tied maximum
};

// Symbolic core of the field-size theorem: for every nontrivial minor of
// order <= max_order (0 = full), enumerate the permutation terms that avoid
// structural zeros, evaluate each as sum of 2^e with exact integers, and
// require a strict unique maximum.  No field arithmetic involved.
UniqueMaxResult unique_max_exponent_check(const ExponentMatrix& exps, const BandPattern& pattern,
                                          std::size_t max_order = 0);

// Sufficient field degrees: GF(p^N) with N >= bound guarantees superregularity.
BigInt theorem_field_bound(const CodeParams& params);    // 2^(M(L+2)-1)
BigInt corollary_field_bound(const CodeParams& params);  // 2^(M(L+1)+n-2)
std::size_t theorem_field_bound_log2(const CodeParams& params);
std::size_t corollary_field_bound_log2(const CodeParams& params);

// Refinement from the exponents actually present: every minor's term value is
// below (4/3) * 2^e_max, so N = e_max + 1 bits always suffice; the exact
// ceiling floor((4/3) * 2^e_max) + 1 is reported alongside.
struct EntryBound {
    std::int64_t e_max = 0;
    BigInt n_power_of_two;  // 2^(e_max + 1)
    BigInt n_exact_ceiling; // floor((4/3) * 2^e_max) + 1
};
EntryBound entry_field_bound(const ExponentMatrix& exps);

// Number of binary sequences bounding the distinct-minor count of an order-r
// triangular Toeplitz matrix: (Catalan(r-1) + C(r-1, floor((r-1)/2))) / 2.
BigInt hutchinson_bound(std::size_t r);
// ceil(c^r * r^(r/2)), the generic field size for order-r superregularity.
BigInt gl_generic_bound(std::uint64_t c, std::size_t r);

enum class Target { full, parity };
std::string to_string(Target t);

struct MinFieldAttempt {
    std::size_t N = 0;
    Verdict verdict = Verdict::incomplete;
    std::optional<MinorWitness> witness;
};

struct MinFieldResult {
    std::optional<std::size_t> found_N;
    SuperregularReport report;  // report for found_N when found
    std::vector<MinFieldAttempt> attempts;
};

// For N = 1 ... N_max builds GF(p^N) on the least primitive modulus and runs
// the full superregularity check on the selected arrangement; stops at the
// first superregular N.  found_N empty when every N fails.
MinFieldResult min_field_search(const CodeParams& params, std::uint32_t p, std::size_t N_max,
                                Target target, const CheckOptions& opts = {});

}  // namespace srmdp

#endif
