#ifndef SRMDP_CONVCODE_HPP
#define SRMDP_CONVCODE_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "srmdp/matrix.hpp"
#include "srmdp/superregular.hpp"

namespace srmdp {

// Code given by its polynomial parity check H(z) = [A(z) B(z)]:
// A is (n-k) x (n-k) with A_0 = I, B is (n-k) x k, both of degree <= nu.
// Codeword slots are laid out as v_i = (parity part, information part).
struct ConvCode {
    CodeParams params;
    FieldPtr field;
    PolyMatrix A;
    PolyMatrix B;
};

// Shape/degree/field consistency; A_0 must be the identity.
void validate_code(const ConvCode& code);

// Builds the code whose parity-series coefficients reproduce the given
// seeds: solves the block-Hankel system for [A_nu ... A_1] with free
// unknowns zero, then B_i = sum_{t<=i} A_t * seed_{i-t}.  Seeds must be the
// L+1 blocks of shape (n-k) x k over one field.  Throws Inconsistent when
// the Hankel system has no solution.
ConvCode mdp_construct(const CodeParams& params, const std::vector<Matrix>& seeds);

// Power-series coefficients G_0 ... G_upto of A(z)^{-1} B(z):
// G_i = A_0^{-1} (B_i - sum_{t=1..min(i,deg A)} A_t G_{i-t}).
std::vector<Matrix> laurent_expansion(const ConvCode& code, std::size_t upto);

// Truncated parity check of shape (j+1)(n-k) x (j+1)n: lower block-triangular
// Toeplitz in the blocks H_i = [A_i B_i], zero for i beyond the degree.
Matrix sliding_parity(const ConvCode& code, std::size_t j);

inline BigInt default_search_budget() { return BigInt(1) << 28; }

struct DistanceResult {
    std::size_t j = 0;
    std::size_t distance = 0;
    bool bound_met = false;              // distance == (j+1)(n-k)+1
    BigInt search_space;                 // q^((j+1)k)
    std::vector<FieldElement> witness;   // minimizing truncated codeword, length (j+1)n
};

// Exact j-th column distance: exhaustive search over information sequences
// u_0 ... u_j with u_0 != 0 (parity parts follow from the series expansion),
// pruned on partial weight.  Throws BudgetExceeded when q^((j+1)k) exceeds
// the budget.  The distance is thread-count independent; the witness is
// deterministic for threads == 1.
DistanceResult column_distance(const ConvCode& code, std::size_t j,
                               const BigInt& budget = default_search_budget(),
                               unsigned threads = 1);

struct ColumnDistanceProfile {
    std::vector<DistanceResult> per_j;  // j = 0 .. L
    bool mdp = false;                   // bound met at j = L
};

// Column distances for j = 0 .. L; verifies the met-bound flags form a
// prefix (a violation would contradict proven theory -> InternalCheckFailure).
ColumnDistanceProfile distance_profile(const ConvCode& code,
                                       const BigInt& budget = default_search_budget(),
                                       unsigned threads = 1);

enum class MdpMethod { distance, superregular };
std::string to_string(MdpMethod m);

struct MdpEvidence {
    bool mdp = false;
    MdpMethod method = MdpMethod::superregular;
    std::optional<DistanceResult> distance_at_L;     // distance method
    std::optional<SuperregularReport> sr_report;     // superregular method
};

// MDP predicate.  distance: checks d^c_L == (L+1)(n-k)+1 by search.
// superregular: builds the block-Toeplitz arrangement of the parity series
// G_0 ... G_L and checks superregularity.  The two methods agree on every
// code (checked in tests); the second works at any field size.
MdpEvidence is_mdp(const ConvCode& code, MdpMethod method,
                   const BigInt& budget = default_search_budget(), unsigned threads = 1);

// Uniform nonzero field element / seed blocks, for reproducible experiments.
// Requires the field order to fit 63 bits.
FieldElement random_nonzero(const FieldPtr& field, std::mt19937_64& rng);
std::vector<Matrix> random_seed_blocks(const CodeParams& params, const FieldPtr& field,
                                       std::mt19937_64& rng);

}  // namespace srmdp

#endif
