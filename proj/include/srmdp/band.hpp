#ifndef SRMDP_BAND_HPP
#define SRMDP_BAND_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "srmdp/errors.hpp"

namespace srmdp {

// Staircase zero structure: row i (0-based) may be nonzero only in columns
// j < band[i].  Nontrivial minors are exactly the (I, J) with |I| = |J| and
// J[t] < band[I[t]] for every t.
struct BandPattern {
    std::size_t rows = 0, cols = 0;
    std::vector<std::size_t> band;  // per row: number of allowed leading columns

    bool in_band(std::size_t r, std::size_t c) const { return c < band[r]; }

    // blocks x blocks grid of br x bc blocks, block (bi,bj) allowed iff bi >= bj
    static BandPattern block_lower_toeplitz(std::size_t br, std::size_t bc, std::size_t blocks);
    static BandPattern lower_triangular(std::size_t n) { return block_lower_toeplitz(1, 1, n); }

    void validate() const;  // band nondecreasing and <= cols
};

struct MinorIndex {
    std::vector<std::size_t> rows, cols;  // 0-based, strictly increasing
    std::size_t order() const { return rows.size(); }
};

// Streams nontrivial minors in canonical order: order ascending, then row set
// lexicographic, then column set lexicographic.  Callback returns false to
// stop; the function returns false iff stopped early.
bool for_each_nontrivial_minor(const BandPattern& pattern, std::size_t max_order,
                               const std::function<bool(const MinorIndex&)>& fn);

std::uint64_t count_nontrivial_minors(const BandPattern& pattern, std::size_t max_order);
std::vector<std::uint64_t> count_nontrivial_minors_per_order(const BandPattern& pattern,
                                                             std::size_t max_order);

}  // namespace srmdp

#endif
