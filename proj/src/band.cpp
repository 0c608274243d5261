#include "srmdp/band.hpp"

#include <algorithm>

namespace srmdp {

BandPattern BandPattern::block_lower_toeplitz(std::size_t br, std::size_t bc, std::size_t blocks) {
    if (br == 0 || bc == 0 || blocks == 0) throw ParamsInvalid("block_lower_toeplitz: zero dimension");
    BandPattern p;
    p.rows = br * blocks;
    p.cols = bc * blocks;
    p.band.resize(p.rows);
    for (std::size_t i = 0; i < p.rows; ++i) p.band[i] = std::min((i / br + 1) * bc, p.cols);
    return p;
}

void BandPattern::validate() const {
    if (band.size() != rows) throw PatternMismatch("band length differs from row count");
    for (std::size_t i = 0; i < rows; ++i) {
        if (band[i] > cols) throw PatternMismatch("band exceeds column count");
        if (i && band[i] < band[i - 1]) throw PatternMismatch("band must be nondecreasing");
    }
}

namespace {

// Recursively extend (I, J) position by position; rows and columns both
// ascend, so the canonical (row-set, then col-set) order falls out of trying
// every row set in lex order and, for each, every feasible column set.
struct Enumerator {
    const BandPattern& p;
    std::size_t order;
    const std::function<bool(const MinorIndex&)>& fn;
    MinorIndex idx;
    // col_limit[t] = min over s >= t of (band[rows[s]] - (s - t)): the exact
    // upper bound on cols[t] that keeps the remaining positions feasible
    std::vector<std::ptrdiff_t> col_limit;

    bool cols_rec(std::size_t t, std::size_t start) {
        if (t == order) return fn(idx);
        for (std::ptrdiff_t j = static_cast<std::ptrdiff_t>(start); j < col_limit[t]; ++j) {
            idx.cols[t] = static_cast<std::size_t>(j);
            if (!cols_rec(t + 1, static_cast<std::size_t>(j) + 1)) return false;
        }
        return true;
    }

    bool cols_for_rows() {
        col_limit.assign(order, 0);
        col_limit[order - 1] = static_cast<std::ptrdiff_t>(p.band[idx.rows[order - 1]]);
        for (std::size_t t = order - 1; t-- > 0;) {
            col_limit[t] = std::min(static_cast<std::ptrdiff_t>(p.band[idx.rows[t]]),
                                    col_limit[t + 1] - 1);
        }
        return cols_rec(0, 0);
    }

    bool rows_rec(std::size_t t, std::size_t start) {
        if (t == order) return cols_for_rows();
        for (std::size_t i = start; i + (order - t - 1) < p.rows; ++i) {
            if (p.band[i] < t + 1) continue;  // fewer allowed columns than selected rows so far
            idx.rows[t] = i;
            if (!rows_rec(t + 1, i + 1)) return false;
        }
        return true;
    }
};

}  // namespace

bool for_each_nontrivial_minor(const BandPattern& pattern, std::size_t max_order,
                               const std::function<bool(const MinorIndex&)>& fn) {
    pattern.validate();
    const std::size_t full = std::min(pattern.rows, pattern.cols);
    const std::size_t top = std::min(max_order, full);
    for (std::size_t r = 1; r <= top; ++r) {
        Enumerator en{pattern, r, fn, {}, {}};
        en.idx.rows.resize(r);
        en.idx.cols.resize(r);
        if (!en.rows_rec(0, 0)) return false;
    }
    return true;
}

std::uint64_t count_nontrivial_minors(const BandPattern& pattern, std::size_t max_order) {
    std::uint64_t n = 0;
    for_each_nontrivial_minor(pattern, max_order, [&](const MinorIndex&) {
        ++n;
        return true;
    });
    return n;
}

std::vector<std::uint64_t> count_nontrivial_minors_per_order(const BandPattern& pattern,
                                                             std::size_t max_order) {
    const std::size_t top = std::min(max_order, std::min(pattern.rows, pattern.cols));
    std::vector<std::uint64_t> out(top + 1, 0);
    for_each_nontrivial_minor(pattern, max_order, [&](const MinorIndex& m) {
        ++out[m.order()];
        return true;
    });
    return out;
}

}  // namespace srmdp
