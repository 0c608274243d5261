#include <doctest.h>

#include <algorithm>
#include <vector>

#include "srmdp/band.hpp"

using namespace srmdp;

namespace {

// brute force: all index pairs (I, J) in canonical order, filtered by the
// nontriviality condition J[t] < band[I[t]]
void combos(std::size_t n, std::size_t r, std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == r) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

// the cap is literal at this layer: max_order 0 enumerates nothing
std::vector<MinorIndex> brute_force(const BandPattern& p, std::size_t max_order) {
    std::vector<MinorIndex> out;
    const std::size_t top = std::min({p.rows, p.cols, max_order});
    for (std::size_t r = 1; r <= top; ++r) {
        std::vector<std::vector<std::size_t>> rs, cs;
        combos(p.rows, r, rs);
        combos(p.cols, r, cs);
        for (const auto& I : rs)
            for (const auto& J : cs) {
                bool ok = true;
                for (std::size_t t = 0; t < r; ++t)
                    if (J[t] >= p.band[I[t]]) ok = false;
                if (ok) out.push_back(MinorIndex{I, J});
            }
    }
    return out;
}

std::vector<MinorIndex> collect(const BandPattern& p, std::size_t max_order) {
    std::vector<MinorIndex> out;
    for_each_nontrivial_minor(p, max_order, [&](const MinorIndex& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

bool same(const std::vector<MinorIndex>& a, const std::vector<MinorIndex>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].rows != b[i].rows || a[i].cols != b[i].cols) return false;
    return true;
}

}  // namespace

TEST_CASE("block_lower_toeplitz band shape") {
    // 3 block rows of height 2, block width 3: row i may use (i/2 + 1)*3 cols
    BandPattern p = BandPattern::block_lower_toeplitz(2, 3, 3);
    CHECK(p.rows == 6);
    CHECK(p.cols == 9);
    CHECK(p.band == std::vector<std::size_t>{3, 3, 6, 6, 9, 9});
    CHECK_NOTHROW(p.validate());
    CHECK(p.in_band(0, 2));
    CHECK_FALSE(p.in_band(0, 3));
    CHECK(p.in_band(5, 8));

    BandPattern lt = BandPattern::lower_triangular(4);
    CHECK(lt.band == std::vector<std::size_t>{1, 2, 3, 4});

    BandPattern bad{2, 3, {3, 1}};  // decreasing band
    CHECK_THROWS_AS(bad.validate(), Error);
    BandPattern wide{1, 2, {3}};  // band exceeds cols
    CHECK_THROWS_AS(wide.validate(), Error);
}

TEST_CASE("enumeration equals brute force on assorted patterns") {
    std::vector<BandPattern> patterns;
    patterns.push_back(BandPattern::lower_triangular(3));
    patterns.push_back(BandPattern::lower_triangular(5));
    patterns.push_back(BandPattern::block_lower_toeplitz(1, 2, 3));  // wide blocks
    patterns.push_back(BandPattern::block_lower_toeplitz(2, 1, 3));  // tall blocks
    patterns.push_back(BandPattern::block_lower_toeplitz(3, 2, 2));
    patterns.push_back(BandPattern::block_lower_toeplitz(2, 2, 2));
    for (const auto& p : patterns) {
        CAPTURE(p.rows);
        CAPTURE(p.cols);
        for (std::size_t cap : {std::size_t(0), std::size_t(1), std::size_t(2), std::size_t(3)}) {
            const auto want = brute_force(p, cap);
            const auto got = collect(p, cap);
            CHECK(same(want, got));
            CHECK(count_nontrivial_minors(p, cap) == want.size());
        }
    }
}

TEST_CASE("canonical order: ascending order, then row set, then column set") {
    const auto got = collect(BandPattern::lower_triangular(3), 3);
    REQUIRE(got.size() == 13);
    // order-1 minors first: ({0},{0}), ({1},{0}), ({1},{1}), ({2},{0}) ...
    CHECK(got[0].rows == std::vector<std::size_t>{0});
    CHECK(got[0].cols == std::vector<std::size_t>{0});
    CHECK(got[1].rows == std::vector<std::size_t>{1});
    CHECK(got[1].cols == std::vector<std::size_t>{0});
    CHECK(got[2].rows == std::vector<std::size_t>{1});
    CHECK(got[2].cols == std::vector<std::size_t>{1});
    CHECK(got[5].rows == std::vector<std::size_t>{2});
    CHECK(got[5].cols == std::vector<std::size_t>{2});
    // first order-2 minor
    CHECK(got[6].rows == std::vector<std::size_t>{0, 1});
    CHECK(got[6].cols == std::vector<std::size_t>{0, 1});
    // row-set lex: {0,1} < {0,2} < {1,2}; col sets lex within a row set
    CHECK(got[7].rows == std::vector<std::size_t>{0, 2});
    CHECK(got[7].cols == std::vector<std::size_t>{0, 1});
    CHECK(got[8].rows == std::vector<std::size_t>{0, 2});
    CHECK(got[8].cols == std::vector<std::size_t>{0, 2});
    CHECK(got[9].rows == std::vector<std::size_t>{1, 2});
    CHECK(got[9].cols == std::vector<std::size_t>{0, 1});
    // full-order minor last
    CHECK(got[12].rows == std::vector<std::size_t>{0, 1, 2});
    CHECK(got[12].cols == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("frozen counts for the construction patterns") {
    // (n,k,delta) = (2,1,1): full arrangement is 3x3 lower triangular
    BandPattern t211 = BandPattern::lower_triangular(3);
    CHECK(count_nontrivial_minors_per_order(t211, 3) ==
          std::vector<std::uint64_t>{0, 6, 6, 1});  // slot per order, 0 unused
    CHECK(count_nontrivial_minors(t211, 3) == 13);

    // (5,2,3): parity arrangement 9x6, blocks 3x2
    BandPattern h523 = BandPattern::block_lower_toeplitz(3, 2, 3);
    CHECK(count_nontrivial_minors_per_order(h523, 6) ==
          std::vector<std::uint64_t>{0, 36, 318, 960, 1071, 444, 55});
    CHECK(count_nontrivial_minors(h523, 6) == 2884);

    // (5,2,3): full arrangement 9x9, blocks 3x3
    CHECK(count_nontrivial_minors(BandPattern::block_lower_toeplitz(3, 3, 3), 9) == 26779);

    // (3,2,2): parity arrangement 4x8, blocks 1x2
    BandPattern h322 = BandPattern::block_lower_toeplitz(1, 2, 4);
    CHECK(count_nontrivial_minors_per_order(h322, 4) ==
          std::vector<std::uint64_t>{0, 20, 90, 120, 42});
    CHECK(count_nontrivial_minors(h322, 4) == 272);

    // (3,2,2): full arrangement 8x8 capped at order 4
    CHECK(count_nontrivial_minors(BandPattern::block_lower_toeplitz(2, 2, 4), 4) == 4370);
}

TEST_CASE("max_order caps and early stop") {
    BandPattern p = BandPattern::block_lower_toeplitz(3, 2, 3);
    CHECK(count_nontrivial_minors(p, 1) == 36);
    CHECK(count_nontrivial_minors(p, 2) == 36 + 318);

    std::size_t seen = 0;
    const bool finished = for_each_nontrivial_minor(p, 6, [&](const MinorIndex&) {
        return ++seen < 40;
    });
    CHECK_FALSE(finished);
    CHECK(seen == 40);

    seen = 0;
    CHECK(for_each_nontrivial_minor(p, 1, [&](const MinorIndex&) {
        ++seen;
        return true;
    }));
    CHECK(seen == 36);
}

TEST_CASE("degenerate patterns") {
    // a pattern with a fully zero row still enumerates the rest
    BandPattern p{2, 2, {0, 2}};
    CHECK_NOTHROW(p.validate());
    const auto got = collect(p, 2);
    REQUIRE(got.size() == 2);  // ({1},{0}) and ({1},{1}); no order-2 minors
    CHECK(got[0].rows == std::vector<std::size_t>{1});
    CHECK(got[1].cols == std::vector<std::size_t>{1});

    // empty-band pattern has no nontrivial minors
    BandPattern z{2, 2, {0, 0}};
    CHECK(count_nontrivial_minors(z, 2) == 0);
}
