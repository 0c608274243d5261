#include <doctest.h>

#include <vector>

#include "srmdp/superregular.hpp"

using namespace srmdp;

namespace {

bool reports_equal(const SuperregularReport& a, const SuperregularReport& b) {
    if (a.verdict != b.verdict || a.minors_checked != b.minors_checked ||
        a.max_order_checked != b.max_order_checked || a.witnesses.size() != b.witnesses.size())
        return false;
    for (std::size_t i = 0; i < a.witnesses.size(); ++i) {
        if (a.witnesses[i].index.rows != b.witnesses[i].index.rows) return false;
        if (a.witnesses[i].index.cols != b.witnesses[i].index.cols) return false;
        if (a.witnesses[i].determinant != b.witnesses[i].determinant) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("CodeParams derives M, L, nu and validates") {
    CodeParams p523(5, 2, 3);
    CHECK(p523.M == 3);
    CHECK(p523.nu == 1);
    CHECK(p523.L == 2);

    CodeParams p211(2, 1, 1);
    CHECK(p211.M == 1);
    CHECK(p211.nu == 1);
    CHECK(p211.L == 2);

    CodeParams p322(3, 2, 2);
    CHECK(p322.M == 2);
    CHECK(p322.nu == 2);
    CHECK(p322.L == 3);

    CodeParams p320(3, 2, 0);  // delta = 0 is allowed
    CHECK(p320.nu == 0);
    CHECK(p320.L == 0);

    CHECK_THROWS_AS(CodeParams(2, 2, 1), ParamsInvalid);  // k = n
    CHECK_THROWS_AS(CodeParams(2, 0, 1), ParamsInvalid);  // k = 0
    CHECK_THROWS_AS(CodeParams(3, 1, 3), ParamsInvalid);  // (n-k) does not divide delta
    CHECK_THROWS_AS(CodeParams(1, 1, 0), ParamsInvalid);
}

TEST_CASE("exponent matrices: doubling structure and patterns") {
    CodeParams P(5, 2, 3);
    ExponentMatrix row = exponents_block_row(P);
    CHECK(row.rows == 3);
    CHECK(row.cols == 9);
    for (std::size_t i = 0; i < row.rows; ++i)
        for (std::size_t j = 0; j < row.cols; ++j) {
            REQUIRE(row.present(i, j));
            CHECK(row.at(i, j) == static_cast<std::int64_t>(i + j));
        }
    CHECK(row.max_exponent() == 10);

    ExponentMatrix full = exponents_full(P);
    BandPattern pf = pattern_full(P);
    CHECK(full.rows == 9);
    CHECK(full.cols == 9);
    CHECK(pf.rows == 9);
    CHECK(pf.cols == 9);
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = 0; j < 9; ++j) {
            CHECK(full.present(i, j) == pf.in_band(i, j));
            if (full.present(i, j)) {
                const std::size_t bi = i / 3, bj = j / 3;
                CHECK(full.at(i, j) ==
                      static_cast<std::int64_t>((bi - bj) * 3 + (i % 3) + (j % 3)));
            }
        }
    CHECK(full.max_exponent() == 10);

    ExponentMatrix par = exponents_parity(P);
    BandPattern pp = pattern_parity(P);
    CHECK(par.rows == 9);  // (L+1)(n-k)
    CHECK(par.cols == 6);  // (L+1)k
    for (std::size_t i = 0; i < par.rows; ++i)
        for (std::size_t j = 0; j < par.cols; ++j)
            CHECK(par.present(i, j) == pp.in_band(i, j));
    CHECK(par.max_exponent() == 9);
}

TEST_CASE("builders realize alpha^(2^e) on the nose") {
    CodeParams P(3, 2, 2);
    auto f = Field::make_auto(2, 10);
    const auto blocks = build_superregular_blocks(P, f);
    REQUIRE(blocks.size() == P.L + 1);
    for (const Matrix& b : blocks) {
        CHECK(b.rows() == P.M);
        CHECK(b.cols() == P.M);
    }
    // concatenated row [C_0 | ... | C_L] must be alpha^(2^(i+j))
    for (std::size_t ell = 0; ell <= P.L; ++ell)
        for (std::size_t i = 0; i < P.M; ++i)
            for (std::size_t j = 0; j < P.M; ++j)
                CHECK(blocks[ell].at(i, j) == pow2exp(*f, i + ell * P.M + j));

    // full arrangement agrees with the exponent matrix entry by entry
    Matrix T = block_toeplitz(blocks);
    ExponentMatrix full = exponents_full(P);
    REQUIRE(T.rows() == full.rows);
    REQUIRE(T.cols() == full.cols);
    for (std::size_t i = 0; i < T.rows(); ++i)
        for (std::size_t j = 0; j < T.cols(); ++j) {
            if (full.present(i, j))
                CHECK(T.at(i, j) == pow2exp(*f, static_cast<std::uint64_t>(full.at(i, j))));
            else
                CHECK(T.at(i, j).is_zero());
        }

    // moving one step right or down squares the entry inside a block row
    for (std::size_t i = 0; i < P.M; ++i)
        for (std::size_t jg = 0; jg + 1 < (P.L + 1) * P.M; ++jg) {
            const FieldElement left = blocks[jg / P.M].at(i, jg % P.M);
            const FieldElement right = blocks[(jg + 1) / P.M].at(i, (jg + 1) % P.M);
            CHECK(right == mul(left, left));
        }

    // parity seeds are the top-left corners
    const auto seeds = build_parity_seed_blocks(P, f);
    REQUIRE(seeds.size() == P.L + 1);
    for (std::size_t ell = 0; ell <= P.L; ++ell) {
        CHECK(seeds[ell].rows() == P.n - P.k);
        CHECK(seeds[ell].cols() == P.k);
        for (std::size_t i = 0; i < P.n - P.k; ++i)
            for (std::size_t j = 0; j < P.k; ++j)
                CHECK(seeds[ell].at(i, j) == blocks[ell].at(i, j));
    }
}

TEST_CASE("check_superregular on the (2,1,1) arrangement") {
    CodeParams P(2, 1, 1);
    BandPattern pat = pattern_full(P);

    auto f4 = Field::make(2, {1, 1, 1}, true);
    Matrix t4 = block_toeplitz(build_superregular_blocks(P, f4));
    SuperregularReport r4 = check_superregular(t4, pat);
    CHECK(r4.verdict == Verdict::superregular);
    CHECK(r4.minors_checked == 13);
    CHECK(r4.max_order_checked == 3);
    CHECK(r4.witnesses.empty());

    // over GF(2) the same arrangement collapses: alpha = 1
    auto f2 = Field::make(2, {1, 1}, true);
    Matrix t2 = block_toeplitz(build_superregular_blocks(P, f2));
    SuperregularReport r2 = check_superregular(t2, pat);
    CHECK(r2.verdict == Verdict::not_superregular);
    CHECK(r2.minors_checked == 10);
    REQUIRE(r2.witnesses.size() == 1);
    CHECK(r2.witnesses[0].index.rows == std::vector<std::size_t>{1, 2});
    CHECK(r2.witnesses[0].index.cols == std::vector<std::size_t>{0, 1});
    CHECK(r2.witnesses[0].determinant.is_zero());

    // collect_all keeps enumerating to the end
    SuperregularReport rall = check_superregular(t2, pat, {.collect_all = true});
    CHECK(rall.verdict == Verdict::not_superregular);
    CHECK(rall.minors_checked == 13);
    CHECK(rall.witnesses.size() == 1);  // rows {1,2} x cols {0,1} is the only zero

    // order cap without a witness is inconclusive
    SuperregularReport rcap = check_superregular(t2, pat, {.max_order = 1});
    CHECK(rcap.verdict == Verdict::incomplete);
    CHECK(rcap.max_order_checked == 1);
    CHECK(rcap.minors_checked == 6);
}

TEST_CASE("binomial Toeplitz matrices across primes") {
    auto f5 = Field::make_prime_field(5);
    Matrix s3 = binomial_toeplitz(f5, 3);
    REQUIRE(s3.rows() == 3);
    // first column 1, 2, 1 (binomials of row 2), constant along diagonals
    CHECK(s3.at(0, 0) == f5->one());
    CHECK(s3.at(1, 0) == f5->from_index(BigInt(2)));
    CHECK(s3.at(2, 0) == f5->one());
    CHECK(s3.at(1, 1) == f5->one());
    CHECK(s3.at(2, 1) == f5->from_index(BigInt(2)));
    CHECK(s3.at(0, 1).is_zero());
    CHECK(s3.at(0, 2).is_zero());

    BandPattern lt3 = BandPattern::lower_triangular(3);

    SuperregularReport r5 = check_superregular(s3, lt3);
    CHECK(r5.verdict == Verdict::superregular);
    CHECK(r5.minors_checked == 13);

    auto f2 = Field::make_prime_field(2);
    SuperregularReport r2 = check_superregular(binomial_toeplitz(f2, 3), lt3);
    CHECK(r2.verdict == Verdict::not_superregular);
    CHECK(r2.minors_checked == 2);  // entry (1,0) = 2 = 0 mod 2
    REQUIRE(r2.witnesses.size() == 1);
    CHECK(r2.witnesses[0].index.rows == std::vector<std::size_t>{1});
    CHECK(r2.witnesses[0].index.cols == std::vector<std::size_t>{0});

    auto f3 = Field::make_prime_field(3);
    SuperregularReport r3 = check_superregular(binomial_toeplitz(f3, 3), lt3);
    CHECK(r3.verdict == Verdict::not_superregular);
    CHECK(r3.minors_checked == 10);  // dies at the [[2,1],[1,2]] minor
    REQUIRE(r3.witnesses.size() == 1);
    CHECK(r3.witnesses[0].index.rows == std::vector<std::size_t>{1, 2});
    CHECK(r3.witnesses[0].index.cols == std::vector<std::size_t>{0, 1});
}

TEST_CASE("check_superregular is thread-count invariant") {
    CodeParams P(5, 2, 3);
    auto f = Field::make_auto(2, 11);  // theorem bound for (5,2,3)
    Matrix h = block_toeplitz(build_parity_seed_blocks(P, f));
    BandPattern pat = pattern_parity(P);

    SuperregularReport r1 = check_superregular(h, pat, {.threads = 1});
    SuperregularReport r4 = check_superregular(h, pat, {.threads = 4});
    CHECK(r1.verdict == Verdict::superregular);
    CHECK(r1.minors_checked == 2884);
    CHECK(reports_equal(r1, r4));

    // a failing case must stop at the same first witness on any thread count
    auto f3 = Field::make_prime_field(3);
    Matrix s5 = binomial_toeplitz(f3, 5);
    BandPattern lt5 = BandPattern::lower_triangular(5);
    SuperregularReport a = check_superregular(s5, lt5, {.threads = 1});
    SuperregularReport b = check_superregular(s5, lt5, {.threads = 4});
    CHECK(a.verdict == Verdict::not_superregular);
    CHECK(reports_equal(a, b));
}

TEST_CASE("pattern mismatches are rejected") {
    CodeParams P(2, 1, 1);
    auto f = Field::make(2, {1, 1, 1}, true);
    BandPattern pat = pattern_full(P);

    Matrix wrong(f, 2, 3);
    CHECK_THROWS_AS(check_superregular(wrong, pat), PatternMismatch);

    Matrix t = block_toeplitz(build_superregular_blocks(P, f));
    t.at(0, 2) = f->one();  // nonzero above the band
    CHECK_THROWS_AS(check_superregular(t, pat), PatternMismatch);
}

TEST_CASE("trivial-minor oracle") {
    auto f = Field::make_prime_field(7);
    Matrix m(f, 2, 2);
    m.at(0, 0) = f->one();
    m.at(1, 0) = f->one();
    CHECK(is_trivial_minor_oracle(m));  // second column is all zero
    m.at(1, 1) = f->one();
    CHECK_FALSE(is_trivial_minor_oracle(m));  // diagonal transversal exists
    // a nonzero antidiagonal is enough
    Matrix a(f, 2, 2);
    a.at(0, 1) = f->one();
    a.at(1, 0) = f->one();
    CHECK_FALSE(is_trivial_minor_oracle(a));

    CHECK_THROWS_AS(is_trivial_minor_oracle(Matrix(f, 9, 9), 8), BudgetExceeded);
}

TEST_CASE("unique maximum exponent check") {
    // (2,1,1) full arrangement: every nontrivial minor has a strict maximum
    CodeParams P(2, 1, 1);
    UniqueMaxResult ok = unique_max_exponent_check(exponents_full(P), pattern_full(P));
    CHECK(ok.ok);
    CHECK(ok.minors_checked == 13);
    CHECK_FALSE(ok.violation.has_value());

    CHECK(unique_max_exponent_check(exponents_parity(CodeParams(3, 2, 2)),
                                    pattern_parity(CodeParams(3, 2, 2)))
              .ok);

    // a doctored matrix with a tied maximum is caught
    ExponentMatrix tie;
    tie.rows = tie.cols = 2;
    tie.e = {0, 1, 0, 1};  // both transversals sum to 2^0 + 2^1
    BandPattern full2{2, 2, {2, 2}};
    UniqueMaxResult bad = unique_max_exponent_check(tie, full2);
    CHECK_FALSE(bad.ok);
    CHECK(bad.minors_checked == 5);  // four order-1 minors, then the tie
    REQUIRE(bad.violation.has_value());
    CHECK(bad.violation->rows == std::vector<std::size_t>{0, 1});
    CHECK(bad.violation->cols == std::vector<std::size_t>{0, 1});
}

TEST_CASE("field size bounds") {
    CodeParams p211(2, 1, 1), p322(3, 2, 2), p523(5, 2, 3);

    CHECK(theorem_field_bound(p211) == 8);
    CHECK(theorem_field_bound(p322) == 512);
    CHECK(theorem_field_bound(p523) == 2048);
    CHECK(theorem_field_bound_log2(p211) == 3);
    CHECK(theorem_field_bound_log2(p322) == 9);
    CHECK(theorem_field_bound_log2(p523) == 11);

    CHECK(corollary_field_bound_log2(p211) == 3);
    CHECK(corollary_field_bound_log2(p322) == 9);
    CHECK(corollary_field_bound_log2(p523) == 12);
    CHECK(corollary_field_bound(p523) == 4096);

    EntryBound full523 = entry_field_bound(exponents_full(p523));
    CHECK(full523.e_max == 10);
    CHECK(full523.n_power_of_two == 2048);
    CHECK(full523.n_exact_ceiling == 1366);

    EntryBound par523 = entry_field_bound(exponents_parity(p523));
    CHECK(par523.e_max == 9);
    CHECK(par523.n_power_of_two == 1024);
    CHECK(par523.n_exact_ceiling == 683);

    // (2,1,2): full arrangement reaches e = 4
    EntryBound full212 = entry_field_bound(exponents_full(CodeParams(2, 1, 2)));
    CHECK(full212.e_max == 4);
    CHECK(full212.n_power_of_two == 32);
    CHECK(full212.n_exact_ceiling == 22);
}

TEST_CASE("combinatorial bounds") {
    CHECK(hutchinson_bound(2) == 1);
    CHECK(hutchinson_bound(3) == 2);
    CHECK(hutchinson_bound(4) == 4);
    CHECK(hutchinson_bound(5) == 10);
    CHECK(hutchinson_bound(6) == 26);
    CHECK(hutchinson_bound(7) == 76);
    CHECK(hutchinson_bound(8) == 232);

    CHECK(gl_generic_bound(1, 2) == 2);
    CHECK(gl_generic_bound(1, 3) == 6);
    CHECK(gl_generic_bound(1, 4) == 16);
    CHECK(gl_generic_bound(1, 5) == 56);
    CHECK(gl_generic_bound(1, 6) == 216);
    CHECK(gl_generic_bound(1, 7) == 908);
    CHECK(gl_generic_bound(1, 8) == 4096);
}

TEST_CASE("min_field_search walks degrees and reports attempts") {
    CodeParams P(2, 1, 1);

    MinFieldResult r2 = min_field_search(P, 2, 5, Target::full, {});
    REQUIRE(r2.found_N.has_value());
    CHECK(*r2.found_N == 2);
    REQUIRE(r2.attempts.size() == 2);
    CHECK(r2.attempts[0].N == 1);
    CHECK(r2.attempts[0].verdict == Verdict::not_superregular);
    REQUIRE(r2.attempts[0].witness.has_value());
    CHECK(r2.attempts[0].witness->index.rows == std::vector<std::size_t>{1, 2});
    CHECK(r2.attempts[1].N == 2);
    CHECK(r2.attempts[1].verdict == Verdict::superregular);
    CHECK(r2.report.verdict == Verdict::superregular);

    MinFieldResult r3 = min_field_search(P, 3, 5, Target::full, {});
    REQUIRE(r3.found_N.has_value());
    CHECK(*r3.found_N == 1);

    // an unreachable cap reports not found with all attempts negative
    MinFieldResult none = min_field_search(CodeParams(5, 2, 3), 2, 2, Target::parity, {});
    CHECK_FALSE(none.found_N.has_value());
    CHECK(none.attempts.size() == 2);
    for (const auto& a : none.attempts) CHECK(a.verdict == Verdict::not_superregular);
}
