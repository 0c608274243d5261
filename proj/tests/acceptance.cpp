// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "srmdp/convcode.hpp"
#include "srmdp/intmath.hpp"
#include "srmdp/serialize.hpp"
#include "srmdp/superregular.hpp"

using namespace srmdp;

namespace {

int failures = 0;

void criterion(int idx, const char* what, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (exception: ") + e.what() + ")";
    }
    std::printf("%s  criterion %d: %s%s\n", ok ? "PASS" : "FAIL", idx, what, note.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

FieldPtr example_field_2_1024() {
    std::vector<std::uint32_t> coeffs(1025, 0);
    coeffs[0] = coeffs[36] = coeffs[37] = coeffs[39] = coeffs[1024] = 1;
    return Field::make(2, coeffs, true);
}

bool require(bool cond, const char* msg) {
    if (!cond) std::printf("      failed: %s\n", msg);
    return cond;
}

// all in-band index pairs of order <= cap, via the streaming enumerator
std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> enumerate_nontrivial(
    const BandPattern& pat, std::size_t cap) {
    std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> out;
    for_each_nontrivial_minor(pat, cap, [&](const MinorIndex& m) {
        out.emplace(m.rows, m.cols);
        return true;
    });
    return out;
}

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

bool oracle_matches_enumerator(const CodeParams& P, const FieldPtr& f, std::size_t cap) {
    const Matrix m = block_toeplitz(build_superregular_blocks(P, f));
    const BandPattern pat = pattern_full(P);
    cap = std::min(cap, std::min(pat.rows, pat.cols));
    const auto nontrivial = enumerate_nontrivial(pat, cap);
    std::uint64_t checked = 0;
    for (std::size_t r = 1; r <= cap; ++r) {
        std::vector<std::vector<std::size_t>> rs, cs;
        combos(pat.rows, r, rs);
        combos(pat.cols, r, cs);
        for (const auto& I : rs)
            for (const auto& J : cs) {
                const bool listed = nontrivial.count({I, J}) != 0;
                const bool trivial = is_trivial_minor_oracle(submatrix(m, I, J));
                if (listed == trivial) return false;  // must be exact complements
                ++checked;
            }
    }
    return checked > 0;
}

}  // namespace

int main() {
    criterion(1, "the (5,2,3) construction over GF(2^1024): solved recursion and 2884-minor check",
              [] {
        const CodeParams P(5, 2, 3);
        const FieldPtr f = example_field_2_1024();

        // seed blocks carry the doubling tower alpha^(2^(3*l + i + j))
        const std::vector<Matrix> seeds = build_parity_seed_blocks(P, f);
        if (!require(seeds.size() == 3, "expected 3 seed blocks")) return false;
        for (std::size_t l = 0; l < 3; ++l)
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 2; ++j)
                    if (!require(seeds[l].at(i, j) == pow2exp(*f, 3 * l + i + j),
                                 "seed entry is not the expected power"))
                        return false;

        const ConvCode code = mdp_construct(P, seeds);
        validate_code(code);
        const Matrix& A1 = code.A.coeff(1);

        // the defining equation and the zero third column from the free unknowns
        if (!require(mat_mul(A1, seeds[1]) == mat_neg(seeds[2]), "A_1 H_1 != -H_2")) return false;
        for (std::size_t r = 0; r < 3; ++r)
            if (!require(A1.at(r, 2).is_zero(), "A_1 third column not zero")) return false;

        // entrywise Cramer cross-check of the 2x2 solve per row
        const FieldElement h11 = seeds[1].at(0, 0), h12 = seeds[1].at(0, 1);
        const FieldElement h21 = seeds[1].at(1, 0), h22 = seeds[1].at(1, 1);
        const FieldElement D = sub(mul(h11, h22), mul(h12, h21));
        const FieldElement Dinv = inv(D);
        for (std::size_t r = 0; r < 3; ++r) {
            const FieldElement b1 = neg(seeds[2].at(r, 0)), b2 = neg(seeds[2].at(r, 1));
            const FieldElement x = mul(sub(mul(b1, h22), mul(b2, h21)), Dinv);
            const FieldElement y = mul(sub(mul(h11, b2), mul(h12, b1)), Dinv);
            if (!require(A1.at(r, 0) == x && A1.at(r, 1) == y, "Cramer mismatch")) return false;
        }

        if (!require(laurent_expansion(code, P.L) == seeds, "series does not reproduce seeds"))
            return false;

        const MdpEvidence ev = is_mdp(code, MdpMethod::superregular);
        return require(ev.mdp, "code not MDP") && require(ev.sr_report.has_value(), "no report") &&
               require(ev.sr_report->verdict == Verdict::superregular, "not superregular") &&
               require(ev.sr_report->minors_checked == 2884, "wrong minor count");
    });

    criterion(2, "(2,1,1): the guaranteed field GF(8) works, the search finds the minimum GF(4)",
              [] {
        const CodeParams P(2, 1, 1);
        if (!require(theorem_field_bound(P) == 8, "guaranteed size is not 8")) return false;

        const FieldPtr f8 = Field::make(2, find_primitive_poly(2, 3), true);
        const SuperregularReport rep =
            check_superregular(block_toeplitz(build_superregular_blocks(P, f8)), pattern_full(P));
        if (!require(rep.verdict == Verdict::superregular && rep.minors_checked == 13,
                     "GF(8) arrangement not superregular over all 13 minors"))
            return false;

        const MinFieldResult res = min_field_search(P, 2, 16, Target::full);
        return require(res.found_N.has_value() && *res.found_N == 2, "minimum is not N = 2") &&
               require(res.attempts.size() == 2, "expected exactly two attempts") &&
               require(res.attempts[0].verdict == Verdict::not_superregular &&
                           res.attempts[0].witness.has_value(),
                       "GF(2) attempt must fail with a witness");
    });

    criterion(3, "exhaustive-distance and superregularity MDP verdicts agree on 50+ random codes",
              [] {
        std::mt19937_64 rng(20260814);
        const std::vector<CodeParams> params{CodeParams(2, 1, 1), CodeParams(3, 2, 2)};
        std::vector<FieldPtr> fields;
        fields.push_back(Field::make(2, {1, 1, 1}, true));
        fields.push_back(Field::make(2, {1, 1, 0, 1}, true));
        int checked = 0, mdp_seen = 0, non_mdp_seen = 0;
        for (const CodeParams& P : params)
            for (const FieldPtr& f : fields)
                for (int rep = 0; rep < 15; ++rep) {
                    ConvCode code;
                    try {
                        code = mdp_construct(P, random_seed_blocks(P, f, rng));
                    } catch (const Inconsistent&) {
                        continue;  // that seed set admits no such code
                    }
                    const MdpEvidence d = is_mdp(code, MdpMethod::distance);
                    const MdpEvidence s = is_mdp(code, MdpMethod::superregular);
                    if (!require(d.mdp == s.mdp, "methods disagree")) return false;
                    ++checked;
                    (d.mdp ? mdp_seen : non_mdp_seen)++;
                }
        // both outcomes must actually occur for the agreement to mean anything
        return require(checked >= 50, "fewer than 50 codes checked") &&
               require(mdp_seen > 0 && non_mdp_seen > 0, "one-sided sample");
    });

    criterion(4, "the (2,1,1) code over GF(4) attains column distances 2, 3, 4", [] {
        const CodeParams P(2, 1, 1);
        const FieldPtr f = Field::make(2, {1, 1, 1}, true);
        const ConvCode code = mdp_construct(P, build_parity_seed_blocks(P, f));
        const ColumnDistanceProfile prof = distance_profile(code);
        if (!require(prof.per_j.size() == 3, "expected three distances")) return false;
        for (std::size_t j = 0; j < 3; ++j) {
            if (!require(prof.per_j[j].distance == j + 2, "unexpected distance")) return false;
            if (!require(prof.per_j[j].witness.size() == (j + 1) * 2, "bad witness length"))
                return false;
        }
        return require(prof.mdp, "profile must conclude MDP");
    });

    criterion(5, "unique-maximum exponent argument holds for all 55 parameter sets, both targets",
              [] {
        std::size_t sets = 0;
        for (std::size_t n = 2; n <= 13; ++n)
            for (std::size_t k = 1; k < n; ++k)
                for (std::size_t delta = 0; delta <= 26; delta += n - k) {
                    const CodeParams P(n, k, delta);
                    if (P.M * (P.L + 2) > 12) continue;
                    ++sets;
                    const UniqueMaxResult full =
                        unique_max_exponent_check(exponents_full(P), pattern_full(P), 4);
                    const UniqueMaxResult parity =
                        unique_max_exponent_check(exponents_parity(P), pattern_parity(P), 4);
                    if (!require(full.ok && full.minors_checked > 0, "full target violated"))
                        return false;
                    if (!require(parity.ok && parity.minors_checked > 0, "parity target violated"))
                        return false;
                }
        return require(sets == 55, "expected exactly 55 parameter sets");
    });

    criterion(6, "closed-form bounds: binomial table, guaranteed sizes, entry refinement", [] {
        const BigInt hutch[] = {BigInt(1), BigInt(2), BigInt(4), BigInt(10)};
        for (std::size_t r = 2; r <= 5; ++r)
            if (!require(hutchinson_bound(r) == hutch[r - 2], "binomial bound wrong")) return false;
        return require(theorem_field_bound(CodeParams(2, 1, 1)) == 8, "size for (2,1,1)") &&
               require(theorem_field_bound(CodeParams(3, 2, 2)) == 512, "size for (3,2,2)") &&
               require(theorem_field_bound(CodeParams(5, 2, 3)) == 2048, "size for (5,2,3)") &&
               require(entry_field_bound(exponents_parity(CodeParams(5, 2, 3))).n_power_of_two ==
                           1024,
                       "parity entry refinement for (5,2,3)");
    });

    criterion(7, "band enumeration equals the trivial-minor oracle, exhaustively to order 4", [] {
        const FieldPtr f = Field::make(2, {1, 1, 1}, true);
        return require(oracle_matches_enumerator(CodeParams(2, 1, 1), f, 4), "(2,1,1) mismatch") &&
               require(oracle_matches_enumerator(CodeParams(3, 2, 2), f, 4), "(3,2,2) mismatch");
    });

    criterion(8, "the binomial Toeplitz matrix of order 3 needs GF(5)", [] {
        const BandPattern pat = BandPattern::lower_triangular(3);

        const SuperregularReport r2 =
            check_superregular(binomial_toeplitz(Field::make_prime_field(2), 3), pat);
        if (!require(r2.verdict == Verdict::not_superregular, "GF(2) must fail")) return false;
        if (!require(r2.witnesses.size() == 1 &&
                         r2.witnesses[0].index.rows == std::vector<std::size_t>{1} &&
                         r2.witnesses[0].index.cols == std::vector<std::size_t>{0},
                     "GF(2) witness must be the even entry C(2,1)"))
            return false;

        const SuperregularReport r3 =
            check_superregular(binomial_toeplitz(Field::make_prime_field(3), 3), pat);
        if (!require(r3.verdict == Verdict::not_superregular, "GF(3) must fail")) return false;
        if (!require(r3.witnesses.size() == 1 &&
                         r3.witnesses[0].index.rows == (std::vector<std::size_t>{1, 2}) &&
                         r3.witnesses[0].index.cols == (std::vector<std::size_t>{0, 1}),
                     "GF(3) witness must be the lower-left 2x2 minor"))
            return false;

        const SuperregularReport r5 =
            check_superregular(binomial_toeplitz(Field::make_prime_field(5), 3), pat);
        return require(r5.verdict == Verdict::superregular && r5.minors_checked == 13,
                       "GF(5) must pass all 13 minors");
    });

    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}
