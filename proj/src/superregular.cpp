#include "srmdp/superregular.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "srmdp/intmath.hpp"

namespace srmdp {

CodeParams::CodeParams(std::size_t n_, std::size_t k_, std::size_t delta_)
    : n(n_), k(k_), delta(delta_) {
    if (k == 0 || k >= n)
        throw ParamsInvalid("params require 0 < k < n, got n=" + std::to_string(n) +
                            " k=" + std::to_string(k));
    const std::size_t nk = n - k;
    if (delta % nk != 0)
        throw ParamsInvalid("(n - k) must divide delta, got n-k=" + std::to_string(nk) +
                            " delta=" + std::to_string(delta));
    M = std::max(nk, k);
    L = delta / k + delta / nk;
    nu = delta / nk;
}

std::int64_t ExponentMatrix::max_exponent() const {
    std::int64_t best = -1;
    for (std::int64_t v : e) best = std::max(best, v);
    return best;
}

ExponentMatrix exponents_block_row(const CodeParams& params) {
    ExponentMatrix x;
    x.rows = params.M;
    x.cols = (params.L + 1) * params.M;
    x.e.resize(x.rows * x.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j)
            x.e[i * x.cols + j] = static_cast<std::int64_t>(i + j);
    return x;
}

namespace {

ExponentMatrix block_toeplitz_exponents(const CodeParams& params, std::size_t br, std::size_t bc) {
    ExponentMatrix x;
    x.rows = (params.L + 1) * br;
    x.cols = (params.L + 1) * bc;
    x.e.assign(x.rows * x.cols, -1);
    for (std::size_t i = 0; i < x.rows; ++i) {
        const std::size_t bi = i / br, li = i % br;
        for (std::size_t j = 0; j < x.cols; ++j) {
            const std::size_t bj = j / bc, lj = j % bc;
            if (bi >= bj)
                x.e[i * x.cols + j] =
                    static_cast<std::int64_t>((bi - bj) * params.M + li + lj);
        }
    }
    return x;
}

// alpha^(2^t) for t = 0 ... count-1, by successive squaring
std::vector<FieldElement> alpha_tower(const FieldPtr& field, std::size_t count) {
    std::vector<FieldElement> vals;
    vals.reserve(count);
    FieldElement w = field->alpha();
    for (std::size_t t = 0; t < count; ++t) {
        vals.push_back(w);
        w = mul(w, w);
    }
    return vals;
}

}  // namespace

ExponentMatrix exponents_full(const CodeParams& params) {
    return block_toeplitz_exponents(params, params.M, params.M);
}

ExponentMatrix exponents_parity(const CodeParams& params) {
    return block_toeplitz_exponents(params, params.n - params.k, params.k);
}

BandPattern pattern_full(const CodeParams& params) {
    return BandPattern::block_lower_toeplitz(params.M, params.M, params.L + 1);
}

BandPattern pattern_parity(const CodeParams& params) {
    return BandPattern::block_lower_toeplitz(params.n - params.k, params.k, params.L + 1);
}

std::vector<Matrix> build_superregular_blocks(const CodeParams& params, const FieldPtr& field) {
    const std::size_t M = params.M;
    const auto vals = alpha_tower(field, M * (params.L + 2) - 1);
    std::vector<Matrix> blocks;
    blocks.reserve(params.L + 1);
    for (std::size_t ell = 0; ell <= params.L; ++ell) {
        Matrix b(field, M, M);
        for (std::size_t i = 0; i < M; ++i)
            for (std::size_t j = 0; j < M; ++j) b.at(i, j) = vals[i + ell * M + j];
        blocks.push_back(std::move(b));
    }
    return blocks;
}

std::vector<Matrix> build_parity_seed_blocks(const CodeParams& params, const FieldPtr& field) {
    const std::size_t M = params.M, rows = params.n - params.k, cols = params.k;
    const auto vals = alpha_tower(field, params.L * M + rows + cols - 1);
    std::vector<Matrix> blocks;
    blocks.reserve(params.L + 1);
    for (std::size_t ell = 0; ell <= params.L; ++ell) {
        Matrix b(field, rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) b.at(i, j) = vals[i + ell * M + j];
        blocks.push_back(std::move(b));
    }
    return blocks;
}

Matrix block_toeplitz(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) throw ShapeMismatch("block_toeplitz: no blocks");
    const std::size_t br = blocks.front().rows(), bc = blocks.front().cols();
    const FieldPtr& field = blocks.front().field();
    for (const Matrix& b : blocks) {
        if (b.rows() != br || b.cols() != bc)
            throw ShapeMismatch("block_toeplitz: blocks differ in shape");
        if (b.field().get() != field.get())
            throw MixedFields("block_toeplitz: blocks over different fields");
    }
    const std::size_t q = blocks.size();
    Matrix m(field, q * br, q * bc);
    for (std::size_t bi = 0; bi < q; ++bi)
        for (std::size_t bj = 0; bj <= bi; ++bj) {
            const Matrix& b = blocks[bi - bj];
            for (std::size_t i = 0; i < br; ++i)
                for (std::size_t j = 0; j < bc; ++j)
                    m.at(bi * br + i, bj * bc + j) = b.at(i, j);
        }
    return m;
}

Matrix binomial_toeplitz(const FieldPtr& field, std::size_t r) {
    if (r == 0) throw ParamsInvalid("binomial_toeplitz: order must be positive");
    Matrix m(field, r, r);
    for (std::size_t d = 0; d < r; ++d) {
        const BigInt residue = binomial_bigint(r - 1, d) % field->p();
        const FieldElement v = field->from_index(residue);
        for (std::size_t i = d; i < r; ++i) m.at(i, i - d) = v;
    }
    return m;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::superregular: return "superregular";
        case Verdict::not_superregular: return "not-superregular";
        case Verdict::incomplete: return "incomplete";
    }
    return "?";
}

std::string to_string(Target t) {
    return t == Target::full ? "full" : "parity";
}

namespace {

void require_pattern_match(const Matrix& m, const BandPattern& pattern) {
    pattern.validate();
    if (m.rows() != pattern.rows || m.cols() != pattern.cols)
        throw PatternMismatch("matrix shape differs from pattern");
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = pattern.band[r]; c < m.cols(); ++c)
            if (!m.at(r, c).is_zero())
                throw PatternMismatch("nonzero entry outside the band at (" +
                                      std::to_string(r + 1) + ", " + std::to_string(c + 1) + ")");
}

}  // namespace

SuperregularReport check_superregular(const Matrix& m, const BandPattern& pattern,
                                      const CheckOptions& opts) {
    require_pattern_match(m, pattern);
    const std::size_t full = std::min(m.rows(), m.cols());
    const std::size_t top = opts.max_order == 0 ? full : std::min(opts.max_order, full);

    SuperregularReport report;
    report.max_order_checked = top;

    if (opts.threads <= 1) {
        for_each_nontrivial_minor(pattern, top, [&](const MinorIndex& idx) {
            ++report.minors_checked;
            FieldElement d = det(submatrix(m, idx.rows, idx.cols));
            if (d.is_zero()) {
                report.witnesses.push_back({idx, std::move(d)});
                return opts.collect_all;
            }
            return true;
        });
    } else {
        // Evaluate canonical batches in parallel, merge strictly in order so
        // the report is identical to the single-threaded one.
        constexpr std::size_t kBatch = 512;
        std::vector<MinorIndex> batch;
        batch.reserve(kBatch);
        auto flush = [&]() -> bool {
            std::vector<FieldElement> dets(batch.size(), m.field()->zero());
            std::atomic<std::size_t> cursor{0};
            auto worker = [&]() {
                for (;;) {
                    const std::size_t i = cursor.fetch_add(1);
                    if (i >= batch.size()) break;
                    dets[i] = det(submatrix(m, batch[i].rows, batch[i].cols));
                }
            };
            std::vector<std::thread> pool;
            for (unsigned t = 1; t < opts.threads; ++t) pool.emplace_back(worker);
            worker();
            for (std::thread& th : pool) th.join();
            for (std::size_t i = 0; i < batch.size(); ++i) {
                ++report.minors_checked;
                if (dets[i].is_zero()) {
                    report.witnesses.push_back({batch[i], std::move(dets[i])});
                    if (!opts.collect_all) return false;
                }
            }
            batch.clear();
            return true;
        };
        const bool completed = for_each_nontrivial_minor(pattern, top, [&](const MinorIndex& idx) {
            batch.push_back(idx);
            return batch.size() < kBatch ? true : flush();
        });
        if (completed && !batch.empty()) flush();
    }

    if (!report.witnesses.empty())
        report.verdict = Verdict::not_superregular;
    else if (top < full)
        report.verdict = Verdict::incomplete;
    else
        report.verdict = Verdict::superregular;
    return report;
}

namespace {

bool has_nonzero_transversal(const Matrix& m, std::size_t row, std::uint64_t used) {
    const std::size_t n = m.rows();
    if (row == n) return true;
    for (std::size_t c = 0; c < n; ++c)
        if (!(used & (1ull << c)) && !m.at(row, c).is_zero() &&
            has_nonzero_transversal(m, row + 1, used | (1ull << c)))
            return true;
    return false;
}

}  // namespace

bool is_trivial_minor_oracle(const Matrix& m, std::size_t order_limit) {
    if (m.rows() != m.cols()) throw ShapeMismatch("is_trivial_minor_oracle: square input required");
    const std::size_t limit = std::min<std::size_t>(order_limit, 63);
    if (m.rows() > limit)
        throw BudgetExceeded("is_trivial_minor_oracle: order exceeds limit", BigInt(m.rows()),
                             BigInt(limit));
    return !has_nonzero_transversal(m, 0, 0);
}

UniqueMaxResult unique_max_exponent_check(const ExponentMatrix& exps, const BandPattern& pattern,
                                          std::size_t max_order) {
    pattern.validate();
    if (exps.rows != pattern.rows || exps.cols != pattern.cols)
        throw PatternMismatch("exponent matrix shape differs from pattern");
    for (std::size_t r = 0; r < exps.rows; ++r)
        for (std::size_t c = 0; c < exps.cols; ++c)
            if (exps.present(r, c) != pattern.in_band(r, c))
                throw PatternMismatch("exponent presence disagrees with the band at (" +
                                      std::to_string(r + 1) + ", " + std::to_string(c + 1) + ")");

    const std::size_t full = std::min(exps.rows, exps.cols);
    const std::size_t top = max_order == 0 ? full : std::min(max_order, full);

    UniqueMaxResult res;
    for_each_nontrivial_minor(pattern, top, [&](const MinorIndex& idx) {
        ++res.minors_checked;
        const std::size_t r = idx.order();
        std::vector<std::size_t> perm(r);
        std::iota(perm.begin(), perm.end(), 0);
        BigInt best = -1;
        std::size_t best_count = 0;
        do {
            BigInt term = 0;
            bool avoids_zeros = true;
            for (std::size_t t = 0; t < r; ++t) {
                const std::int64_t e = exps.at(idx.rows[t], idx.cols[perm[t]]);
                if (e < 0) {
                    avoids_zeros = false;
                    break;
                }
                term += BigInt(1) << e;
            }
            if (!avoids_zeros) continue;
            if (term > best) {
                best = term;
                best_count = 1;
            } else if (term == best) {
                ++best_count;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (best_count != 1) {  // the diagonal term always exists, so a tie
            res.ok = false;
            res.violation = idx;
            return false;
        }
        return true;
    });
    return res;
}

BigInt theorem_field_bound(const CodeParams& params) {
    return BigInt(1) << theorem_field_bound_log2(params);
}

BigInt corollary_field_bound(const CodeParams& params) {
    return BigInt(1) << corollary_field_bound_log2(params);
}

std::size_t theorem_field_bound_log2(const CodeParams& params) {
    return params.M * (params.L + 2) - 1;
}

std::size_t corollary_field_bound_log2(const CodeParams& params) {
    return params.M * (params.L + 1) + params.n - 2;
}

EntryBound entry_field_bound(const ExponentMatrix& exps) {
    EntryBound b;
    b.e_max = exps.max_exponent();
    if (b.e_max < 0) throw ParamsInvalid("entry_field_bound: no in-band entries");
    b.n_power_of_two = BigInt(1) << (b.e_max + 1);
    b.n_exact_ceiling = (BigInt(4) << b.e_max) / 3 + 1;
    return b;
}

BigInt hutchinson_bound(std::size_t r) {
    if (r == 0) throw ParamsInvalid("hutchinson_bound: order must be positive");
    const BigInt catalan_num = binomial_bigint(2 * (r - 1), r - 1);
    if (catalan_num % r != 0) throw InternalCheckFailure("hutchinson_bound: Catalan division");
    const BigInt total = catalan_num / r + binomial_bigint(r - 1, (r - 1) / 2);
    if (total % 2 != 0) throw InternalCheckFailure("hutchinson_bound: parity");
    return total / 2;
}

BigInt gl_generic_bound(std::uint64_t c, std::size_t r) {
    if (c == 0 || r == 0) throw ParamsInvalid("gl_generic_bound: c and r must be positive");
    return isqrt_ceil(pow_bigint(BigInt(c), 2 * r) * pow_bigint(BigInt(r), r));
}

MinFieldResult min_field_search(const CodeParams& params, std::uint32_t p, std::size_t N_max,
                                Target target, const CheckOptions& opts) {
    CheckOptions o = opts;
    o.max_order = 0;       // verdicts must be definitive
    o.collect_all = false;

    MinFieldResult res;
    for (std::size_t N = 1; N <= N_max; ++N) {
        const FieldPtr field = Field::make(p, find_primitive_poly(p, N), true);
        Matrix m;
        BandPattern pat;
        if (target == Target::full) {
            m = block_toeplitz(build_superregular_blocks(params, field));
            pat = pattern_full(params);
        } else {
            m = block_toeplitz(build_parity_seed_blocks(params, field));
            pat = pattern_parity(params);
        }
        SuperregularReport rep = check_superregular(m, pat, o);
        MinFieldAttempt attempt;
        attempt.N = N;
        attempt.verdict = rep.verdict;
        if (!rep.witnesses.empty()) attempt.witness = rep.witnesses.front();
        res.attempts.push_back(std::move(attempt));
        if (rep.verdict == Verdict::superregular) {
            res.found_N = N;
            res.report = std::move(rep);
            break;
        }
    }
    return res;
}

}  // namespace srmdp
