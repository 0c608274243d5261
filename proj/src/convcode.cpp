#include "srmdp/convcode.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "srmdp/intmath.hpp"

namespace srmdp {

void validate_code(const ConvCode& code) {
    const auto& P = code.params;
    const std::size_t nk = P.n - P.k;
    if (!code.field) throw ParamsInvalid("code has no field");
    if (code.A.rows() != nk || code.A.cols() != nk)
        throw ShapeMismatch("A must be (n-k) x (n-k)");
    if (code.B.rows() != nk || code.B.cols() != P.k) throw ShapeMismatch("B must be (n-k) x k");
    if (code.A.field().get() != code.field.get() || code.B.field().get() != code.field.get())
        throw MixedFields("A/B field differs from the code field");
    if (code.A.degree() > P.nu || code.B.degree() > P.nu)
        throw ShapeMismatch("parity-check degree exceeds nu = " + std::to_string(P.nu));
    if (code.A.coeff(0) != Matrix::identity(code.field, nk))
        throw ParamsInvalid("A_0 must be the identity");
}

ConvCode mdp_construct(const CodeParams& params, const std::vector<Matrix>& seeds) {
    const std::size_t nk = params.n - params.k, k = params.k, nu = params.nu, L = params.L;
    if (seeds.size() != L + 1)
        throw ShapeMismatch("expected " + std::to_string(L + 1) + " seed blocks, got " +
                            std::to_string(seeds.size()));
    const FieldPtr& field = seeds.front().field();
    for (const Matrix& s : seeds) {
        if (s.rows() != nk || s.cols() != k)
            throw ShapeMismatch("seed blocks must be (n-k) x k");
        if (s.field().get() != field.get())
            throw MixedFields("seed blocks over different fields");
    }

    std::vector<Matrix> Ac(nu + 1, Matrix(field, nk, nk));
    Ac[0] = Matrix::identity(field, nk);
    if (nu > 0 && L > nu) {
        // [A_nu ... A_1] * hankel = rhs, hankel block (s,t) = seed_{L-nu+s-t},
        // rhs block t = -seed_{L+1-t} (1-based block indices)
        Matrix hankel(field, nu * nk, (L - nu) * k);
        for (std::size_t s = 1; s <= nu; ++s)
            for (std::size_t t = 1; t <= L - nu; ++t) {
                const Matrix& blk = seeds[L - nu + s - t];
                for (std::size_t i = 0; i < nk; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        hankel.at((s - 1) * nk + i, (t - 1) * k + j) = blk.at(i, j);
            }
        Matrix rhs(field, nk, (L - nu) * k);
        for (std::size_t t = 1; t <= L - nu; ++t) {
            const Matrix& blk = seeds[L + 1 - t];
            for (std::size_t i = 0; i < nk; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    rhs.at(i, (t - 1) * k + j) = neg(blk.at(i, j));
        }
        const Matrix X = solve_left(hankel, rhs);  // nk x nu*nk
        for (std::size_t s = 0; s < nu; ++s)
            for (std::size_t i = 0; i < nk; ++i)
                for (std::size_t j = 0; j < nk; ++j)
                    Ac[nu - s].at(i, j) = X.at(i, s * nk + j);
    }

    std::vector<Matrix> Bc;
    Bc.reserve(nu + 1);
    for (std::size_t i = 0; i <= nu; ++i) {
        Matrix b = seeds[i];  // the A_0 = I term
        for (std::size_t t = 1; t <= i; ++t) b = mat_add(b, mat_mul(Ac[t], seeds[i - t]));
        Bc.push_back(std::move(b));
    }
    return ConvCode{params, field, PolyMatrix(std::move(Ac)), PolyMatrix(std::move(Bc))};
}

std::vector<Matrix> laurent_expansion(const ConvCode& code, std::size_t upto) {
    Matrix A0inv;
    try {
        A0inv = inverse(code.A.coeff(0));
    } catch (const Singular&) {
        throw SingularA0("laurent_expansion: A_0 is singular");
    }
    std::vector<Matrix> G;
    G.reserve(upto + 1);
    for (std::size_t i = 0; i <= upto; ++i) {
        Matrix acc = code.B.coeff(i);  // zero beyond the degree
        for (std::size_t t = 1; t <= std::min(i, code.A.degree()); ++t)
            acc = mat_sub(acc, mat_mul(code.A.coeff(t), G[i - t]));
        G.push_back(mat_mul(A0inv, acc));
    }
    return G;
}

Matrix sliding_parity(const ConvCode& code, std::size_t j) {
    const auto& P = code.params;
    const std::size_t nk = P.n - P.k;
    Matrix H(code.field, (j + 1) * nk, (j + 1) * P.n);
    for (std::size_t bi = 0; bi <= j; ++bi)
        for (std::size_t bj = 0; bj <= bi; ++bj) {
            const Matrix& Ad = code.A.coeff(bi - bj);
            const Matrix& Bd = code.B.coeff(bi - bj);
            for (std::size_t r = 0; r < nk; ++r) {
                for (std::size_t c = 0; c < nk; ++c)
                    H.at(bi * nk + r, bj * P.n + c) = Ad.at(r, c);
                for (std::size_t c = 0; c < P.k; ++c)
                    H.at(bi * nk + r, bj * P.n + nk + c) = Bd.at(r, c);
            }
        }
    return H;
}

namespace {

// Information symbols indexed 0 .. q-1 (field order q always fits u64 here
// because the search space passed the budget check).
struct SymbolSource {
    const Field* field = nullptr;
    std::uint64_t q = 0;
    std::vector<FieldElement> table;  // filled when q is small

    explicit SymbolSource(const FieldPtr& f)
        : field(f.get()), q(f->order().convert_to<std::uint64_t>()) {
        if (q <= 4096) {
            table.reserve(q);
            for (std::uint64_t i = 0; i < q; ++i) table.push_back(f->from_index(BigInt(i)));
        }
    }

    FieldElement get(std::uint64_t digit) const {
        return table.empty() ? field->from_index(BigInt(digit)) : table[digit];
    }
};

struct SharedBest {
    std::atomic<std::size_t> best;
    std::mutex mu;
    std::vector<std::uint64_t> choice;  // u-indices of the best codeword
};

// Depth-first search over information sequences u_0 .. u_j (u_0 != 0) with
// incremental-weight pruning against the shared minimum.
struct DistanceSearch {
    const std::vector<Matrix>& G;
    const SymbolSource& sym;
    std::size_t j, k, nk;
    std::uint64_t count;  // q^k

    std::vector<std::vector<FieldElement>> u;  // per level, k symbols
    std::vector<std::size_t> uw;               // weight per level
    std::vector<std::uint64_t> choice;
    SharedBest* shared;

    DistanceSearch(const std::vector<Matrix>& G_, const SymbolSource& sym_, std::size_t j_,
                   std::size_t k_, std::size_t nk_, std::uint64_t count_, SharedBest* shared_)
        : G(G_), sym(sym_), j(j_), k(k_), nk(nk_), count(count_), shared(shared_) {
        u.assign(j + 1, std::vector<FieldElement>(k, sym.field->zero()));
        uw.assign(j + 1, 0);
        choice.assign(j + 1, 0);
    }

    void set_level(std::size_t d, std::uint64_t idx) {
        std::size_t w = 0;
        std::uint64_t rest = idx;
        for (std::size_t c = 0; c < k; ++c) {
            u[d][c] = sym.get(rest % sym.q);
            rest /= sym.q;
            w += !u[d][c].is_zero();
        }
        uw[d] = w;
        choice[d] = idx;
    }

    // parity slot at time d from u_0 .. u_d: -sum_t G_{d-t} u_t
    std::vector<FieldElement> parity(std::size_t d) const {
        std::vector<FieldElement> p(nk, sym.field->zero());
        for (std::size_t t = 0; t <= d; ++t) {
            const Matrix& g = G[d - t];
            for (std::size_t r = 0; r < nk; ++r)
                for (std::size_t c = 0; c < k; ++c)
                    if (!u[t][c].is_zero()) p[r] = add(p[r], mul(g.at(r, c), u[t][c]));
        }
        for (FieldElement& x : p) x = neg(x);
        return p;
    }

    void run(std::size_t d, std::size_t partial) {
        if (d > j) {
            std::lock_guard<std::mutex> lock(shared->mu);
            if (partial < shared->best.load(std::memory_order_relaxed)) {
                shared->best.store(partial, std::memory_order_relaxed);
                shared->choice = choice;
            }
            return;
        }
        const std::uint64_t start = d == 0 ? 1 : 0;
        for (std::uint64_t idx = start; idx < count; ++idx) {
            set_level(d, idx);
            const std::size_t best_now = shared->best.load(std::memory_order_relaxed);
            if (partial + uw[d] >= best_now) continue;
            const std::size_t w = uw[d] + weight(parity(d));
            if (partial + w >= best_now) continue;
            run(d + 1, partial + w);
        }
    }

    static std::size_t weight(const std::vector<FieldElement>& v) {
        std::size_t w = 0;
        for (const FieldElement& x : v) w += !x.is_zero();
        return w;
    }
};

}  // namespace

DistanceResult column_distance(const ConvCode& code, std::size_t j, const BigInt& budget,
                               unsigned threads) {
    const auto& P = code.params;
    const std::size_t nk = P.n - P.k, k = P.k;
    const BigInt space = pow_bigint(code.field->order(), (j + 1) * k);
    const BigInt hard_cap = BigInt(1) << 62;
    const BigInt eff = budget < hard_cap ? budget : hard_cap;
    if (space > eff)
        throw BudgetExceeded("column_distance: search space " + space.str() +
                             " exceeds budget " + eff.str(),
                             space, eff);

    const auto G = laurent_expansion(code, j);
    const SymbolSource sym(code.field);
    std::uint64_t count = 1;
    for (std::size_t c = 0; c < k; ++c) count *= sym.q;

    const std::size_t target = (j + 1) * nk + 1;
    SharedBest shared;
    shared.best.store(target + 1);

    if (threads <= 1) {
        DistanceSearch s(G, sym, j, k, nk, count, &shared);
        s.run(0, 0);
    } else {
        // partition the u_0 candidates; pruning shares the atomic minimum
        std::atomic<std::uint64_t> cursor{1};
        auto worker = [&]() {
            DistanceSearch s(G, sym, j, k, nk, count, &shared);
            for (;;) {
                const std::uint64_t idx = cursor.fetch_add(1);
                if (idx >= count) break;
                s.set_level(0, idx);
                const std::size_t best_now = shared.best.load(std::memory_order_relaxed);
                if (s.uw[0] >= best_now) continue;
                const std::size_t w = s.uw[0] + DistanceSearch::weight(s.parity(0));
                if (w >= best_now) continue;
                s.run(1, w);
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
        for (std::thread& th : pool) th.join();
    }

    DistanceResult res;
    res.j = j;
    res.distance = shared.best.load();
    res.bound_met = res.distance == target;
    res.search_space = space;
    if (res.distance > target)
        throw InternalCheckFailure("column_distance: distance exceeds the Singleton-type bound");

    // reassemble the witness and verify kernel membership
    DistanceSearch s(G, sym, j, k, nk, count, &shared);
    for (std::size_t d = 0; d <= j; ++d) s.set_level(d, shared.choice[d]);
    std::size_t w_check = 0;
    for (std::size_t d = 0; d <= j; ++d) {
        const auto par = s.parity(d);
        w_check += s.uw[d] + DistanceSearch::weight(par);
        for (const FieldElement& x : par) res.witness.push_back(x);
        for (const FieldElement& x : s.u[d]) res.witness.push_back(x);
    }
    bool v0_nonzero = false;
    for (std::size_t c = 0; c < P.n; ++c) v0_nonzero |= !res.witness[c].is_zero();
    const Matrix H = sliding_parity(code, j);
    bool in_kernel = true;
    for (std::size_t r = 0; r < H.rows(); ++r) {
        FieldElement acc = code.field->zero();
        for (std::size_t c = 0; c < H.cols(); ++c)
            acc = add(acc, mul(H.at(r, c), res.witness[c]));
        in_kernel &= acc.is_zero();
    }
    if (w_check != res.distance || !v0_nonzero || !in_kernel)
        throw InternalCheckFailure("column_distance: witness failed the kernel post-check");
    return res;
}

ColumnDistanceProfile distance_profile(const ConvCode& code, const BigInt& budget,
                                       unsigned threads) {
    ColumnDistanceProfile prof;
    for (std::size_t j = 0; j <= code.params.L; ++j)
        prof.per_j.push_back(column_distance(code, j, budget, threads));
    for (std::size_t j = 1; j < prof.per_j.size(); ++j)
        if (prof.per_j[j].bound_met && !prof.per_j[j - 1].bound_met)
            throw InternalCheckFailure("distance_profile: met-bound flags are not a prefix");
    prof.mdp = prof.per_j.back().bound_met;
    return prof;
}

std::string to_string(MdpMethod m) {
    return m == MdpMethod::distance ? "distance" : "superregular";
}

MdpEvidence is_mdp(const ConvCode& code, MdpMethod method, const BigInt& budget,
                   unsigned threads) {
    MdpEvidence ev;
    ev.method = method;
    if (method == MdpMethod::distance) {
        DistanceResult r = column_distance(code, code.params.L, budget, threads);
        ev.mdp = r.bound_met;
        ev.distance_at_L = std::move(r);
    } else {
        const auto G = laurent_expansion(code, code.params.L);
        CheckOptions o;
        o.threads = threads;
        SuperregularReport rep = check_superregular(block_toeplitz(G), pattern_parity(code.params), o);
        ev.mdp = rep.verdict == Verdict::superregular;
        ev.sr_report = std::move(rep);
    }
    return ev;
}

FieldElement random_nonzero(const FieldPtr& field, std::mt19937_64& rng) {
    if (field->order() > (BigInt(1) << 63))
        throw UnsupportedField("random_nonzero: field order must fit 63 bits");
    const std::uint64_t range = (field->order() - 1).convert_to<std::uint64_t>();
    const std::uint64_t residue = (0 - range) % range;  // 2^64 mod range
    std::uint64_t x;
    do {
        x = rng();
    } while (x < residue);
    return field->from_index(BigInt(1 + x % range));
}

std::vector<Matrix> random_seed_blocks(const CodeParams& params, const FieldPtr& field,
                                       std::mt19937_64& rng) {
    std::vector<Matrix> seeds;
    seeds.reserve(params.L + 1);
    for (std::size_t ell = 0; ell <= params.L; ++ell) {
        Matrix b(field, params.n - params.k, params.k);
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) b.at(i, j) = random_nonzero(field, rng);
        seeds.push_back(std::move(b));
    }
    return seeds;
}

}  // namespace srmdp
