#include "cyclotwist/distance.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <thread>

#include "cyclotwist/errors.hpp"

namespace cyclotwist {

namespace {

// Saturating binomial sum helpers for budget decisions.
std::uint64_t binom(int n, int w) {
    if (w < 0 || w > n) return 0;
    unsigned __int128 acc = 1;
    for (int i = 0; i < w; ++i) {
        acc = acc * static_cast<unsigned>(n - i) / static_cast<unsigned>(i + 1);
        if (acc > static_cast<unsigned __int128>(UINT64_MAX)) return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(acc);
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

struct Columns {
    int n = 0;
    std::size_t words = 0;
    std::vector<std::uint64_t> syn;    // column-major syndrome words
    std::vector<std::uint64_t> pair;   // packed pairing bits per column
    bool pairing_empty = true;

    Columns(const BinMatrix& checks, const BinMatrix& pairing) {
        n = static_cast<int>(checks.cols());
        if (pairing.rows() > 64) throw DimensionError("pairing limited to 64 rows");
        if (pairing.rows() > 0 && pairing.cols() != checks.cols())
            throw DimensionError("pairing width mismatch");
        pairing_empty = pairing.rows() == 0;
        words = (checks.rows() + 63) / 64;
        if (words == 0) words = 1;
        syn.assign(static_cast<std::size_t>(n) * words, 0);
        pair.assign(n, 0);
        for (std::size_t r = 0; r < checks.rows(); ++r)
            for (std::size_t c : checks.row(r).set_bits())
                syn[c * words + r / 64] ^= std::uint64_t(1) << (r % 64);
        for (std::size_t r = 0; r < pairing.rows(); ++r)
            for (std::size_t c : pairing.row(r).set_bits())
                pair[c] ^= std::uint64_t(1) << r;
    }
};

struct Candidate {
    int weight = -1;
    std::vector<int> support;

    bool better_than(const Candidate& other) const {
        if (other.weight < 0) return weight >= 0;
        if (weight < 0) return false;
        if (weight != other.weight) return weight < other.weight;
        return support < other.support;
    }
};

// Exact-weight DFS over ascending supports with incremental syndrome.
class WeightSearch {
  public:
    WeightSearch(const Columns& cols, int w)
        : cols_(cols), w_(w), stack_(static_cast<std::size_t>(w + 1) * cols.words, 0),
          pair_stack_(w + 1, 0), chosen_(w, 0) {}

    // Explores all supports of exactly weight w whose first element is
    // `first` and whose remaining elements come from (first, limit).
    void run_from(int first, int limit, Candidate& best) {
        limit_ = limit;
        push(0, first);
        chosen_[0] = first;
        if (w_ == 1)
            leaf(1, best);
        else
            descend(1, first + 1, best);
    }

  private:
    void push(int depth, int index) {
        const std::uint64_t* col = &cols_.syn[static_cast<std::size_t>(index) * cols_.words];
        std::uint64_t* src = &stack_[static_cast<std::size_t>(depth) * cols_.words];
        std::uint64_t* dst = &stack_[static_cast<std::size_t>(depth + 1) * cols_.words];
        for (std::size_t i = 0; i < cols_.words; ++i) dst[i] = src[i] ^ col[i];
        pair_stack_[depth + 1] = pair_stack_[depth] ^ cols_.pair[index];
    }

    void leaf(int depth, Candidate& best) {
        const std::uint64_t* syn = &stack_[static_cast<std::size_t>(depth) * cols_.words];
        for (std::size_t i = 0; i < cols_.words; ++i)
            if (syn[i]) return;
        if (!cols_.pairing_empty && pair_stack_[depth] == 0) return;
        Candidate cand;
        cand.weight = w_;
        cand.support.assign(chosen_.begin(), chosen_.begin() + depth);
        if (cand.better_than(best)) best = cand;
    }

    void descend(int depth, int start, Candidate& best) {
        int remaining = w_ - depth;
        for (int i = start; i <= limit_ - remaining; ++i) {
            push(depth, i);
            chosen_[depth] = i;
            if (remaining == 1)
                leaf(depth + 1, best);
            else
                descend(depth + 1, i + 1, best);
        }
    }

    const Columns& cols_;
    int w_;
    int limit_ = 0;
    std::vector<std::uint64_t> stack_;
    std::vector<std::uint64_t> pair_stack_;
    std::vector<int> chosen_;
};

Candidate search_weight(const Columns& cols, int w, bool symmetric, int block2_start,
                        int threads) {
    // Top-level tasks: (first index, limit) pairs.
    std::vector<std::pair<int, int>> tasks;
    if (symmetric) {
        tasks.emplace_back(0, cols.n);
        if (block2_start > 0 && w <= cols.n - block2_start)
            tasks.emplace_back(block2_start, cols.n);
    } else {
        for (int first = 0; first + w <= cols.n; ++first) tasks.emplace_back(first, cols.n);
    }

    threads = std::max(1, threads);
    if (threads == 1 || tasks.size() == 1) {
        Candidate best;
        for (auto [first, limit] : tasks) {
            WeightSearch s(cols, w);
            s.run_from(first, limit, best);
        }
        return best;
    }

    std::vector<Candidate> bests(threads);
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            WeightSearch s(cols, w);
            for (std::size_t i = t; i < tasks.size(); i += threads) {
                WeightSearch local(cols, w);
                local.run_from(tasks[i].first, tasks[i].second, bests[t]);
            }
        });
    for (auto& th : pool) th.join();
    Candidate best;
    for (const Candidate& c : bests)
        if (c.better_than(best)) best = c;
    return best;
}

BitVec support_vec(int n, const std::vector<int>& support) {
    BitVec v(n);
    for (int i : support) v.set(i, true);
    return v;
}

}  // namespace

std::uint64_t enum_candidate_count(int n, int w, bool symmetric, int block2_start) {
    std::uint64_t total = 0;
    for (int d = 1; d <= w; ++d) {
        if (symmetric) {
            total = sat_add(total, binom(n - 1, d - 1));
            if (block2_start > 0)
                total = sat_add(total, binom(n - block2_start - 1, d - 1));
        } else {
            total = sat_add(total, binom(n, d));
        }
    }
    return total;
}

DistanceResult bounded_weight_enum(const BinMatrix& checks, const BinMatrix& pairing,
                                   const EnumOptions& opts, int block2_start) {
    Columns cols(checks, pairing);
    bool symmetric = opts.use_symmetry && block2_start > 0;

    int affordable = 0;
    while (affordable < cols.n &&
           enum_candidate_count(cols.n, affordable + 1, symmetric, block2_start) <= opts.budget)
        ++affordable;
    int wmax = opts.wmax < 0 ? affordable : opts.wmax;
    if (wmax > affordable)
        throw BudgetExceeded("enumeration exceeds the candidate budget", affordable);

    DistanceResult out;
    out.methods.push_back("bounded_enum<=" + std::to_string(wmax) +
                          (symmetric ? ",symmetric" : ""));
    for (int w = 1; w <= wmax; ++w) {
        Candidate best = search_weight(cols, w, symmetric, block2_start, opts.threads);
        if (best.weight > 0) {
            out.certified_lower = w;
            out.best_upper = w;
            out.witness = support_vec(cols.n, best.support);
            out.exact = true;
            return out;
        }
        out.certified_lower = w + 1;
    }
    return out;
}

DistanceResult bounded_weight_enum(const CssCode& code, const LogicalBasis& basis,
                                   Pauli side, const EnumOptions& opts) {
    const BinMatrix& checks = side == Pauli::X ? code.hz : code.hx;
    const BinMatrix& pairing = side == Pauli::X ? basis.z_rows : basis.x_rows;
    DistanceResult out = bounded_weight_enum(checks, pairing, opts, code.n / 2);
    out.side = side;
    return out;
}

DistanceResult kernel_coset_enum(const BinMatrix& checks, const BinMatrix& pairing) {
    BinMatrix basis = kernel_basis(checks);
    std::size_t dim = basis.rows();
    if (dim > 31) throw BudgetExceeded("kernel dimension too large for coset enumeration", 0);
    int n = static_cast<int>(checks.cols());
    if (pairing.rows() > 64) throw DimensionError("pairing limited to 64 rows");

    std::vector<std::uint64_t> pair_bits(dim, 0);
    for (std::size_t b = 0; b < dim; ++b)
        for (std::size_t r = 0; r < pairing.rows(); ++r)
            if (pairing.row(r).dot(basis.row(b))) pair_bits[b] |= std::uint64_t(1) << r;

    DistanceResult out;
    out.methods.push_back("kernel_coset(dim=" + std::to_string(dim) + ")");
    if (dim == 0) {
        out.certified_lower = n + 1;
        return out;
    }

    BitVec cur(n);
    std::uint64_t pair_acc = 0;
    std::size_t best = static_cast<std::size_t>(n) + 1;
    BitVec best_vec(n);
    bool pairing_empty = pairing.rows() == 0;
    std::uint64_t total = std::uint64_t(1) << dim;
    for (std::uint64_t s = 1; s < total; ++s) {
        int flip = std::countr_zero(s);
        cur ^= basis.row(flip);
        pair_acc ^= pair_bits[flip];
        if (pairing_empty || pair_acc) {
            std::size_t w = cur.popcount();
            if (w < best) {
                best = w;
                best_vec = cur;
            }
        }
    }
    if (best <= static_cast<std::size_t>(n)) {
        out.certified_lower = static_cast<int>(best);
        out.best_upper = static_cast<int>(best);
        out.witness = best_vec;
        out.exact = true;
    } else {
        out.certified_lower = n + 1;
    }
    return out;
}

DistanceResult kernel_coset_enum(const CssCode& code, const LogicalBasis& basis, Pauli side) {
    const BinMatrix& checks = side == Pauli::X ? code.hz : code.hx;
    const BinMatrix& pairing = side == Pauli::X ? basis.z_rows : basis.x_rows;
    DistanceResult out = kernel_coset_enum(checks, pairing);
    out.side = side;
    return out;
}

DistanceResult isd_upper_bound(const CssCode& code, const LogicalBasis& basis, Pauli side,
                               const IsdOptions& opts) {
    const BinMatrix& checks = side == Pauli::X ? code.hz : code.hx;
    const BinMatrix& pairing = side == Pauli::X ? basis.z_rows : basis.x_rows;
    BinMatrix kernel = kernel_basis(checks);
    std::size_t dim = kernel.rows();
    int n = code.n;

    DistanceResult out;
    out.side = side;
    out.certified_lower = 1;
    out.methods.push_back("isd(iters=" + std::to_string(opts.iterations) +
                          ",seed=" + std::to_string(opts.seed) + ")");
    if (opts.iterations <= 0 || dim == 0) return out;

    std::mt19937_64 rng(opts.seed);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;

    Candidate best;
    std::vector<BitVec> work;
    std::vector<std::uint64_t> pair_bits;
    for (int iter = 0; iter < opts.iterations; ++iter) {
        for (int i = n - 1; i > 0; --i) {
            int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
            std::swap(perm[i], perm[j]);
        }
        work.assign(kernel.rows(), BitVec(0));
        for (std::size_t r = 0; r < kernel.rows(); ++r) work[r] = kernel.row(r);
        // Eliminate in the random column order.
        std::size_t rank = 0;
        for (int c : perm) {
            if (rank == work.size()) break;
            std::size_t pivot = rank;
            while (pivot < work.size() && !work[pivot].get(c)) ++pivot;
            if (pivot == work.size()) continue;
            std::swap(work[rank], work[pivot]);
            for (std::size_t r = 0; r < work.size(); ++r)
                if (r != rank && work[r].get(c)) work[r] ^= work[rank];
            ++rank;
        }
        pair_bits.assign(work.size(), 0);
        for (std::size_t r = 0; r < work.size(); ++r)
            for (std::size_t p = 0; p < pairing.rows(); ++p)
                if (pairing.row(p).dot(work[r])) pair_bits[r] |= std::uint64_t(1) << p;

        auto consider = [&](const BitVec& v, std::uint64_t pb) {
            if (pairing.rows() > 0 && pb == 0) return;
            if (pairing.rows() == 0 && !v.any()) return;
            int w = static_cast<int>(v.popcount());
            if (best.weight < 0 || w < best.weight) {
                best.weight = w;
                best.support.clear();
                for (std::size_t i : v.set_bits()) best.support.push_back(static_cast<int>(i));
            }
        };
        for (std::size_t r = 0; r < work.size(); ++r) consider(work[r], pair_bits[r]);
        for (std::size_t r = 0; r < work.size(); ++r)
            for (std::size_t s = r + 1; s < work.size(); ++s) {
                BitVec sum = work[r];
                sum ^= work[s];
                consider(sum, pair_bits[r] ^ pair_bits[s]);
            }
    }
    if (best.weight > 0) {
        out.best_upper = best.weight;
        out.witness = support_vec(n, best.support);
    }
    return out;
}

CssDistanceResult css_distance(const CssCode& code, const LogicalBasis& basis,
                               const CssDistanceOptions& opts) {
    CssDistanceResult out;
    for (Pauli side : {Pauli::X, Pauli::Z}) {
        DistanceResult r;
        try {
            r = bounded_weight_enum(code, basis, side, opts.enumeration);
        } catch (const BudgetExceeded& e) {
            EnumOptions reduced = opts.enumeration;
            reduced.wmax = e.largest_certifiable_wmax;
            r = bounded_weight_enum(code, basis, side, reduced);
            r.methods.push_back("budget_exceeded");
            out.budget_exceeded = true;
        }
        if (!r.exact && opts.try_kernel_coset) {
            const BinMatrix& checks = side == Pauli::X ? code.hz : code.hx;
            std::size_t dim = code.n - gf2_rank(checks);
            if (dim <= static_cast<std::size_t>(opts.kernel_dim_limit)) {
                DistanceResult coset = kernel_coset_enum(code, basis, side);
                coset.methods.insert(coset.methods.begin(), r.methods.begin(), r.methods.end());
                coset.side = side;
                r = coset;
            }
        }
        if (!r.exact && opts.isd.iterations > 0) {
            DistanceResult isd = isd_upper_bound(code, basis, side, opts.isd);
            if (isd.best_upper) {
                if (isd.best_upper < r.certified_lower)
                    throw Error("ISD witness below the certified lower bound");
                r.best_upper = r.best_upper ? std::min(*r.best_upper, *isd.best_upper)
                                            : isd.best_upper;
                if (!r.witness || static_cast<int>(r.witness->popcount()) > *isd.best_upper)
                    r.witness = isd.witness;
                r.methods.push_back(isd.methods.front());
                if (r.best_upper && *r.best_upper == r.certified_lower) r.exact = true;
            }
        }
        if (side == Pauli::X)
            out.x = std::move(r);
        else
            out.z = std::move(r);
    }
    out.certified_lower = std::min(out.x.certified_lower, out.z.certified_lower);
    if (out.x.best_upper || out.z.best_upper) {
        int ux = out.x.best_upper.value_or(INT32_MAX);
        int uz = out.z.best_upper.value_or(INT32_MAX);
        out.best_upper = std::min(ux, uz);
    }
    out.exact = out.best_upper && *out.best_upper == out.certified_lower &&
                out.x.certified_lower >= *out.best_upper &&
                out.z.certified_lower >= *out.best_upper;
    return out;
}

}  // namespace cyclotwist
