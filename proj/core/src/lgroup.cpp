#include "cyclotwist/lgroup.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>

#include "cyclotwist/errors.hpp"

namespace cyclotwist {

BigUint BigUint::from_decimal(const std::string& s) {
    BigUint out(0);
    for (char ch : s) {
        if (ch < '0' || ch > '9') throw DimensionError("bad decimal digit");
        out.mul_u64(10);
        std::uint64_t carry = static_cast<std::uint64_t>(ch - '0');
        for (std::size_t i = 0; i < out.limbs_.size() && carry; ++i) {
            unsigned __int128 sum = static_cast<unsigned __int128>(out.limbs_[i]) + carry;
            out.limbs_[i] = static_cast<std::uint64_t>(sum);
            carry = static_cast<std::uint64_t>(sum >> 64);
        }
        if (carry) out.limbs_.push_back(carry);
    }
    return out;
}

void BigUint::mul_u64(std::uint64_t v) {
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
        unsigned __int128 prod = static_cast<unsigned __int128>(limb) * v + carry;
        limb = static_cast<std::uint64_t>(prod);
        carry = static_cast<std::uint64_t>(prod >> 64);
    }
    if (carry) limbs_.push_back(carry);
    trim();
}

bool BigUint::operator==(const BigUint& other) const {
    return limbs_ == other.limbs_;
}

bool BigUint::operator<(const BigUint& other) const {
    if (limbs_.size() != other.limbs_.size()) return limbs_.size() < other.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;)
        if (limbs_[i] != other.limbs_[i]) return limbs_[i] < other.limbs_[i];
    return false;
}

std::string BigUint::to_string() const {
    std::vector<std::uint64_t> work = limbs_;
    std::string out;
    auto all_zero = [&] {
        for (auto w : work)
            if (w) return false;
        return true;
    };
    if (all_zero()) return "0";
    while (!all_zero()) {
        std::uint64_t rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            unsigned __int128 cur = (static_cast<unsigned __int128>(rem) << 64) | work[i];
            work[i] = static_cast<std::uint64_t>(cur / 1000000000u);
            rem = static_cast<std::uint64_t>(cur % 1000000000u);
        }
        std::string chunk = std::to_string(rem);
        if (!all_zero()) chunk = std::string(9 - chunk.size(), '0') + chunk;
        out = chunk + out;
    }
    return out;
}

void BigUint::trim() {
    while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
}

GlElement GlElement::identity(int k) {
    GlElement e;
    e.k = k;
    e.rows.resize(k);
    for (int i = 0; i < k; ++i) e.rows[i] = std::uint32_t(1) << i;
    return e;
}

GlElement GlElement::from_matrix(const BinMatrix& m) {
    if (m.rows() != m.cols() || m.rows() > 32)
        throw DimensionError("GlElement needs square k <= 32");
    GlElement e;
    e.k = static_cast<int>(m.rows());
    e.rows.resize(e.k, 0);
    for (int r = 0; r < e.k; ++r)
        for (int c = 0; c < e.k; ++c)
            if (m.get(r, c)) e.rows[r] |= std::uint32_t(1) << c;
    return e;
}

GlElement GlElement::operator*(const GlElement& other) const {
    GlElement out;
    out.k = k;
    out.rows.resize(k, 0);
    for (int r = 0; r < k; ++r) out.rows[r] = other.apply(rows[r]);
    return out;
}

GlElement GlElement::inverse() const {
    std::vector<std::uint32_t> a = rows, inv(k);
    for (int i = 0; i < k; ++i) inv[i] = std::uint32_t(1) << i;
    int rank = 0;
    for (int c = 0; c < k; ++c) {
        int pivot = -1;
        for (int r = rank; r < k; ++r)
            if ((a[r] >> c) & 1) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        std::swap(inv[rank], inv[pivot]);
        for (int r = 0; r < k; ++r)
            if (r != rank && ((a[r] >> c) & 1)) {
                a[r] ^= a[rank];
                inv[r] ^= inv[rank];
            }
        ++rank;
    }
    if (rank != k) throw DimensionError("matrix is not invertible");
    GlElement out;
    out.k = k;
    out.rows.resize(k);
    for (int r = 0; r < k; ++r) out.rows[std::countr_zero(a[r])] = inv[r];
    return out;
}

std::uint32_t GlElement::apply(std::uint32_t v) const {
    std::uint32_t out = 0;
    while (v) {
        out ^= rows[std::countr_zero(v)];
        v &= v - 1;
    }
    return out;
}

bool GlElement::is_identity() const {
    for (int i = 0; i < k; ++i)
        if (rows[i] != (std::uint32_t(1) << i)) return false;
    return true;
}

namespace {

// Stabiliser chain (deterministic Schreier-Sims with a randomized warm-up).
struct StabChain {
    struct Level {
        std::uint32_t base = 0;
        std::vector<GlElement> gens;
        std::map<std::uint32_t, GlElement> reps;      // base * rep = point
        std::map<std::uint32_t, GlElement> rep_invs;
    };

    int k;
    std::vector<std::uint32_t> points;
    std::vector<Level> levels;

    StabChain(int k_, std::vector<std::uint32_t> pts) : k(k_), points(std::move(pts)) {}

    void rebuild_orbit(Level& level) const {
        level.reps.clear();
        level.rep_invs.clear();
        GlElement id = GlElement::identity(k);
        level.reps[level.base] = id;
        level.rep_invs[level.base] = id;
        std::vector<std::uint32_t> frontier{level.base};
        while (!frontier.empty()) {
            std::vector<std::uint32_t> next;
            for (std::uint32_t p : frontier) {
                GlElement rep = level.reps.at(p);
                for (const GlElement& g : level.gens) {
                    std::uint32_t q = g.apply(p);
                    if (!level.reps.contains(q)) {
                        GlElement r = rep * g;
                        level.rep_invs.emplace(q, r.inverse());
                        level.reps.emplace(q, std::move(r));
                        next.push_back(q);
                    }
                }
            }
            frontier = std::move(next);
        }
    }

    std::pair<GlElement, std::size_t> sift_from(GlElement g, std::size_t start) const {
        for (std::size_t i = start; i < levels.size(); ++i) {
            std::uint32_t p = g.apply(levels[i].base);
            auto it = levels[i].rep_invs.find(p);
            if (it == levels[i].rep_invs.end()) return {std::move(g), i};
            g = g * it->second;
        }
        return {std::move(g), levels.size()};
    }

    void append_level_for(const GlElement& g) {
        for (std::uint32_t p : points) {
            if (g.apply(p) != p) {
                Level level;
                level.base = p;
                levels.push_back(std::move(level));
                return;
            }
        }
        throw DimensionError("action is not faithful on the supplied points");
    }

    // Insert an element known to fix the bases of levels < start. Adds the
    // sifted residue as a generator on the levels it stabilises through and
    // rebuilds those orbits. Returns true if anything changed.
    bool insert(GlElement g, std::size_t start) {
        auto [residue, level] = sift_from(std::move(g), start);
        if (residue.is_identity()) return false;
        if (level == levels.size()) append_level_for(residue);
        std::size_t top = std::min(level, levels.size() - 1);
        for (std::size_t i = start; i <= top; ++i) {
            levels[i].gens.push_back(residue);
            rebuild_orbit(levels[i]);
        }
        return true;
    }

    // Make levels [i, end) satisfy the Schreier condition. Level i's own
    // generators never change while it is being scanned (insertions land
    // strictly deeper), so a single pass over its orbit suffices.
    void complete_from(std::size_t i) {
        if (i >= levels.size()) return;
        for (const auto& [p, rep] : levels[i].reps) {
            for (const GlElement& s : levels[i].gens) {
                std::uint32_t q = s.apply(p);
                GlElement schreier = rep * s * levels[i].rep_invs.at(q);
                if (schreier.is_identity()) continue;
                if (insert(std::move(schreier), i + 1)) complete_from(i + 1);
            }
        }
    }

    BigUint order() const {
        BigUint out(1);
        for (const Level& level : levels) out.mul_u64(level.reps.size());
        return out;
    }
};

}  // namespace

BigUint generated_group_order(const std::vector<GlElement>& gens,
                              const std::vector<std::uint32_t>& points) {
    if (gens.empty()) return BigUint(1);
    int k = gens.front().k;
    for (const GlElement& g : gens) {
        if (g.k != k) throw DimensionError("mixed matrix sizes");
        (void)g.inverse();  // rejects non-invertible generators
    }
    StabChain chain(k, points);
    bool any = false;
    for (const GlElement& g : gens)
        if (!g.is_identity()) any = true;
    if (!any) return BigUint(1);

    for (const GlElement& g : gens)
        if (!g.is_identity()) {
            if (chain.levels.empty()) chain.append_level_for(g);
            chain.levels[0].gens.push_back(g);
        }
    chain.rebuild_orbit(chain.levels[0]);

    // Randomized warm-up: sift products of random generators so the chain
    // is nearly complete before the deterministic closure runs.
    std::mt19937_64 rng(0x5eed);
    GlElement word = GlElement::identity(k);
    for (int it = 0; it < 512; ++it) {
        word = word * gens[rng() % gens.size()];
        chain.insert(word, 0);
    }

    chain.complete_from(0);
    return chain.order();
}

BigUint generated_group_order(const std::vector<GlElement>& gens) {
    if (gens.empty()) return BigUint(1);
    int k = gens.front().k;
    if (k > 12) throw DimensionError("natural action limited to k <= 12");
    std::vector<std::uint32_t> points;
    for (std::uint32_t v = 1; v < (std::uint32_t(1) << k); ++v) points.push_back(v);
    return generated_group_order(gens, points);
}

BigUint gl_order(int k) {
    BigUint out(1);
    for (int i = 0; i < k; ++i)
        out.mul_u64((std::uint64_t(1) << k) - (std::uint64_t(1) << i));
    return out;
}

bool is_full_gl(const std::vector<GlElement>& gens) {
    if (gens.empty()) return false;
    return generated_group_order(gens) == gl_order(gens.front().k);
}

BigUint generated_pair_group_order(const std::vector<GlElement>& a,
                                   const std::vector<GlElement>& b) {
    if (a.size() != b.size()) throw DimensionError("generator lists differ in length");
    if (a.empty()) return BigUint(1);
    int k = a.front().k;
    if (2 * k > 24) throw DimensionError("pair action limited to k <= 12");
    std::vector<GlElement> gens;
    for (std::size_t i = 0; i < a.size(); ++i) {
        GlElement g;
        g.k = 2 * k;
        g.rows.resize(2 * k, 0);
        for (int r = 0; r < k; ++r) {
            g.rows[r] = a[i].rows[r];
            g.rows[k + r] = static_cast<std::uint32_t>(b[i].rows[r]) << k;
        }
        gens.push_back(g);
    }
    // The pair action is faithful on vectors supported in a single block.
    std::vector<std::uint32_t> points;
    for (std::uint32_t v = 1; v < (std::uint32_t(1) << k); ++v) {
        points.push_back(v);
        points.push_back(v << k);
    }
    return generated_group_order(gens, points);
}

}  // namespace cyclotwist
