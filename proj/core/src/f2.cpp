#include "cyclotwist/f2.hpp"

#include <bit>

namespace cyclotwist {

BitVec BitVec::from_indices(std::size_t length, const std::vector<std::size_t>& ones) {
    BitVec v(length);
    for (std::size_t i : ones) {
        if (i >= length) throw DimensionError("bit index out of range");
        v.flip(i);
    }
    return v;
}

void BitVec::operator^=(const BitVec& other) {
    if (other.n_ != n_) throw DimensionError("BitVec length mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= other.w_[i];
}

bool BitVec::any() const {
    for (std::uint64_t w : w_)
        if (w) return true;
    return false;
}

std::size_t BitVec::popcount() const {
    std::size_t c = 0;
    for (std::uint64_t w : w_) c += std::popcount(w);
    return c;
}

bool BitVec::dot(const BitVec& other) const {
    if (other.n_ != n_) throw DimensionError("BitVec length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & other.w_[i];
    return std::popcount(acc) & 1;
}

bool BitVec::intersects(const BitVec& other) const {
    if (other.n_ != n_) throw DimensionError("BitVec length mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & other.w_[i]) return true;
    return false;
}

std::vector<std::size_t> BitVec::set_bits() const {
    std::vector<std::size_t> out;
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
        std::uint64_t w = w_[wi];
        while (w) {
            out.push_back(wi * 64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

void BitVec::clear() {
    for (auto& w : w_) w = 0;
}

BinMatrix BinMatrix::identity(std::size_t n) {
    BinMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

void BinMatrix::append_row(const BitVec& v) {
    if (v.size() != cols_) throw DimensionError("appended row has wrong length");
    row_.push_back(v);
    ++rows_;
}

BinMatrix BinMatrix::transposed() const {
    BinMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c : row_[r].set_bits()) t.set(c, r, true);
    return t;
}

BinMatrix BinMatrix::operator*(const BinMatrix& other) const {
    if (cols_ != other.rows_) throw DimensionError("matrix product shape mismatch");
    BinMatrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c : row_[r].set_bits()) out.row(r) ^= other.row(c);
    return out;
}

BitVec BinMatrix::mul_left(const BitVec& v) const {
    if (v.size() != rows_) throw DimensionError("vector length mismatch");
    BitVec out(cols_);
    for (std::size_t r : v.set_bits()) out ^= row_[r];
    return out;
}

BitVec BinMatrix::mul_right(const BitVec& v) const {
    if (v.size() != cols_) throw DimensionError("vector length mismatch");
    BitVec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        if (row_[r].dot(v)) out.set(r, true);
    return out;
}

bool BinMatrix::is_zero() const {
    for (const auto& r : row_)
        if (r.any()) return false;
    return true;
}

std::size_t BinMatrix::max_row_weight() const {
    std::size_t best = 0;
    for (const auto& r : row_) best = std::max(best, r.popcount());
    return best;
}

namespace {

std::size_t leading_bit(const BitVec& v) {
    for (std::size_t wi = 0; wi < v.words(); ++wi)
        if (v.word(wi)) return wi * 64 + std::countr_zero(v.word(wi));
    return v.size();
}

// Incremental reduced echelon form with leftmost pivots. Optionally tracks,
// for every echelon row, its combination over the source rows, and collects
// the combinations that reduced to zero (kernel of the row map).
struct Sweep {
    std::vector<BitVec> rows;
    std::vector<BitVec> combo;
    std::vector<std::size_t> pivots;
    std::vector<BitVec> vanished;
    bool track;

    explicit Sweep(bool track_combo) : track(track_combo) {}

    void feed(BitVec v, std::size_t source_index, std::size_t source_count) {
        BitVec c;
        if (track) {
            c = BitVec(source_count);
            c.set(source_index, true);
        }
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (v.get(pivots[k])) {
                v ^= rows[k];
                if (track) c ^= combo[k];
            }
        }
        std::size_t p = leading_bit(v);
        if (p == v.size()) {
            if (track) vanished.push_back(std::move(c));
            return;
        }
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (rows[k].get(p)) {
                rows[k] ^= v;
                if (track) combo[k] ^= c;
            }
        }
        std::size_t pos = 0;
        while (pos < pivots.size() && pivots[pos] < p) ++pos;
        rows.insert(rows.begin() + pos, std::move(v));
        if (track) combo.insert(combo.begin() + pos, std::move(c));
        pivots.insert(pivots.begin() + pos, p);
    }
};

Sweep echelonize(const BinMatrix& m, bool track_combo) {
    Sweep s(track_combo);
    for (std::size_t r = 0; r < m.rows(); ++r) s.feed(m.row(r), r, m.rows());
    return s;
}

}  // namespace

std::size_t gf2_rank(const BinMatrix& m) {
    return echelonize(m, false).pivots.size();
}

BinMatrix kernel_basis(const BinMatrix& m) {
    // Kernel vectors of m are vanishing combinations of the columns, i.e.
    // of the rows of the transpose.
    Sweep s = echelonize(m.transposed(), true);
    BinMatrix out(0, m.cols());
    for (auto& c : s.vanished) out.append_row(c);
    return out;
}

std::optional<BitVec> solve_in_rowspace(const BinMatrix& m, const BitVec& v) {
    if (v.size() != m.cols()) throw DimensionError("solve_in_rowspace length mismatch");
    RowSpace rs(m);
    return rs.express(v);
}

std::optional<BinMatrix> gf2_inverse(const BinMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("inverse of non-square matrix");
    std::size_t n = m.rows();
    RowSpace rs(m);
    if (rs.rank() != n) return std::nullopt;
    // Row i of the inverse solves c m = e_i.
    BinMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        BitVec e(n);
        e.set(i, true);
        inv.row(i) = *rs.express(e);
    }
    return inv;
}

bool product_is_zero(const BinMatrix& a, const BinMatrix& b) {
    if (a.cols() != b.cols()) throw DimensionError("product shape mismatch");
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.rows(); ++j)
            if (a.row(i).dot(b.row(j))) return false;
    return true;
}

RowSpace::RowSpace(const BinMatrix& m) : cols_(m.cols()), source_rows_(m.rows()) {
    Sweep s = echelonize(m, true);
    echelon_ = std::move(s.rows);
    combo_ = std::move(s.combo);
    pivots_ = std::move(s.pivots);
}

bool RowSpace::contains(const BitVec& v) const {
    BitVec r = v;
    for (std::size_t k = 0; k < echelon_.size(); ++k)
        if (r.get(pivots_[k])) r ^= echelon_[k];
    return !r.any();
}

std::optional<BitVec> RowSpace::express(const BitVec& v) const {
    if (v.size() != cols_) throw DimensionError("RowSpace length mismatch");
    BitVec r = v;
    BitVec c(source_rows_);
    for (std::size_t k = 0; k < echelon_.size(); ++k) {
        if (r.get(pivots_[k])) {
            r ^= echelon_[k];
            c ^= combo_[k];
        }
    }
    if (r.any()) return std::nullopt;
    return c;
}

}  // namespace cyclotwist
