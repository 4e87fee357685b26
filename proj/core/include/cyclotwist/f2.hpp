#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cyclotwist/errors.hpp"

namespace cyclotwist {

// Fixed-length bit vector packed into 64-bit words.
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(std::size_t length) : n_(length), w_((length + 63) / 64, 0) {}

    static BitVec from_indices(std::size_t length, const std::vector<std::size_t>& ones);

    std::size_t size() const { return n_; }
    std::size_t words() const { return w_.size(); }
    const std::uint64_t* data() const { return w_.data(); }
    std::uint64_t* data() { return w_.data(); }
    std::uint64_t word(std::size_t i) const { return w_[i]; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool v) {
        std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (v) w_[i >> 6] |= mask; else w_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    void operator^=(const BitVec& other);
    bool operator==(const BitVec& other) const = default;

    bool any() const;
    std::size_t popcount() const;
    // Parity of the AND with another vector of the same length.
    bool dot(const BitVec& other) const;
    // True iff the AND with another vector is nonzero.
    bool intersects(const BitVec& other) const;
    std::vector<std::size_t> set_bits() const;
    void clear();

  private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Dense binary matrix, one BitVec per row.
class BinMatrix {
  public:
    BinMatrix() = default;
    BinMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), row_(rows, BitVec(cols)) {}

    static BinMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    BitVec& row(std::size_t r) { return row_[r]; }
    const BitVec& row(std::size_t r) const { return row_[r]; }
    bool get(std::size_t r, std::size_t c) const { return row_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { row_[r].set(c, v); }

    void append_row(const BitVec& v);
    BinMatrix transposed() const;
    BinMatrix operator*(const BinMatrix& other) const;
    // Row vector v (length rows()) times this matrix.
    BitVec mul_left(const BitVec& v) const;
    // This matrix times column vector v (length cols()), result length rows().
    BitVec mul_right(const BitVec& v) const;
    bool operator==(const BinMatrix& other) const = default;
    bool is_zero() const;

    std::size_t max_row_weight() const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BitVec> row_;
};

// Row rank over GF(2), deterministic leftmost-pivot elimination.
std::size_t gf2_rank(const BinMatrix& m);

// Rows form a basis of { v : m v = 0 }; row count = cols - rank.
BinMatrix kernel_basis(const BinMatrix& m);

// Coefficients c with c m = v, or nullopt if v is outside the row space.
std::optional<BitVec> solve_in_rowspace(const BinMatrix& m, const BitVec& v);

// Inverse of a square matrix, or nullopt if singular.
std::optional<BinMatrix> gf2_inverse(const BinMatrix& m);

// True iff a hb^T = 0, i.e. every row of a is orthogonal to every row of b.
bool product_is_zero(const BinMatrix& a, const BinMatrix& b);

// Precomputed row-echelon form supporting repeated membership queries
// against the row space of a fixed matrix.
class RowSpace {
  public:
    explicit RowSpace(const BinMatrix& m);
    std::size_t rank() const { return pivots_.size(); }
    bool contains(const BitVec& v) const;
    // Coefficients over the original rows, or nullopt.
    std::optional<BitVec> express(const BitVec& v) const;

  private:
    std::size_t cols_ = 0, source_rows_ = 0;
    std::vector<BitVec> echelon_;   // reduced rows
    std::vector<BitVec> combo_;     // matching combination over source rows
    std::vector<std::size_t> pivots_;
};

}  // namespace cyclotwist
