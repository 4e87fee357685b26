#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclotwist/f2.hpp"

namespace cyclotwist {

// Unsigned big integer, base 2^64 limbs. Only what group orders need.
class BigUint {
  public:
    BigUint() : limbs_{0} {}
    explicit BigUint(std::uint64_t v) : limbs_{v} {}
    static BigUint from_decimal(const std::string& s);

    void mul_u64(std::uint64_t v);
    bool operator==(const BigUint& other) const;
    bool operator<(const BigUint& other) const;
    std::string to_string() const;

  private:
    void trim();
    std::vector<std::uint64_t> limbs_;  // little-endian
};

// Invertible k x k binary matrix with rows packed into 32-bit words (k <= 32).
// Acts on row vectors from the right: v -> v M = xor of rows M_j, j in v.
struct GlElement {
    int k = 0;
    std::vector<std::uint32_t> rows;

    static GlElement identity(int k);
    static GlElement from_matrix(const BinMatrix& m);
    GlElement operator*(const GlElement& other) const;
    GlElement inverse() const;
    std::uint32_t apply(std::uint32_t v) const;
    bool is_identity() const;
    bool operator==(const GlElement& other) const = default;
};

// Exact order of the group generated by `gens` acting faithfully on the
// given points, via a stabiliser chain with Schreier generators.
// Non-invertible generators are rejected.
BigUint generated_group_order(const std::vector<GlElement>& gens,
                              const std::vector<std::uint32_t>& points);

// Natural action on the 2^k - 1 nonzero vectors. Requires k <= 12.
BigUint generated_group_order(const std::vector<GlElement>& gens);

// prod_{i=0}^{k-1} (2^k - 2^i)
BigUint gl_order(int k);

bool is_full_gl(const std::vector<GlElement>& gens);

// Order of the group generated by the block-diagonal pairs (A_i, B_i),
// acting on the disjoint union of two copies of the nonzero vectors.
BigUint generated_pair_group_order(const std::vector<GlElement>& a,
                                   const std::vector<GlElement>& b);

}  // namespace cyclotwist
