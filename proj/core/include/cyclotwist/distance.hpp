#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cyclotwist/logicals.hpp"

namespace cyclotwist {

struct DistanceResult {
    Pauli side = Pauli::X;
    // Every support of weight < certified_lower is exhaustively excluded.
    int certified_lower = 1;
    std::optional<int> best_upper;
    std::optional<BitVec> witness;
    bool exact = false;
    std::vector<std::string> methods;
};

struct EnumOptions {
    int wmax = -1;  // -1: largest weight affordable within the budget
    std::uint64_t budget = 2'000'000'000;
    bool use_symmetry = false;
    int threads = 1;
};

// Exhaustive test of all supports of weight <= wmax against kernel
// membership (checks v = 0) and nontriviality (pairing v != 0; an empty
// pairing accepts any nonzero vector). `block2_start` >= 0 enables the
// translation-symmetry restriction for codes whose translation group acts
// transitively on each of the two qubit blocks.
DistanceResult bounded_weight_enum(const BinMatrix& checks, const BinMatrix& pairing,
                                   const EnumOptions& opts, int block2_start = -1);

// Side-specific wrapper: side X searches ker hz against the Z logicals.
DistanceResult bounded_weight_enum(const CssCode& code, const LogicalBasis& basis,
                                   Pauli side, const EnumOptions& opts);

// Number of candidates weight-<=w enumeration will visit (used to derive
// affordable wmax from a budget).
std::uint64_t enum_candidate_count(int n, int w, bool symmetric, int block2_start);

// Exact minimum weight over the full kernel, restricted to vectors with a
// nonzero pairing. Kernel dimension is limited to 31.
DistanceResult kernel_coset_enum(const BinMatrix& checks, const BinMatrix& pairing);
DistanceResult kernel_coset_enum(const CssCode& code, const LogicalBasis& basis, Pauli side);

struct IsdOptions {
    int iterations = 10000;
    std::uint64_t seed = 1;
};

// Randomized information-set search for a low-weight logical; returns an
// upper bound with a verified witness. Deterministic for a fixed seed.
DistanceResult isd_upper_bound(const CssCode& code, const LogicalBasis& basis, Pauli side,
                               const IsdOptions& opts);

struct CssDistanceOptions {
    EnumOptions enumeration;
    IsdOptions isd;
    bool try_kernel_coset = true;
    int kernel_dim_limit = 26;
};

struct CssDistanceResult {
    DistanceResult x;
    DistanceResult z;
    int certified_lower = 1;  // min over sides
    std::optional<int> best_upper;
    bool exact = false;
    // Set when the requested enumeration weight did not fit the budget and
    // a reduced weight was certified instead.
    bool budget_exceeded = false;
};

CssDistanceResult css_distance(const CssCode& code, const LogicalBasis& basis,
                               const CssDistanceOptions& opts = {});

}  // namespace cyclotwist
