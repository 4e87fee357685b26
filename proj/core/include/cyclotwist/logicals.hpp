#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclotwist/css.hpp"

namespace cyclotwist {

enum class Pauli { X, Z };
enum class Orient { h, v };

struct LogicalLabel {
    Pauli pauli;
    Orient orient;
    int i = 1;  // vertical translation index, 1-based
    int j = 1;  // horizontal translation index, 1-based
    bool operator==(const LogicalLabel&) const = default;
};

std::string to_string(const LogicalLabel& label);

// 2k labeled rows: k X-type and k Z-type. Row order is fixed so that the
// pairing x_rows z_rows^T has unit diagonal: X rows list h then v labels,
// Z rows list v then h labels, (i, j) lexicographic within each block.
struct LogicalBasis {
    BinMatrix x_rows;
    BinMatrix z_rows;
    std::vector<LogicalLabel> x_labels;
    std::vector<LogicalLabel> z_labels;
    BinMatrix pairing;  // x_rows * z_rows^T

    int k() const { return static_cast<int>(x_rows.rows()); }
    int x_index(Orient o, int i, int j) const;
    int z_index(Orient o, int i, int j) const;
};

// Analytic basis from classical homology representatives. Every row is
// verified against the code; failure throws BasisInvalid. On balanced
// products with even q the representative rows collapse (they span only
// part of the logical space and the pairing degenerates), which surfaces
// here as BasisInvalid.
LogicalBasis kunneth_basis(const CodeBlueprint& blueprint, const CssCode& code);

// Support row of one Kuenneth pattern: first-factor polynomial tensor
// second-factor polynomial on one edge kind, class-canonicalized for
// balanced products.
BitVec kunneth_pattern_row(const CodeIndex& ix, EdgeKind kind, const CyclicPoly& f1,
                           const CyclicPoly& f2);

// Computational symplectic basis for an arbitrary CSS code: k conjugate
// X/Z pairs with identity pairing, labelled by pair index only. Used where
// the analytic basis is unavailable.
LogicalBasis extract_symplectic_basis(const CssCode& code);

// Analytic basis when it verifies, extracted basis otherwise.
LogicalBasis product_basis(const CodeBlueprint& blueprint, const CssCode& code);

struct VerifyReport {
    bool kernel_ok = false;
    bool not_stabilizer_ok = false;
    bool pairing_invertible = false;
    bool k_matches_rank = false;
    bool k_checked = false;
    int k_by_rank = -1;
    bool all_ok() const {
        return kernel_ok && not_stabilizer_ok && pairing_invertible &&
               (!k_checked || k_matches_rank);
    }
};

// Kernel membership, non-membership in the stabilizer row space, pairing
// invertibility, and (for codes small enough to rank) the logical count.
VerifyReport verify_logicals(const CssCode& code, const LogicalBasis& basis,
                             bool check_rank_count = true);

// Coefficients c over the basis rows of the given Pauli type such that
// support = c . rows + stabilizer. Throws NotALogical if the support does
// not commute with the opposite checks.
BitVec reduce_to_basis(const CssCode& code, const LogicalBasis& basis,
                       const BitVec& pauli_support, Pauli pauli);

// Row-transforms the X rows by the inverse pairing so the new pairing is
// the identity; Z rows are unchanged.
LogicalBasis symplectify(const LogicalBasis& basis);

}  // namespace cyclotwist
