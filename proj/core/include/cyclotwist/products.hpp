#pragma once

#include <utility>

#include "cyclotwist/css.hpp"

namespace cyclotwist {

// Hypergraph product of two cyclic codes. Qubit blocks are stacked as
// [vertical | horizontal]; checks carry group-element tuples.
ProductCode hgp_build(const CyclicCode& c1, const CyclicCode& c2);

// The [[18q^2, 8, 2q]] family: product of two weight-3 family codes on
// n = 3q, with g used for both the X and Z logical bases.
ProductCode hgp_family(int q);

// Toric code: product of two repetition codes.
ProductCode toric_build(int l, int m);

// Canonical class representatives x^i (x) x^j, i in {0,1,2}, j in [0, l).
std::vector<GroupTuple> bp_class_basis(int l);

// Regular representations of e (x) x and x (x) e on the class basis.
// Returns (generator of the second factor, generator of the first factor).
std::pair<BinMatrix, BinMatrix> bp_generator_matrices(int l);

// Balanced product of two family-code representatives on n = l = 3q over
// the subgroup generated by x^3. Yields an [[18q, 8]] code.
ProductCode bp_build(const CyclicPoly& p1, const CyclicPoly& p2, int l);

// Bivariate bicycle code: H_X = [A | B], H_Z = [B^T | A^T] on 2 j k qubits.
ProductCode bb_build(const BivariatePoly& a, const BivariatePoly& b, int j, int k);

// Relabeling taking a bivariate bicycle code onto a balanced-product code
// bit-exactly. All permutations map bivariate indices to balanced indices.
struct BbBpIsomorphism {
    int q = 0;
    std::vector<int> qubit_perm;
    std::vector<int> x_check_perm;
    std::vector<int> z_check_perm;
    // Images of the two algebra generators under the matching automorphism.
    GroupTuple theta_u, theta_w;
};

// Computes and verifies the relabeling between a bivariate bicycle code and
// a balanced-product code for parameter q (q mod 3 != 0). Throws
// IsomorphismUnavailable when q is divisible by 3.
BbBpIsomorphism bb_bp_isomorphism(const ProductCode& bb, const ProductCode& bp, int q);

// Applies the relabeling to the bivariate code; the result must equal the
// balanced-product code bit-exactly.
CssCode apply_isomorphism(const CssCode& bb, const BbBpIsomorphism& iso);

// Images of balanced-product representative polynomials under the inverse
// of the algebra map, as bivariate bicycle polynomials (A from p1, B from p2).
std::pair<BivariatePoly, BivariatePoly> bb_from_bp_polys(const CyclicPoly& p1,
                                                         const CyclicPoly& p2, int q);

// Balanced-product image of a bivariate bicycle code whose polynomials map
// to pure vertical/horizontal class supports: the vertical polynomial comes
// from B and the horizontal one from A. Throws IsomorphismUnavailable when
// q is divisible by 3 or the supports do not split.
ProductCode bb_to_bp_image(const ProductCode& bb);

// The [[90,8,10]] bivariate-bicycle instance and its balanced-product
// counterpart (q = 5, weight-3 representatives).
ProductCode bb90_build();
ProductCode bp90_build();

}  // namespace cyclotwist
