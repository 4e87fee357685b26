#pragma once

#include <utility>

#include "cyclotwist/poly.hpp"

namespace cyclotwist {

// Classical cyclic code presented by a check/generator polynomial pair
// with p g = 0 in F2[x]/(x^n + 1). Representative polynomials of
// non-minimal degree are allowed; alpha is the dimension of the code,
// equal to deg gcd(p, x^n + 1).
struct CyclicCode {
    int n = 0;
    CyclicPoly p;
    CyclicPoly g;
    int alpha = 0;
    // Set when deg p (as a plain polynomial) exceeds alpha, i.e. p is a
    // higher-weight representative of the minimal check polynomial.
    bool representative_exceeds_minimal = false;
};

// Validates p g = 0 and computes alpha both by gcd against x^n + 1 and by
// the rank of the regular representation; the two must agree.
CyclicCode make_cyclic(int n, const CyclicPoly& p, const CyclicPoly& g);

// (dim H1, dim H0); both equal alpha.
std::pair<int, int> homology_dims(const CyclicCode& c);

struct HomologyReps {
    BinMatrix h1;  // rows x^i g for 0 <= i < alpha
    BinMatrix h0;  // rows x^i for 0 <= i < alpha
};
HomologyReps homology_reps(const CyclicCode& c);

// Minimum Hamming weight over the 2^alpha - 1 nonzero codewords spanned
// by the H1 basis. Requires alpha <= 24.
int classical_distance(const CyclicCode& c);

// Check and generator polynomials of the weight-3 family on n = 3q:
// p = 1 + x + x^2 and g = (1 + x) (1 + x^3 + ... + x^{3(q-1)}).
std::pair<CyclicPoly, CyclicPoly> family_polys(int q);

// The family code itself on n = 3q.
CyclicCode family_code(int q);

}  // namespace cyclotwist
