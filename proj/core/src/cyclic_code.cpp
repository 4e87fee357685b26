#include "cyclotwist/cyclic_code.hpp"

#include "cyclotwist/errors.hpp"

namespace cyclotwist {

CyclicCode make_cyclic(int n, const CyclicPoly& p, const CyclicPoly& g) {
    if (p.modulus() != n || g.modulus() != n)
        throw DimensionError("polynomial modulus does not match code length");
    if (p.is_zero() || g.is_zero()) throw InvalidPair("check and generator must be nonzero");
    if (!poly_mul(p, g).is_zero())
        throw InvalidPair("check and generator polynomials do not annihilate");

    PlainPoly gcd = poly_gcd(PlainPoly::from_cyclic(p), PlainPoly::x_n_plus_1(n));
    int alpha = gcd.degree();
    int alpha_by_rank = n - static_cast<int>(gf2_rank(regular_representation(p)));
    if (alpha != alpha_by_rank)
        throw InvalidPair("gcd degree disagrees with regular-representation rank");
    if (alpha < 1) throw InvalidPair("check polynomial is a unit; code is trivial");

    CyclicCode c;
    c.n = n;
    c.p = p;
    c.g = g;
    c.alpha = alpha;
    c.representative_exceeds_minimal =
        PlainPoly::from_cyclic(p).degree() != alpha;
    return c;
}

std::pair<int, int> homology_dims(const CyclicCode& c) {
    BinMatrix rep = regular_representation(c.p);
    int dim_h1 = c.n - static_cast<int>(gf2_rank(rep));
    int dim_h0 = c.n - static_cast<int>(gf2_rank(rep.transposed()));
    return {dim_h1, dim_h0};
}

HomologyReps homology_reps(const CyclicCode& c) {
    HomologyReps reps;
    reps.h1 = BinMatrix(0, c.n);
    reps.h0 = BinMatrix(0, c.n);
    for (int i = 0; i < c.alpha; ++i) {
        CyclicPoly row = c.g.shifted(i);
        BitVec v(c.n);
        for (int e : row.exponents()) v.set(e, true);
        reps.h1.append_row(v);
        BitVec m(c.n);
        m.set(i, true);
        reps.h0.append_row(m);
    }
    return reps;
}

int classical_distance(const CyclicCode& c) {
    if (c.alpha > 24) throw BudgetExceeded("kernel dimension exceeds enumeration budget", 0);
    HomologyReps reps = homology_reps(c);
    std::size_t best = c.n + 1;
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << c.alpha); ++mask) {
        BitVec v(c.n);
        for (int i = 0; i < c.alpha; ++i)
            if ((mask >> i) & 1) v ^= reps.h1.row(i);
        best = std::min(best, v.popcount());
    }
    return static_cast<int>(best);
}

std::pair<CyclicPoly, CyclicPoly> family_polys(int q) {
    if (q < 1) throw DimensionError("family parameter must be positive");
    int n = 3 * q;
    CyclicPoly p(n, {0, 1, 2});
    std::vector<int> comb;
    for (int i = 0; i < q; ++i) {
        comb.push_back(3 * i);
        comb.push_back(3 * i + 1);
    }
    CyclicPoly g(n, comb);
    return {p, g};
}

CyclicCode family_code(int q) {
    auto [p, g] = family_polys(q);
    return make_cyclic(3 * q, p, g);
}

}  // namespace cyclotwist
