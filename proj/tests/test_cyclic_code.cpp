#include <doctest.h>

#include "cyclotwist/cyclic_code.hpp"
#include "cyclotwist/errors.hpp"

using namespace cyclotwist;

namespace {

CyclicCode repetition(int n) {
    std::vector<int> all;
    for (int i = 0; i < n; ++i) all.push_back(i);
    return make_cyclic(n, CyclicPoly(n, {0, 1}), CyclicPoly(n, all));
}

}  // namespace

TEST_CASE("make_cyclic validates and computes alpha") {
    CyclicCode rep = repetition(3);
    CHECK(rep.alpha == 1);
    CHECK_FALSE(rep.representative_exceeds_minimal);

    CyclicCode fam15 = family_code(5);
    CHECK(fam15.n == 15);
    CHECK(fam15.alpha == 2);

    // higher-weight representative of the same code: 1+x+x^5 = (1+x+x^2)(1+x^2+x^3)
    auto [p, g] = family_polys(5);
    (void)p;
    CyclicCode alt = make_cyclic(15, CyclicPoly(15, {0, 1, 5}), g);
    CHECK(alt.alpha == 2);
    CHECK(alt.representative_exceeds_minimal);

    CHECK_THROWS_AS(make_cyclic(15, CyclicPoly(15, {0, 1}), g), InvalidPair);
    CHECK_THROWS_AS(make_cyclic(5, CyclicPoly::zero(5), CyclicPoly::one(5)), InvalidPair);
}

TEST_CASE("homology dimensions") {
    for (int n : {3, 5, 8}) {
        auto dims = homology_dims(repetition(n));
        CHECK(dims == std::pair<int, int>(1, 1));
    }
    CHECK(homology_dims(family_code(5)) == std::pair<int, int>(2, 2));
    for (int q : {1, 2, 3, 7}) CHECK(homology_dims(family_code(q)) == std::pair<int, int>(2, 2));
}

TEST_CASE("homology representatives") {
    CyclicCode rep3 = repetition(3);
    HomologyReps r3 = homology_reps(rep3);
    REQUIRE(r3.h1.rows() == 1);
    CHECK(r3.h1.row(0).popcount() == 3);
    CHECK(r3.h0.row(0) == BitVec::from_indices(3, {0}));

    CyclicCode fam = family_code(5);
    HomologyReps rf = homology_reps(fam);
    REQUIRE(rf.h1.rows() == 2);
    BinMatrix rep_p = regular_representation(fam.p);
    for (std::size_t r = 0; r < rf.h1.rows(); ++r)
        CHECK_FALSE(rep_p.mul_right(rf.h1.row(r)).any());

    // x^2 g = g + x g for the family polynomials
    CyclicPoly x2g = fam.g.shifted(2);
    CyclicPoly sum = fam.g + fam.g.shifted(1);
    CHECK(x2g == sum);

    // adding any further shift x^i g (i >= alpha) does not raise the rank
    BinMatrix extended = rf.h1;
    BitVec extra(fam.n);
    for (int e : fam.g.shifted(3).exponents()) extra.set(e, true);
    extended.append_row(extra);
    CHECK(gf2_rank(extended) == 2);

    // h0 monomial combinations stay independent of the transposed row space
    BinMatrix rep_pt = regular_representation(fam.p).transposed();
    for (int mask = 1; mask < 4; ++mask) {
        BitVec combo(fam.n);
        if (mask & 1) combo ^= rf.h0.row(0);
        if (mask & 2) combo ^= rf.h0.row(1);
        CHECK_FALSE(solve_in_rowspace(rep_pt, combo).has_value());
    }
}

TEST_CASE("classical distance") {
    CHECK(classical_distance(repetition(5)) == 5);
    CHECK(classical_distance(family_code(5)) == 10);
    CHECK(classical_distance(family_code(3)) == 6);
    for (int q = 1; q <= 12; ++q) CHECK(classical_distance(family_code(q)) == 2 * q);
}

TEST_CASE("transposed pair is also a valid code") {
    for (int q : {2, 5}) {
        CyclicCode c = family_code(q);
        CHECK(poly_mul(poly_transpose(c.p), poly_transpose(c.g)).is_zero());
        CyclicCode t = make_cyclic(c.n, poly_transpose(c.p), poly_transpose(c.g));
        CHECK(t.alpha == c.alpha);
    }
}
