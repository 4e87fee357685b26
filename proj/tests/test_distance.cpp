#include <doctest.h>

#include "cyclotwist/distance.hpp"
#include "cyclotwist/errors.hpp"
#include "cyclotwist/products.hpp"

using namespace cyclotwist;

namespace {

LogicalBasis basis_of(const ProductCode& code) {
    return kunneth_basis(code.blueprint, code.code);
}

}  // namespace

TEST_CASE("rectangular toric distance is min(l, m)") {
    ProductCode toric = toric_build(3, 4);
    LogicalBasis basis = basis_of(toric);
    DistanceResult x = kernel_coset_enum(toric.code, basis, Pauli::X);
    DistanceResult z = kernel_coset_enum(toric.code, basis, Pauli::Z);
    CHECK(std::min(*x.best_upper, *z.best_upper) == 3);
}

TEST_CASE("toric distance by two independent methods") {
    ProductCode toric = toric_build(3, 3);
    LogicalBasis basis = basis_of(toric);

    DistanceResult coset = kernel_coset_enum(toric.code, basis, Pauli::Z);
    CHECK(coset.exact);
    CHECK(coset.best_upper == 3);

    EnumOptions opts;
    opts.wmax = 4;
    DistanceResult enumd = bounded_weight_enum(toric.code, basis, Pauli::Z, opts);
    CHECK(enumd.exact);
    CHECK(enumd.best_upper == 3);

    CssDistanceResult full = css_distance(toric.code, basis, {});
    CHECK(full.exact);
    CHECK(full.best_upper == 3);
}

TEST_CASE("balanced product distances for q=1 and q=2") {
    ProductCode q1 = bp_build(CyclicPoly(3, {0, 1, 2}), CyclicPoly(3, {0, 1, 2}), 3);
    LogicalBasis b1 = basis_of(q1);
    CssDistanceResult d1 = css_distance(q1.code, b1, {});
    CHECK(d1.exact);
    CHECK(d1.best_upper == 2);

    ProductCode q2 = bp_build(CyclicPoly(6, {0, 1, 2}), CyclicPoly(6, {0, 1, 2}), 6);
    LogicalBasis b2 = extract_symplectic_basis(q2.code);
    CssDistanceResult d2 = css_distance(q2.code, b2, {});
    CHECK(d2.exact);
    CHECK(d2.best_upper == 4);

    // bounded enumeration and kernel-coset agree on the [[36,8,4]] code
    DistanceResult coset = kernel_coset_enum(q2.code, b2, Pauli::X);
    EnumOptions opts;
    opts.wmax = 5;
    DistanceResult enumd = bounded_weight_enum(q2.code, b2, Pauli::X, opts);
    CHECK(coset.exact);
    CHECK(enumd.exact);
    CHECK(coset.best_upper == enumd.best_upper);
}

TEST_CASE("witnesses verify against the code") {
    ProductCode q2 = bp_build(CyclicPoly(6, {0, 1, 2}), CyclicPoly(6, {0, 1, 2}), 6);
    LogicalBasis basis = extract_symplectic_basis(q2.code);
    CssDistanceResult d = css_distance(q2.code, basis, {});
    REQUIRE(d.x.witness.has_value());
    CHECK_FALSE(q2.code.hz.mul_right(*d.x.witness).any());
    bool nontrivial = false;
    for (std::size_t r = 0; r < basis.z_rows.rows(); ++r)
        if (basis.z_rows.row(r).dot(*d.x.witness)) nontrivial = true;
    CHECK(nontrivial);
}

TEST_CASE("classical chain distance via kernel enumeration") {
    // n=15, p=1+x+x^2: the classical code distance is 10
    BinMatrix checks = regular_representation(CyclicPoly(15, {0, 1, 2}));
    DistanceResult r = kernel_coset_enum(checks, BinMatrix(0, 15));
    CHECK(r.exact);
    CHECK(r.best_upper == 10);
}

TEST_CASE("symmetry-restricted enumeration matches the full run") {
    for (int q : {1, 2}) {
        ProductCode code = bp_build(CyclicPoly(3 * q, {0, 1, 2}), CyclicPoly(3 * q, {0, 1, 2}),
                                    3 * q);
        LogicalBasis basis = q % 2 == 1 ? basis_of(code) : extract_symplectic_basis(code.code);
        for (Pauli side : {Pauli::X, Pauli::Z}) {
            EnumOptions plain;
            plain.wmax = 2 * q;
            EnumOptions sym = plain;
            sym.use_symmetry = true;
            DistanceResult a = bounded_weight_enum(code.code, basis, side, plain);
            DistanceResult b = bounded_weight_enum(code.code, basis, side, sym);
            CHECK(a.exact == b.exact);
            CHECK(a.best_upper == b.best_upper);
            CHECK(a.certified_lower == b.certified_lower);
        }
    }
}

TEST_CASE("threaded enumeration is deterministic") {
    ProductCode q2 = bp_build(CyclicPoly(6, {0, 1, 2}), CyclicPoly(6, {0, 1, 2}), 6);
    LogicalBasis basis = extract_symplectic_basis(q2.code);
    EnumOptions one;
    one.wmax = 4;
    EnumOptions four = one;
    four.threads = 4;
    DistanceResult a = bounded_weight_enum(q2.code, basis, Pauli::X, one);
    DistanceResult b = bounded_weight_enum(q2.code, basis, Pauli::X, four);
    CHECK(a.best_upper == b.best_upper);
    REQUIRE(a.witness.has_value());
    REQUIRE(b.witness.has_value());
    CHECK(*a.witness == *b.witness);
}

TEST_CASE("budget control") {
    ProductCode q2 = bp_build(CyclicPoly(6, {0, 1, 2}), CyclicPoly(6, {0, 1, 2}), 6);
    LogicalBasis basis = extract_symplectic_basis(q2.code);
    EnumOptions opts;
    opts.wmax = 6;
    opts.budget = 1000;  // only weight 1..2 fit
    try {
        bounded_weight_enum(q2.code, basis, Pauli::X, opts);
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        CHECK(e.largest_certifiable_wmax >= 1);
        CHECK(e.largest_certifiable_wmax < 6);
    }
}

TEST_CASE("ISD finds upper bounds deterministically") {
    ProductCode q2 = bp_build(CyclicPoly(6, {0, 1, 2}), CyclicPoly(6, {0, 1, 2}), 6);
    LogicalBasis basis = extract_symplectic_basis(q2.code);

    IsdOptions none;
    none.iterations = 0;
    DistanceResult empty = isd_upper_bound(q2.code, basis, Pauli::X, none);
    CHECK_FALSE(empty.best_upper.has_value());

    IsdOptions opts;
    opts.iterations = 200;
    opts.seed = 1;
    DistanceResult a = isd_upper_bound(q2.code, basis, Pauli::X, opts);
    DistanceResult b = isd_upper_bound(q2.code, basis, Pauli::X, opts);
    REQUIRE(a.best_upper.has_value());
    CHECK(*a.best_upper == 4);
    CHECK(a.best_upper == b.best_upper);
    REQUIRE(a.witness.has_value());
    CHECK(*a.witness == *b.witness);

    // [[72,8,4]] family product: ISD reaches the true distance
    ProductCode hgp2 = hgp_family(2);
    LogicalBasis hb = basis_of(hgp2);
    IsdOptions more;
    more.iterations = 400;
    DistanceResult h = isd_upper_bound(hgp2.code, hb, Pauli::X, more);
    REQUIRE(h.best_upper.has_value());
    CHECK(*h.best_upper == 4);
}

TEST_CASE("family logical rows bound the distance by 2q") {
    for (int q : {1, 2, 3}) {
        ProductCode code = hgp_family(q);
        LogicalBasis basis = basis_of(code);
        IsdOptions opts;
        opts.iterations = 300;
        DistanceResult r = isd_upper_bound(code.code, basis, Pauli::X, opts);
        REQUIRE(r.best_upper.has_value());
        CHECK(*r.best_upper <= 2 * q);
    }
}
