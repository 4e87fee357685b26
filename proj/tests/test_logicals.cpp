#include <doctest.h>

#include <random>

#include "cyclotwist/errors.hpp"
#include "cyclotwist/logicals.hpp"
#include "cyclotwist/products.hpp"

using namespace cyclotwist;

TEST_CASE("toric logical basis") {
    ProductCode toric = toric_build(3, 4);
    LogicalBasis basis = kunneth_basis(toric.blueprint, toric.code);
    REQUIRE(basis.k() == 2);

    // one X row of weight l (column of horizontal edges), one of weight m
    CHECK(basis.x_rows.row(basis.x_index(Orient::v, 1, 1)).popcount() == 3);
    CHECK(basis.x_rows.row(basis.x_index(Orient::h, 1, 1)).popcount() == 4);
    CHECK(basis.z_rows.row(basis.z_index(Orient::v, 1, 1)).popcount() == 3);
    CHECK(basis.z_rows.row(basis.z_index(Orient::h, 1, 1)).popcount() == 4);

    // pairing already the identity; symplectify is a no-op
    CHECK(basis.pairing == BinMatrix::identity(2));
    LogicalBasis sym = symplectify(basis);
    CHECK(sym.x_rows == basis.x_rows);
    CHECK(sym.z_rows == basis.z_rows);
}

TEST_CASE("family code logical basis has weight 2q rows") {
    for (int q : {1, 2, 3}) {
        ProductCode code = hgp_family(q);
        LogicalBasis basis = kunneth_basis(code.blueprint, code.code);
        REQUIRE(basis.k() == 8);
        for (int r = 0; r < 8; ++r) {
            CHECK(basis.x_rows.row(r).popcount() == static_cast<std::size_t>(2 * q));
            CHECK(basis.z_rows.row(r).popcount() == static_cast<std::size_t>(2 * q));
        }
        VerifyReport rep = verify_logicals(code.code, basis);
        CHECK(rep.all_ok());
        CHECK(rep.k_by_rank == 8);
    }
}

TEST_CASE("balanced product q=5 basis") {
    ProductCode code = bp90_build();
    LogicalBasis basis = kunneth_basis(code.blueprint, code.code);
    REQUIRE(basis.k() == 8);
    for (int r = 0; r < 8; ++r) {
        CHECK(basis.x_rows.row(r).popcount() == 10);
        CHECK(basis.z_rows.row(r).popcount() == 10);
    }
    VerifyReport rep = verify_logicals(code.code, basis);
    CHECK(rep.all_ok());
    CHECK(rep.k_by_rank == 8);
}

TEST_CASE("verify_logicals flags a stabilizer substitution") {
    ProductCode code = hgp_family(1);
    LogicalBasis basis = kunneth_basis(code.blueprint, code.code);
    LogicalBasis broken = basis;
    broken.x_rows.row(0) = code.code.hx.row(0);  // a stabilizer, not a logical
    broken.pairing = broken.x_rows * broken.z_rows.transposed();
    VerifyReport rep = verify_logicals(code.code, broken);
    CHECK_FALSE(rep.not_stabilizer_ok);
    CHECK_FALSE(rep.all_ok());
}

TEST_CASE("reduce_to_basis") {
    ProductCode code = hgp_family(3);
    LogicalBasis basis = kunneth_basis(code.blueprint, code.code);
    CodeIndex ix(code.blueprint);

    SUBCASE("stabilizer rows reduce to zero") {
        BitVec c = reduce_to_basis(code.code, basis, code.code.hx.row(5), Pauli::X);
        CHECK_FALSE(c.any());
        BitVec cz = reduce_to_basis(code.code, basis, code.code.hz.row(2), Pauli::Z);
        CHECK_FALSE(cz.any());
    }

    SUBCASE("basis rows reduce to unit vectors") {
        for (int r = 0; r < basis.k(); ++r) {
            BitVec cx = reduce_to_basis(code.code, basis, basis.x_rows.row(r), Pauli::X);
            CHECK(cx.popcount() == 1);
            CHECK(cx.get(r));
            BitVec cz = reduce_to_basis(code.code, basis, basis.z_rows.row(r), Pauli::Z);
            CHECK(cz.popcount() == 1);
            CHECK(cz.get(r));
        }
    }

    SUBCASE("vertically shifted logical lands on the stated combination") {
        // support of a v-type X logical translated to i = 3: x^2 g = (1 + x) g
        const CyclicCode& c1 = code.blueprint.code1;
        BitVec shifted(code.code.n);
        for (int e : c1.g.shifted(2).exponents())
            shifted.set(ix.qubit_index(EdgeKind::horizontal, e, 0), true);
        BitVec coeff = reduce_to_basis(code.code, basis, shifted, Pauli::X);
        BitVec expected(basis.k());
        expected.set(basis.x_index(Orient::v, 1, 1), true);
        expected.set(basis.x_index(Orient::v, 2, 1), true);
        CHECK(coeff == expected);
    }

    SUBCASE("non-kernel support raises NotALogical") {
        BitVec junk(code.code.n);
        junk.set(0, true);
        CHECK_THROWS_AS(reduce_to_basis(code.code, basis, junk, Pauli::X), NotALogical);
    }
}

TEST_CASE("symplectify produces the identity pairing") {
    ProductCode code = hgp_family(2);
    LogicalBasis basis = kunneth_basis(code.blueprint, code.code);
    CHECK_FALSE(basis.pairing == BinMatrix::identity(8));
    LogicalBasis sym = symplectify(basis);
    CHECK(sym.pairing == BinMatrix::identity(8));
    CHECK(sym.z_rows == basis.z_rows);
    VerifyReport rep = verify_logicals(code.code, sym);
    CHECK(rep.all_ok());

    LogicalBasis degenerate = basis;
    degenerate.x_rows.row(1) = degenerate.x_rows.row(0);
    degenerate.pairing = degenerate.x_rows * degenerate.z_rows.transposed();
    CHECK_THROWS_AS(symplectify(degenerate), BasisInvalid);
}
