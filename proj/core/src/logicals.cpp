#include "cyclotwist/logicals.hpp"

#include <sstream>

#include "cyclotwist/errors.hpp"

namespace cyclotwist {

std::string to_string(const LogicalLabel& label) {
    std::ostringstream os;
    os << (label.pauli == Pauli::X ? "X" : "Z") << (label.orient == Orient::h ? "h" : "v")
       << "[" << label.i << "," << label.j << "]";
    return os.str();
}

int LogicalBasis::x_index(Orient o, int i, int j) const {
    for (std::size_t r = 0; r < x_labels.size(); ++r)
        if (x_labels[r].orient == o && x_labels[r].i == i && x_labels[r].j == j)
            return static_cast<int>(r);
    throw DimensionError("no such X basis row");
}

int LogicalBasis::z_index(Orient o, int i, int j) const {
    for (std::size_t r = 0; r < z_labels.size(); ++r)
        if (z_labels[r].orient == o && z_labels[r].i == i && z_labels[r].j == j)
            return static_cast<int>(r);
    throw DimensionError("no such Z basis row");
}

BitVec kunneth_pattern_row(const CodeIndex& ix, EdgeKind kind, const CyclicPoly& f1,
                           const CyclicPoly& f2) {
    BitVec row(ix.num_qubits());
    for (int a : f1.exponents())
        for (int b : f2.exponents()) row.flip(ix.qubit_index(kind, a, b));
    return row;
}

namespace {

BitVec pattern_row(const CodeIndex& ix, EdgeKind kind, const CyclicPoly& f1,
                   const CyclicPoly& f2) {
    return kunneth_pattern_row(ix, kind, f1, f2);
}

}  // namespace

LogicalBasis kunneth_basis(const CodeBlueprint& blueprint, const CssCode& code) {
    if (blueprint.kind == ProductKind::bivariate)
        throw BasisInvalid("no analytic basis for raw bivariate codes; map to the balanced product");
    CodeIndex ix(blueprint);
    const CyclicCode& c1 = blueprint.code1;
    const CyclicCode& c2 = blueprint.code2;
    int a1 = blueprint.alpha1(), a2 = blueprint.alpha2();
    int k = 2 * a1 * a2;

    CyclicPoly g1x = blueprint.x_basis_uses_transpose ? poly_transpose(c1.g) : c1.g;
    CyclicPoly g2x = blueprint.x_basis_uses_transpose ? poly_transpose(c2.g) : c2.g;

    LogicalBasis basis;
    basis.x_rows = BinMatrix(0, code.n);
    basis.z_rows = BinMatrix(0, code.n);

    auto mono1 = [&](int i) { return CyclicPoly::monomial(c1.n, i); };
    auto mono2 = [&](int j) { return CyclicPoly::monomial(c2.n, j); };

    // X rows: h block then v block.
    for (int i = 1; i <= a1; ++i)
        for (int j = 1; j <= a2; ++j) {
            basis.x_rows.append_row(
                pattern_row(ix, EdgeKind::vertical, mono1(i - 1), g2x.shifted(j - 1)));
            basis.x_labels.push_back({Pauli::X, Orient::h, i, j});
        }
    for (int i = 1; i <= a1; ++i)
        for (int j = 1; j <= a2; ++j) {
            basis.x_rows.append_row(
                pattern_row(ix, EdgeKind::horizontal, g1x.shifted(i - 1), mono2(j - 1)));
            basis.x_labels.push_back({Pauli::X, Orient::v, i, j});
        }
    // Z rows: v block then h block.
    for (int i = 1; i <= a1; ++i)
        for (int j = 1; j <= a2; ++j) {
            basis.z_rows.append_row(
                pattern_row(ix, EdgeKind::vertical, c1.g.shifted(i - 1), mono2(j - 1)));
            basis.z_labels.push_back({Pauli::Z, Orient::v, i, j});
        }
    for (int i = 1; i <= a1; ++i)
        for (int j = 1; j <= a2; ++j) {
            basis.z_rows.append_row(
                pattern_row(ix, EdgeKind::horizontal, mono1(i - 1), c2.g.shifted(j - 1)));
            basis.z_labels.push_back({Pauli::Z, Orient::h, i, j});
        }

    if (basis.k() != k) throw BasisInvalid("constructed row count does not match 2 a1 a2");
    basis.pairing = basis.x_rows * basis.z_rows.transposed();

    VerifyReport report = verify_logicals(code, basis, code.n <= 20000);
    if (!report.all_ok())
        throw BasisInvalid("analytic basis failed verification against the code");
    return basis;
}

VerifyReport verify_logicals(const CssCode& code, const LogicalBasis& basis,
                             bool check_rank_count) {
    VerifyReport rep;
    rep.kernel_ok = true;
    for (std::size_t r = 0; r < basis.x_rows.rows(); ++r)
        if (code.hz.mul_right(basis.x_rows.row(r)).any()) rep.kernel_ok = false;
    for (std::size_t r = 0; r < basis.z_rows.rows(); ++r)
        if (code.hx.mul_right(basis.z_rows.row(r)).any()) rep.kernel_ok = false;

    rep.pairing_invertible = gf2_inverse(basis.pairing).has_value();

    // An invertible pairing already rules out stabilizer rows; check the
    // row spaces directly as well when it is cheap.
    rep.not_stabilizer_ok = rep.pairing_invertible;
    if (code.n <= 4000) {
        RowSpace xs(code.hx), zs(code.hz);
        for (std::size_t r = 0; r < basis.x_rows.rows(); ++r)
            if (xs.contains(basis.x_rows.row(r))) rep.not_stabilizer_ok = false;
        for (std::size_t r = 0; r < basis.z_rows.rows(); ++r)
            if (zs.contains(basis.z_rows.row(r))) rep.not_stabilizer_ok = false;
    }

    if (check_rank_count) {
        rep.k_checked = true;
        rep.k_by_rank = code.n - static_cast<int>(gf2_rank(code.hx)) -
                        static_cast<int>(gf2_rank(code.hz));
        rep.k_matches_rank = rep.k_by_rank == basis.k();
    }
    return rep;
}

BitVec reduce_to_basis(const CssCode& code, const LogicalBasis& basis,
                       const BitVec& pauli_support, Pauli pauli) {
    const BinMatrix& opposite = pauli == Pauli::X ? code.hz : code.hx;
    if (opposite.mul_right(pauli_support).any())
        throw NotALogical("support does not commute with the opposite checks");

    int k = basis.k();
    const BinMatrix& partner = pauli == Pauli::X ? basis.z_rows : basis.x_rows;
    BitVec pair_bits(k);
    for (int r = 0; r < k; ++r)
        if (partner.row(r).dot(pauli_support)) pair_bits.set(r, true);

    // Coordinates satisfy c P = pair_bits for X (resp. c P^T for Z).
    BinMatrix p = pauli == Pauli::X ? basis.pairing : basis.pairing.transposed();
    auto inv = gf2_inverse(p);
    if (!inv) throw BasisInvalid("pairing is singular");
    return inv->mul_left(pair_bits);
}

LogicalBasis extract_symplectic_basis(const CssCode& code) {
    // Independent logical representatives: kernel vectors of the opposite
    // checks that stay independent modulo the stabilizer row space.
    auto logical_reps = [&](const BinMatrix& opposite, const BinMatrix& stabilizers) {
        BinMatrix aug = stabilizers;
        std::size_t rank = gf2_rank(aug);
        BinMatrix reps(0, code.n);
        BinMatrix kernel = kernel_basis(opposite);
        for (std::size_t r = 0; r < kernel.rows(); ++r) {
            aug.append_row(kernel.row(r));
            std::size_t new_rank = gf2_rank(aug);
            if (new_rank > rank) {
                rank = new_rank;
                reps.append_row(kernel.row(r));
            }
        }
        return reps;
    };
    BinMatrix x_rows = logical_reps(code.hz, code.hx);
    BinMatrix z_rows = logical_reps(code.hx, code.hz);
    if (x_rows.rows() != z_rows.rows())
        throw BasisInvalid("X and Z logical spaces have different dimensions");
    int k = static_cast<int>(x_rows.rows());

    // Symplectic Gram-Schmidt: pair row i of X with row i of Z and clear
    // all other overlaps.
    for (int i = 0; i < k; ++i) {
        int pr = -1, pc = -1;
        for (int r = i; r < k && pr < 0; ++r)
            for (int c = i; c < k; ++c)
                if (x_rows.row(r).dot(z_rows.row(c))) {
                    pr = r;
                    pc = c;
                    break;
                }
        if (pr < 0) throw BasisInvalid("logical spaces do not pair; extraction failed");
        std::swap(x_rows.row(i), x_rows.row(pr));
        std::swap(z_rows.row(i), z_rows.row(pc));
        for (int r = 0; r < k; ++r) {
            if (r != i && x_rows.row(r).dot(z_rows.row(i))) x_rows.row(r) ^= x_rows.row(i);
            if (r != i && x_rows.row(i).dot(z_rows.row(r))) z_rows.row(r) ^= z_rows.row(i);
        }
    }

    LogicalBasis basis;
    basis.x_rows = std::move(x_rows);
    basis.z_rows = std::move(z_rows);
    for (int i = 0; i < k; ++i) {
        basis.x_labels.push_back({Pauli::X, Orient::h, i + 1, 0});
        basis.z_labels.push_back({Pauli::Z, Orient::h, i + 1, 0});
    }
    basis.pairing = basis.x_rows * basis.z_rows.transposed();
    if (!(basis.pairing == BinMatrix::identity(k)))
        throw BasisInvalid("extracted basis is not symplectic");
    return basis;
}

LogicalBasis product_basis(const CodeBlueprint& blueprint, const CssCode& code) {
    if (blueprint.kind != ProductKind::bivariate) {
        try {
            return kunneth_basis(blueprint, code);
        } catch (const BasisInvalid&) {
        }
    }
    return extract_symplectic_basis(code);
}

LogicalBasis symplectify(const LogicalBasis& basis) {
    auto inv = gf2_inverse(basis.pairing);
    if (!inv) throw BasisInvalid("pairing is singular");
    LogicalBasis out = basis;
    out.x_rows = *inv * basis.x_rows;
    out.pairing = out.x_rows * out.z_rows.transposed();
    if (!(out.pairing == BinMatrix::identity(basis.k())))
        throw BasisInvalid("symplectification did not produce the identity pairing");
    return out;
}

}  // namespace cyclotwist
