#pragma once

#include <cstddef>
#include <vector>

#include "cyclotwist/cyclic_code.hpp"
#include "cyclotwist/f2.hpp"

namespace cyclotwist {

enum class EdgeKind { vertical, horizontal };

// Qubit position: edge kind plus group-element tuple (a, b).
struct QubitLabel {
    EdgeKind kind;
    int a;
    int b;
    bool operator==(const QubitLabel&) const = default;
};

struct GroupTuple {
    int a;
    int b;
    bool operator==(const GroupTuple&) const = default;
};

enum class ProductKind { hgp, balanced, bivariate };

// Bivariate polynomial over two commuting cyclic generators, stored as
// exponent pairs with moduli (l, m).
struct BivariatePoly {
    int l = 0;
    int m = 0;
    std::vector<GroupTuple> terms;
};

struct CodeBlueprint {
    ProductKind kind = ProductKind::hgp;
    int l = 0;
    int m = 0;
    CyclicCode code1;
    CyclicCode code2;
    // Balanced products quotient by the subgroup generated by x^step in
    // each factor; only step 3 is supported.
    int subgroup_step = 3;
    BivariatePoly a_poly;
    BivariatePoly b_poly;
    // The general Kuenneth basis uses the transposed generator for the
    // X rows; the weight-3 family uses g itself on both sides.
    bool x_basis_uses_transpose = true;
    // Translation range of the logical basis. Defaults to the codes' alpha;
    // balanced family builders pin it to 2, because a representative can
    // have extra factors dividing x^l + 1 (raising its own alpha) that the
    // quotient removes again.
    int basis_alpha1 = 0;
    int basis_alpha2 = 0;

    int alpha1() const { return basis_alpha1 > 0 ? basis_alpha1 : code1.alpha; }
    int alpha2() const { return basis_alpha2 > 0 ? basis_alpha2 : code2.alpha; }
};

struct CssCode {
    int n = 0;
    BinMatrix hx;
    BinMatrix hz;
    std::vector<QubitLabel> qubit_labels;
    std::vector<GroupTuple> x_check_labels;
    std::vector<GroupTuple> z_check_labels;
};

struct ProductCode {
    CodeBlueprint blueprint;
    CssCode code;
    int k = 0;
};

// Canonical representative of the balanced-product class of x^a (x) x^b:
// multiples of x^step move from the first factor to the second.
GroupTuple bp_canonicalize(int l, int a, int b);

// Index helpers shared by the builders, the logical-basis construction
// and the twist compiler. Qubit order is [vertical block | horizontal block].
struct CodeIndex {
    ProductKind kind;
    int l, m;

    explicit CodeIndex(const CodeBlueprint& bp) : kind(bp.kind), l(bp.l), m(bp.m) {}

    int block_size() const { return kind == ProductKind::balanced ? 3 * l : l * m; }
    int num_qubits() const { return 2 * block_size(); }
    int num_checks_per_side() const { return block_size(); }

    // Position (a, b): for hgp/bivariate a in [0, l), b in [0, m);
    // for balanced the pair is canonicalized first.
    int tuple_index(int a, int b) const;
    int qubit_index(EdgeKind kind_, int a, int b) const;
    GroupTuple tuple_of(int index) const;
    QubitLabel qubit_label_of(int q) const;

    GroupTuple mul(GroupTuple u, GroupTuple v) const;
    GroupTuple inv(GroupTuple u) const;
    GroupTuple sub(GroupTuple u, GroupTuple v) const { return mul(u, inv(v)); }
};

// X-check row weights etc. are used widely; keep a small helper here.
bool commutation_holds(const CssCode& code);

}  // namespace cyclotwist
