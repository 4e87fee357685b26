// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances and expected values are pinned in code.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "cyclotwist/distance.hpp"
#include "cyclotwist/lgroup.hpp"
#include "cyclotwist/logicals.hpp"
#include "cyclotwist/products.hpp"
#include "cyclotwist/twist.hpp"

using namespace cyclotwist;

namespace {

int g_failures = 0;
int g_only = 0;
int g_threads = 2;

struct Check {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

void criterion(int number, const std::string& name, const std::function<void(Check&)>& body) {
    if (g_only != 0 && g_only != number) return;
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
        body(check);
    } catch (const std::exception& e) {
        check.expect(false, std::string("exception: ") + e.what());
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::printf("[%s] criterion %2d: %s (%lld ms)%s%s\n", check.ok ? "PASS" : "FAIL", number,
                name.c_str(), static_cast<long long>(ms), check.ok ? "" : " -- ",
                check.ok ? "" : check.detail.c_str());
    std::fflush(stdout);
    if (!check.ok) ++g_failures;
}

int rank_count(const CssCode& code) {
    return code.n - static_cast<int>(gf2_rank(code.hx)) - static_cast<int>(gf2_rank(code.hz));
}

bool witness_is_logical(const CssCode& code, const LogicalBasis& basis, const BitVec& w,
                        Pauli side) {
    const BinMatrix& opposite = side == Pauli::X ? code.hz : code.hx;
    if (opposite.mul_right(w).any()) return false;
    const BinMatrix& partner = side == Pauli::X ? basis.z_rows : basis.x_rows;
    for (std::size_t r = 0; r < partner.rows(); ++r)
        if (partner.row(r).dot(w)) return true;
    return false;
}

// --- criteria ---------------------------------------------------------

void c1_construction(Check& check) {
    const int expected_n[] = {18, 72, 162};
    for (int q = 1; q <= 3; ++q) {
        ProductCode code = hgp_family(q);
        check.expect(code.code.n == expected_n[q - 1],
                     "hgp q=" + std::to_string(q) + " wrong n");
        check.expect(rank_count(code.code) == 8, "hgp q=" + std::to_string(q) + " k != 8");
    }
    const int expected_d[] = {2, 4};
    for (int q = 1; q <= 2; ++q) {
        ProductCode code =
            bp_build(CyclicPoly(3 * q, {0, 1, 2}), CyclicPoly(3 * q, {0, 1, 2}), 3 * q);
        check.expect(code.code.n == 18 * q, "bp q=" + std::to_string(q) + " wrong n");
        check.expect(rank_count(code.code) == 8, "bp q=" + std::to_string(q) + " k != 8");
        LogicalBasis basis = product_basis(code.blueprint, code.code);
        CssDistanceOptions opts;
        opts.enumeration.wmax = 2 * q;
        opts.enumeration.threads = g_threads;
        CssDistanceResult d = css_distance(code.code, basis, opts);
        check.expect(d.exact && d.best_upper == expected_d[q - 1],
                     "bp q=" + std::to_string(q) + " distance != " +
                         std::to_string(expected_d[q - 1]));
    }
}

void c2_bracket_90_8_10(Check& check) {
    ProductCode code = bp90_build();
    LogicalBasis basis = kunneth_basis(code.blueprint, code.code);
    for (Pauli side : {Pauli::X, Pauli::Z}) {
        EnumOptions opts;
        opts.wmax = 6;
        opts.budget = 1'000'000'000ull;
        opts.threads = g_threads;
        DistanceResult r = bounded_weight_enum(code.code, basis, side, opts);
        check.expect(r.certified_lower == 7 && !r.best_upper,
                     std::string("weight<=6 exhaustion failed on side ") +
                         (side == Pauli::X ? "X" : "Z"));
    }
    IsdOptions isd;
    isd.iterations = 10000;
    isd.seed = 1;
    DistanceResult upper = isd_upper_bound(code.code, basis, Pauli::X, isd);
    DistanceResult upper_z = isd_upper_bound(code.code, basis, Pauli::Z, isd);
    int best = std::min(upper.best_upper.value_or(1 << 20), upper_z.best_upper.value_or(1 << 20));
    check.expect(best == 10, "ISD upper bound != 10");
    const DistanceResult& carrier = upper.best_upper.value_or(1 << 20) <= 10 ? upper : upper_z;
    check.expect(carrier.witness && carrier.witness->popcount() == 10 &&
                     witness_is_logical(code.code, basis, *carrier.witness,
                                        &carrier == &upper ? Pauli::X : Pauli::Z),
                 "weight-10 witness missing or not a logical");
}

void c3_table2_q3(Check& check) {
    ProductCode code = bp_build(CyclicPoly(9, {0, 1, 2}), CyclicPoly(9, {0, 1, 2, 3, 6}), 9);
    check.expect(code.code.n == 54 && rank_count(code.code) == 8, "not a [[54,8]] code");
    LogicalBasis basis = kunneth_basis(code.blueprint, code.code);
    CssDistanceOptions opts;
    opts.enumeration.wmax = 6;
    opts.enumeration.threads = g_threads;
    CssDistanceResult d = css_distance(code.code, basis, opts);
    check.expect(d.exact && d.best_upper == 6, "exact distance != 6");

    // independent route: full kernel-coset enumeration on one side must
    // agree with the bounded enumeration on that side
    DistanceResult coset = kernel_coset_enum(code.code, basis, Pauli::X);
    check.expect(coset.exact, "kernel-coset enumeration did not finish");
    if (d.x.best_upper)
        check.expect(coset.best_upper == d.x.best_upper, "methods disagree on side X");
    else
        check.expect(coset.best_upper && *coset.best_upper >= d.x.certified_lower,
                     "coset distance below the certified bound on side X");
}

void c4_twist_closure_weight(Check& check) {
    for (int q : {3, 4, 5, 6, 50}) {
        ProductCode code = hgp_family(q);
        LogicalBasis basis = kunneth_basis(code.blueprint, code.code);
        std::size_t max_weight = 0;
        for (const TwistSpec& spec : twist_catalog_16(code.blueprint)) {
            TwistReport rep = run_twist(code, basis, spec);
            check.expect(rep.closed, "q=" + std::to_string(q) + " twist did not close");
            check.expect(rep.rounds == 2 * q, "q=" + std::to_string(q) + " rounds != 2q");
            for (const RoundMetrics& m : rep.per_round)
                check.expect(m.commutes, "q=" + std::to_string(q) + " commutation broken");
            max_weight = std::max(max_weight, rep.max_intermediate_weight);
            if (!check.ok) return;
        }
        check.expect(max_weight == 9,
                     "q=" + std::to_string(q) + " max intermediate weight != 9");
    }
}

void c5_logical_action(Check& check) {
    ProductCode code = hgp_family(3);
    LogicalBasis basis = kunneth_basis(code.blueprint, code.code);

    auto expected = [&](Pauli pauli,
                        const std::vector<std::pair<LogicalLabel, std::vector<LogicalLabel>>>&
                            additions) {
        BinMatrix m = BinMatrix::identity(8);
        for (const auto& [src, adds] : additions) {
            int r = pauli == Pauli::X ? basis.x_index(src.orient, src.i, src.j)
                                      : basis.z_index(src.orient, src.i, src.j);
            for (const LogicalLabel& a : adds)
                m.set(r,
                      pauli == Pauli::X ? basis.x_index(a.orient, a.i, a.j)
                                        : basis.z_index(a.orient, a.i, a.j),
                      true);
        }
        return m;
    };

    // vertical twist from column (*, x) to (*, e) implementing Xv[2,1]
    TwistSpec vspec;
    vspec.orientation = Orient::v;
    vspec.from_index = 1;
    vspec.to_index = 0;
    vspec.target_t = 2;
    vspec.anchor = {EdgeKind::vertical, 0, 1};
    vspec.target_label = {Pauli::X, Orient::v, 2, 1};
    TwistReport v = run_twist(code, basis, vspec);
    check.expect(v.glx == expected(Pauli::X,
                                   {{{Pauli::X, Orient::h, 1, 1}, {{Pauli::X, Orient::v, 2, 1}}},
                                    {{Pauli::X, Orient::h, 1, 2}, {{Pauli::X, Orient::v, 2, 1}}},
                                    {{Pauli::X, Orient::h, 2, 1},
                                     {{Pauli::X, Orient::v, 2, 1}, {Pauli::X, Orient::v, 1, 1}}},
                                    {{Pauli::X, Orient::h, 2, 2},
                                     {{Pauli::X, Orient::v, 2, 1}, {Pauli::X, Orient::v, 1, 1}}}}),
                 "vertical twist X block mismatch");
    check.expect(v.glz == expected(Pauli::Z,
                                   {{{Pauli::Z, Orient::h, 1, 1}, {{Pauli::Z, Orient::v, 2, 2}}},
                                    {{Pauli::Z, Orient::h, 2, 1},
                                     {{Pauli::Z, Orient::v, 2, 2}, {Pauli::Z, Orient::v, 1, 2}}}}),
                 "vertical twist Z block mismatch");

    // horizontal twist from row (x, *) to (e, *) implementing Xh[1,2]
    TwistSpec hspec;
    hspec.orientation = Orient::h;
    hspec.from_index = 1;
    hspec.to_index = 0;
    hspec.target_t = 2;
    hspec.anchor = {EdgeKind::horizontal, 1, 0};
    hspec.target_label = {Pauli::X, Orient::h, 1, 2};
    TwistReport h = run_twist(code, basis, hspec);
    check.expect(h.glx == expected(Pauli::X,
                                   {{{Pauli::X, Orient::v, 1, 1}, {{Pauli::X, Orient::h, 1, 2}}},
                                    {{Pauli::X, Orient::v, 2, 1}, {{Pauli::X, Orient::h, 1, 2}}},
                                    {{Pauli::X, Orient::v, 1, 2},
                                     {{Pauli::X, Orient::h, 1, 2}, {Pauli::X, Orient::h, 1, 1}}},
                                    {{Pauli::X, Orient::v, 2, 2},
                                     {{Pauli::X, Orient::h, 1, 2}, {Pauli::X, Orient::h, 1, 1}}}}),
                 "horizontal twist X block mismatch");
    check.expect(h.glz == expected(Pauli::Z,
                                   {{{Pauli::Z, Orient::v, 1, 1}, {{Pauli::Z, Orient::h, 2, 2}}},
                                    {{Pauli::Z, Orient::v, 1, 2},
                                     {{Pauli::Z, Orient::h, 2, 1}, {Pauli::Z, Orient::h, 2, 2}}}}),
                 "horizontal twist Z block mismatch");
}

void c6_group_order(Check& check) {
    ProductCode code = hgp_family(3);
    LogicalBasis basis = kunneth_basis(code.blueprint, code.code);
    std::vector<GlElement> glx, glz;
    for (const TwistSpec& spec : twist_catalog_16(code.blueprint)) {
        TwistReport rep = run_twist(code, basis, spec);
        glx.push_back(GlElement::from_matrix(rep.glx));
        glz.push_back(GlElement::from_matrix(rep.glz));
    }
    BigUint order = generated_group_order(glx);
    check.expect(order == BigUint::from_decimal("5348063769211699200"),
                 "glx order = " + order.to_string());
    check.expect(order == gl_order(8), "order != |GL(8,2)|");
    // Both actions are computed; the combined block-diagonal group answers
    // whether the symplectic action generates more than the X action alone.
    BigUint pair = generated_pair_group_order(glx, glz);
    std::printf("       criterion  6 note: combined (glx, glz) group order %s\n",
                pair.to_string().c_str());
}

void c7_balanced_twists(Check& check) {
    ProductCode code = bp90_build();
    LogicalBasis basis = kunneth_basis(code.blueprint, code.code);
    std::size_t max_weight = 0;
    for (const TwistSpec& spec : twist_catalog_16(code.blueprint)) {
        bool rounds_certified = true;
        RunTwistOptions opts;
        opts.on_round = [&](int, const TwistSimulator& sim) {
            CssCode snapshot = sim.snapshot_code();
            for (Pauli side : {Pauli::X, Pauli::Z}) {
                const BinMatrix& checks = side == Pauli::X ? snapshot.hz : snapshot.hx;
                const BinMatrix& pairing =
                    side == Pauli::X ? sim.z_frames() : sim.x_frames();
                EnumOptions eopts;
                eopts.wmax = 5;
                eopts.threads = g_threads;
                DistanceResult r = bounded_weight_enum(checks, pairing, eopts, -1);
                if (r.best_upper) rounds_certified = false;
            }
        };
        TwistReport rep = run_twist(code, basis, spec, opts);
        check.expect(rep.closed, "balanced twist did not close");
        check.expect(rep.anchor_overlap_count == 5, "anchor overlap != 5");
        check.expect(rounds_certified, "an intermediate code has distance < 6");
        max_weight = std::max(max_weight, rep.max_intermediate_weight);
        if (!check.ok) return;
    }
    check.expect(max_weight == 16, "max intermediate weight != 16");
}

void c8_bivariate_equivalence(Check& check) {
    ProductCode bb = bb90_build();
    ProductCode bp = bp90_build();
    BbBpIsomorphism iso = bb_bp_isomorphism(bb, bp, 5);
    CssCode mapped = apply_isomorphism(bb.code, iso);
    check.expect(mapped.hx == bp.code.hx && mapped.hz == bp.code.hz,
                 "relabeling is not bit-exact");

    auto [A, B] = bb_from_bp_polys(CyclicPoly(15, {0, 1, 5}), CyclicPoly(15, {0, 2, 7}), 5);
    auto as_set = [](const BivariatePoly& p) {
        std::vector<std::pair<int, int>> v;
        for (const GroupTuple& t : p.terms) v.push_back({t.a, t.b});
        std::sort(v.begin(), v.end());
        return v;
    };
    check.expect(as_set(A) == std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {5, 0}},
                 "inverse map A' != 1 + a + a^5");
    check.expect(as_set(B) == std::vector<std::pair<int, int>>{{0, 0}, {12, 1}, {12, 2}},
                 "inverse map B' != 1 + a^12 b + a^12 b^2");
}

void c9_classical_distance(Check& check) {
    for (int q = 1; q <= 50; ++q)
        check.expect(classical_distance(family_code(q)) == 2 * q,
                     "classical distance != 2q at q=" + std::to_string(q));
}

void c10_instantaneous(Check& check) {
    for (int l : {3, 5, 7}) {
        InstantTwistReport rep = toric_instantaneous(l, l);
        check.expect(rep.success, "toric " + std::to_string(l) + " relabeling not found");
    }
    InstantTwistReport fam = instantaneous_twist(hgp_family(1));
    check.expect(!fam.success, "family q=1 unexpectedly admits a relabeling");
}

void c11_property_suites(Check& check) {
    // commutation after every CNOT round, pairing preservation, and
    // verified analytic rows across representative builds
    std::vector<ProductCode> codes;
    codes.push_back(hgp_family(2));
    codes.push_back(bp90_build());
    for (const ProductCode& code : codes) {
        LogicalBasis basis = kunneth_basis(code.blueprint, code.code);
        VerifyReport v = verify_logicals(code.code, basis);
        check.expect(v.all_ok(), "analytic basis failed verification");
        for (const TwistSpec& spec : twist_catalog_16(code.blueprint)) {
            TwistReport rep = run_twist(code, basis, spec);
            for (const RoundMetrics& m : rep.per_round)
                check.expect(m.commutes, "commutation broken during a catalog twist");
            BinMatrix lhs = rep.glx * basis.pairing * rep.glz.transposed();
            check.expect(lhs == basis.pairing, "pairing not preserved");
            if (!check.ok) return;
        }
        // reduce_to_basis is a left inverse on basis rows
        for (int r = 0; r < basis.k(); ++r) {
            BitVec cx = reduce_to_basis(code.code, basis, basis.x_rows.row(r), Pauli::X);
            check.expect(cx.popcount() == 1 && cx.get(r), "reduce not a left inverse (X)");
            BitVec cz = reduce_to_basis(code.code, basis, basis.z_rows.row(r), Pauli::Z);
            check.expect(cz.popcount() == 1 && cz.get(r), "reduce not a left inverse (Z)");
        }
    }
    // regular representation is a homomorphism on random pairs
    std::mt19937_64 rng(20240101);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng() % 30);
        std::vector<int> ea, eb;
        for (int e = 0; e < n; ++e) {
            if (rng() & 1) ea.push_back(e);
            if (rng() & 1) eb.push_back(e);
        }
        CyclicPoly a(n, ea), b(n, eb);
        check.expect(regular_representation(poly_mul(a, b)) ==
                         regular_representation(a) * regular_representation(b),
                     "regular representation not multiplicative");
    }
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) g_only = std::atoi(argv[++i]);
        if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc)
            g_threads = std::atoi(argv[++i]);
    }
    if (g_threads <= 0) g_threads = std::max(1u, std::thread::hardware_concurrency());

    criterion(1, "family construction parameters and small balanced distances",
              c1_construction);
    criterion(2, "[[90,8,10]] bracketing: lower >= 7 exhaustive, ISD upper = 10",
              c2_bracket_90_8_10);
    criterion(3, "weight-(3,5) q=3 balanced code has exact distance 6", c3_table2_q3);
    criterion(4, "catalog closure in 2q rounds with max intermediate weight 9 (q=3..6, 50)",
              c4_twist_closure_weight);
    criterion(5, "example vertical and horizontal twists match the stated action blocks",
              c5_logical_action);
    criterion(6, "16 twist actions generate a group of order |GL(8,2)|", c6_group_order);
    criterion(7, "balanced catalog: closure, weight 16, overlap 5, round distances >= 6",
              c7_balanced_twists);
    criterion(8, "bivariate bicycle code equals the balanced product under relabeling",
              c8_bivariate_equivalence);
    criterion(9, "classical family distance is 2q for q = 1..50", c9_classical_distance);
    criterion(10, "instantaneous twist relabeling exists for toric, fails for the family",
              c10_instantaneous);
    criterion(11, "property suites: commutation, verified bases, reduction, pairing, rep hom",
              c11_property_suites);

    if (g_failures == 0)
        std::printf("acceptance: all criteria passed\n");
    else
        std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
