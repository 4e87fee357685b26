#include "cyclotwist/products.hpp"

#include <algorithm>
#include <random>

#include "cyclotwist/errors.hpp"

namespace cyclotwist {

namespace {

int mod(int a, int n) {
    int r = a % n;
    return r < 0 ? r + n : r;
}

// Uniform core: H_X = [R(P_v) | R(P_h)], H_Z = [R(P_h^T) | R(P_v^T)] over
// the label group of the blueprint, where P_v / P_h are the vertical- and
// horizontal-acting polynomial supports as group tuples.
CssCode assemble(const CodeIndex& ix, const std::vector<GroupTuple>& pv,
                 const std::vector<GroupTuple>& ph) {
    CssCode code;
    int bs = ix.block_size();
    code.n = 2 * bs;
    code.hx = BinMatrix(bs, code.n);
    code.hz = BinMatrix(bs, code.n);
    for (int u = 0; u < bs; ++u) {
        GroupTuple t = ix.tuple_of(u);
        for (const GroupTuple& p : pv) {
            GroupTuple v = ix.sub(t, p);
            code.hx.set(u, ix.tuple_index(v.a, v.b), true);
        }
        for (const GroupTuple& p : ph) {
            GroupTuple v = ix.sub(t, p);
            code.hx.set(u, bs + ix.tuple_index(v.a, v.b), true);
        }
        for (const GroupTuple& p : ph) {
            GroupTuple v = ix.mul(t, p);
            code.hz.set(u, ix.tuple_index(v.a, v.b), true);
        }
        for (const GroupTuple& p : pv) {
            GroupTuple v = ix.mul(t, p);
            code.hz.set(u, bs + ix.tuple_index(v.a, v.b), true);
        }
        code.x_check_labels.push_back(t);
        code.z_check_labels.push_back(t);
    }
    for (int q = 0; q < code.n; ++q) code.qubit_labels.push_back(ix.qubit_label_of(q));
    return code;
}

constexpr int kExactCheckLimit = 20000;

void check_commutation(const CssCode& code) {
    if (code.n <= kExactCheckLimit) {
        if (!commutation_holds(code))
            throw ScheduleInvalid("constructed code fails H_X H_Z^T = 0");
        return;
    }
    // Spot check on large codes; the construction guarantees the identity.
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<std::size_t> dx(0, code.hx.rows() - 1);
    std::uniform_int_distribution<std::size_t> dz(0, code.hz.rows() - 1);
    for (int i = 0; i < 2000; ++i)
        if (code.hx.row(dx(rng)).dot(code.hz.row(dz(rng))))
            throw ScheduleInvalid("constructed code fails H_X H_Z^T = 0");
}

int logical_count(const CssCode& code, int fallback) {
    if (code.n > kExactCheckLimit) return fallback;
    return code.n - static_cast<int>(gf2_rank(code.hx)) -
           static_cast<int>(gf2_rank(code.hz));
}

}  // namespace

ProductCode hgp_build(const CyclicCode& c1, const CyclicCode& c2) {
    CodeBlueprint bp;
    bp.kind = ProductKind::hgp;
    bp.l = c1.n;
    bp.m = c2.n;
    bp.code1 = c1;
    bp.code2 = c2;
    CodeIndex ix(bp);

    std::vector<GroupTuple> pv, ph;
    for (int e : c1.p.exponents()) pv.push_back({e, 0});
    for (int e : c2.p.exponents()) ph.push_back({0, e});

    ProductCode out;
    out.blueprint = bp;
    out.code = assemble(ix, pv, ph);
    check_commutation(out.code);
    out.k = logical_count(out.code, 2 * c1.alpha * c2.alpha);
    return out;
}

ProductCode hgp_family(int q) {
    CyclicCode c = family_code(q);
    ProductCode out = hgp_build(c, c);
    out.blueprint.x_basis_uses_transpose = false;
    return out;
}

ProductCode toric_build(int l, int m) {
    auto rep = [](int n) {
        std::vector<int> all;
        for (int i = 0; i < n; ++i) all.push_back(i);
        return make_cyclic(n, CyclicPoly(n, {0, 1}), CyclicPoly(n, all));
    };
    return hgp_build(rep(l), rep(m));
}

std::vector<GroupTuple> bp_class_basis(int l) {
    if (l % 3 != 0 || l <= 0) throw DimensionError("balanced product needs l divisible by 3");
    std::vector<GroupTuple> out;
    out.reserve(3 * l);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < l; ++j) out.push_back({i, j});
    return out;
}

std::pair<BinMatrix, BinMatrix> bp_generator_matrices(int l) {
    auto basis = bp_class_basis(l);
    CodeBlueprint bp;
    bp.kind = ProductKind::balanced;
    bp.l = l;
    bp.m = l;
    CodeIndex ix(bp);
    BinMatrix second(3 * l, 3 * l), first(3 * l, 3 * l);
    for (int v = 0; v < 3 * l; ++v) {
        GroupTuple t = basis[v];
        GroupTuple ts = ix.mul(t, {0, 1});
        GroupTuple tf = ix.mul(t, {1, 0});
        second.set(ix.tuple_index(ts.a, ts.b), v, true);
        first.set(ix.tuple_index(tf.a, tf.b), v, true);
    }
    return {second, first};
}

ProductCode bp_build(const CyclicPoly& p1, const CyclicPoly& p2, int l) {
    if (l % 3 != 0 || l <= 0) throw DimensionError("balanced product needs l divisible by 3");
    int q = l / 3;
    auto [pfam, gfam] = family_polys(q);
    (void)pfam;
    CyclicCode c1 = make_cyclic(l, p1, gfam);
    CyclicCode c2 = make_cyclic(l, p2, gfam);

    CodeBlueprint bp;
    bp.kind = ProductKind::balanced;
    bp.l = l;
    bp.m = l;
    bp.code1 = c1;
    bp.code2 = c2;
    bp.x_basis_uses_transpose = false;
    bp.basis_alpha1 = 2;
    bp.basis_alpha2 = 2;
    CodeIndex ix(bp);

    std::vector<GroupTuple> pv, ph;
    for (int e : p1.exponents()) pv.push_back(bp_canonicalize(l, e, 0));
    for (int e : p2.exponents()) ph.push_back({0, e});

    ProductCode out;
    out.blueprint = bp;
    out.code = assemble(ix, pv, ph);
    check_commutation(out.code);
    out.k = logical_count(out.code, 2 * bp.alpha1() * bp.alpha2());
    return out;
}

ProductCode bb_build(const BivariatePoly& a, const BivariatePoly& b, int j, int k) {
    if (j <= 0 || k <= 0) throw DimensionError("bivariate moduli must be positive");
    CodeBlueprint bp;
    bp.kind = ProductKind::bivariate;
    bp.l = j;
    bp.m = k;
    bp.a_poly = a;
    bp.b_poly = b;
    CodeIndex ix(bp);

    std::vector<GroupTuple> pv, ph;
    for (const GroupTuple& t : a.terms) pv.push_back({mod(t.a, j), mod(t.b, k)});
    for (const GroupTuple& t : b.terms) ph.push_back({mod(t.a, j), mod(t.b, k)});

    ProductCode out;
    out.blueprint = bp;
    out.code = assemble(ix, pv, ph);
    check_commutation(out.code);
    out.k = logical_count(out.code, 0);
    return out;
}

namespace {

GroupTuple class_pow(const CodeIndex& ix, GroupTuple g, int e) {
    GroupTuple acc{0, 0};
    for (int i = 0; i < e; ++i) acc = ix.mul(acc, g);
    return acc;
}

// Set arithmetic over group tuples.
std::vector<GroupTuple> sorted_tuples(std::vector<GroupTuple> v) {
    std::sort(v.begin(), v.end(), [](const GroupTuple& x, const GroupTuple& y) {
        return std::pair(x.a, x.b) < std::pair(y.a, y.b);
    });
    return v;
}

std::vector<GroupTuple> shift_set(const CodeIndex& ix, const std::vector<GroupTuple>& s,
                                  GroupTuple d) {
    std::vector<GroupTuple> out;
    out.reserve(s.size());
    for (const GroupTuple& t : s) out.push_back(ix.mul(t, d));
    return sorted_tuples(out);
}

// Finds d with image * d == target, if any.
std::optional<GroupTuple> match_shift(const CodeIndex& ix, const std::vector<GroupTuple>& image,
                                      const std::vector<GroupTuple>& target) {
    if (image.size() != target.size() || image.empty()) return std::nullopt;
    auto tgt = sorted_tuples(target);
    for (const GroupTuple& t : tgt) {
        GroupTuple d = ix.sub(t, image.front());
        if (shift_set(ix, image, d) == tgt) return d;
    }
    return std::nullopt;
}

}  // namespace

std::pair<BivariatePoly, BivariatePoly> bb_from_bp_polys(const CyclicPoly& p1,
                                                         const CyclicPoly& p2, int q) {
    if (q % 3 == 0)
        throw IsomorphismUnavailable("no simple map when q is divisible by 3");
    int l = 3 * q;
    // Solve f(alpha^a beta^b) = e (x) x over the class group.
    int a_star = -1, b_star = -1;
    for (int a = 0; a < l && a_star < 0; ++a)
        for (int b = 0; b < 3; ++b) {
            GroupTuple img = bp_canonicalize(l, a, q * b);
            if (img.a == 0 && img.b == 1) {
                a_star = a;
                b_star = b;
                break;
            }
        }
    if (a_star < 0) throw IsomorphismUnavailable("no generator preimage found");

    BivariatePoly A{l, 3, {}};
    for (int e : p1.exponents()) A.terms.push_back({mod(e, l), 0});
    BivariatePoly B{l, 3, {}};
    for (int e : p2.exponents()) B.terms.push_back({mod(a_star * e, l), mod(b_star * e, 3)});
    return {A, B};
}

BbBpIsomorphism bb_bp_isomorphism(const ProductCode& bb, const ProductCode& bp, int q) {
    if (q % 3 == 0)
        throw IsomorphismUnavailable("no simple map when q is divisible by 3");
    if (bb.blueprint.kind != ProductKind::bivariate ||
        bp.blueprint.kind != ProductKind::balanced)
        throw DimensionError("expected a bivariate and a balanced code");
    int l = 3 * q;
    if (bb.blueprint.l != l || bb.blueprint.m != 3 || bp.blueprint.l != l)
        throw DimensionError("parameter q does not match the given codes");

    CodeIndex ix(bp.blueprint);
    int bs = ix.block_size();

    // Map bivariate group labels into the class group: alpha -> x (x) e,
    // beta -> e (x) x^q.
    auto phi = [&](int a, int b) { return bp_canonicalize(l, a, q * b); };

    std::vector<GroupTuple> sa, sb;
    for (const GroupTuple& t : bb.blueprint.a_poly.terms) sa.push_back(phi(t.a, t.b));
    for (const GroupTuple& t : bb.blueprint.b_poly.terms) sb.push_back(phi(t.a, t.b));

    std::vector<GroupTuple> tv, th;
    for (int e : bp.blueprint.code1.p.exponents()) tv.push_back(bp_canonicalize(l, e, 0));
    for (int e : bp.blueprint.code2.p.exponents()) th.push_back({0, mod(e, l)});

    // Search for an algebra automorphism, given by generator images, under
    // which the A support becomes the horizontal polynomial and the B
    // support the vertical one, each up to a monomial shift.
    for (int gu_i = 0; gu_i < bs; ++gu_i) {
        GroupTuple gu = ix.tuple_of(gu_i);
        for (int gw_i = 0; gw_i < bs; ++gw_i) {
            GroupTuple gw = ix.tuple_of(gw_i);
            if (!(class_pow(ix, gu, 3) == class_pow(ix, gw, 3))) continue;
            // theta(x^i (x) x^j) = gu^i gw^j; check bijectivity.
            std::vector<GroupTuple> gw_pow(l), gu_pow(3);
            for (int j = 0; j < l; ++j) gw_pow[j] = class_pow(ix, gw, j);
            for (int i = 0; i < 3; ++i) gu_pow[i] = class_pow(ix, gu, i);
            std::vector<bool> seen(bs, false);
            bool bij = true;
            for (int i = 0; i < 3 && bij; ++i)
                for (int j = 0; j < l; ++j) {
                    GroupTuple im = ix.mul(gu_pow[i], gw_pow[j]);
                    int idx = ix.tuple_index(im.a, im.b);
                    if (seen[idx]) {
                        bij = false;
                        break;
                    }
                    seen[idx] = true;
                }
            if (!bij) continue;
            auto theta = [&](GroupTuple t) { return ix.mul(gu_pow[t.a], gw_pow[t.b]); };
            std::vector<GroupTuple> ta, tb;
            for (const GroupTuple& t : sa) ta.push_back(theta(t));
            for (const GroupTuple& t : sb) tb.push_back(theta(t));

            // Two block assignments are possible: A onto the horizontal
            // polynomial with B vertical (the swapped form), or A onto the
            // vertical one directly. In either case the Z-check shift is
            // the product of the two qubit-block shifts.
            for (bool a_to_horizontal : {true, false}) {
                auto d_a = match_shift(ix, ta, a_to_horizontal ? th : tv);
                if (!d_a) continue;
                auto d_b = match_shift(ix, tb, a_to_horizontal ? tv : th);
                if (!d_b) continue;
                GroupTuple left_shift = ix.inv(*d_a);   // block receiving A
                GroupTuple right_shift = ix.inv(*d_b);  // block receiving B
                GroupTuple cz = ix.mul(left_shift, right_shift);
                int left_base = a_to_horizontal ? bs : 0;
                int right_base = a_to_horizontal ? 0 : bs;
                BbBpIsomorphism iso;
                iso.q = q;
                iso.theta_u = gu;
                iso.theta_w = gw;
                iso.qubit_perm.resize(2 * bs);
                iso.x_check_perm.resize(bs);
                iso.z_check_perm.resize(bs);
                for (int a = 0; a < l; ++a)
                    for (int b = 0; b < 3; ++b) {
                        int bb_idx = a * 3 + b;
                        GroupTuple base = theta(phi(a, b));
                        GroupTuple lq = ix.mul(base, left_shift);
                        GroupTuple rq = ix.mul(base, right_shift);
                        GroupTuple zc = ix.mul(base, cz);
                        iso.qubit_perm[bb_idx] = left_base + ix.tuple_index(lq.a, lq.b);
                        iso.qubit_perm[bs + bb_idx] =
                            right_base + ix.tuple_index(rq.a, rq.b);
                        iso.x_check_perm[bb_idx] = ix.tuple_index(base.a, base.b);
                        iso.z_check_perm[bb_idx] = ix.tuple_index(zc.a, zc.b);
                    }
                CssCode mapped = apply_isomorphism(bb.code, iso);
                if (mapped.hx == bp.code.hx && mapped.hz == bp.code.hz) return iso;
            }
        }
    }
    throw IsomorphismUnavailable("no automorphism matches the two codes");
}

CssCode apply_isomorphism(const CssCode& bb, const BbBpIsomorphism& iso) {
    CssCode out;
    out.n = bb.n;
    out.hx = BinMatrix(bb.hx.rows(), bb.n);
    out.hz = BinMatrix(bb.hz.rows(), bb.n);
    out.qubit_labels.resize(bb.n);
    out.x_check_labels.resize(bb.hx.rows());
    out.z_check_labels.resize(bb.hz.rows());
    for (std::size_t r = 0; r < bb.hx.rows(); ++r)
        for (std::size_t c : bb.hx.row(r).set_bits())
            out.hx.set(iso.x_check_perm[r], iso.qubit_perm[c], true);
    for (std::size_t r = 0; r < bb.hz.rows(); ++r)
        for (std::size_t c : bb.hz.row(r).set_bits())
            out.hz.set(iso.z_check_perm[r], iso.qubit_perm[c], true);
    return out;
}

ProductCode bb_to_bp_image(const ProductCode& bb) {
    if (bb.blueprint.kind != ProductKind::bivariate)
        throw DimensionError("expected a bivariate code");
    int l = bb.blueprint.l;
    int three = bb.blueprint.m;
    if (three != 3 || l % 3 != 0)
        throw IsomorphismUnavailable("image map needs moduli (3q, 3)");
    int q = l / 3;
    if (q % 3 == 0) throw IsomorphismUnavailable("no simple map when q is divisible by 3");

    // f(alpha) = x (x) e, f(beta) = e (x) x^q. One polynomial must land on
    // vertical-type classes (second coordinate divisible by 3) and the
    // other on horizontal ones; either assignment of A and B is accepted.
    auto map_terms = [&](const BivariatePoly& poly,
                         bool want_vertical) -> std::optional<std::vector<int>> {
        std::vector<int> exps;
        for (const GroupTuple& t : poly.terms) {
            GroupTuple cls = bp_canonicalize(l, t.a, q * t.b);
            if (want_vertical) {
                if (cls.b % 3 != 0) return std::nullopt;
                exps.push_back(cls.a + cls.b);
            } else {
                if (cls.a != 0) return std::nullopt;
                exps.push_back(cls.b);
            }
        }
        return exps;
    };
    if (auto pv = map_terms(bb.blueprint.b_poly, true)) {
        auto ph = map_terms(bb.blueprint.a_poly, false);
        if (ph) return bp_build(CyclicPoly(l, *pv), CyclicPoly(l, *ph), l);
    }
    if (auto pv = map_terms(bb.blueprint.a_poly, true)) {
        auto ph = map_terms(bb.blueprint.b_poly, false);
        if (ph) return bp_build(CyclicPoly(l, *pv), CyclicPoly(l, *ph), l);
    }
    throw IsomorphismUnavailable("polynomial images do not split into vertical and horizontal");
}

ProductCode bb90_build() {
    // A = a^9 + b + b^2, B = 1 + a^2 + a^7 on (15, 3).
    BivariatePoly A{15, 3, {{9, 0}, {0, 1}, {0, 2}}};
    BivariatePoly B{15, 3, {{0, 0}, {2, 0}, {7, 0}}};
    return bb_build(A, B, 15, 3);
}

ProductCode bp90_build() {
    CyclicPoly p1(15, {0, 1, 5});
    CyclicPoly p2(15, {0, 2, 7});
    return bp_build(p1, p2, 15);
}

}  // namespace cyclotwist
