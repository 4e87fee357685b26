#include "cyclotwist/twist.hpp"

#include <algorithm>

#include "cyclotwist/errors.hpp"
#include "cyclotwist/products.hpp"

namespace cyclotwist {

namespace {

int mod(int a, int n) {
    int r = a % n;
    return r < 0 ? r + n : r;
}

struct TwistGeometry {
    CodeIndex ix;
    int factor_len;        // length of the twisted factor
    int cover_len;         // covering positions per column/row
    CyclicPoly generator;  // polynomial whose support orders the rounds
    CyclicPoly check;      // check polynomial of the twisted factor
    EdgeKind control_kind;
    EdgeKind target_kind;

    explicit TwistGeometry(const CodeBlueprint& bp, const TwistSpec& spec) : ix(bp) {
        bool vertical = spec.orientation == Orient::v;
        const CyclicCode& c = vertical ? bp.code1 : bp.code2;
        factor_len = vertical ? bp.l : bp.m;
        cover_len = bp.kind == ProductKind::balanced ? bp.l : factor_len;
        if (spec.implements == Pauli::X)
            generator = bp.x_basis_uses_transpose ? poly_transpose(c.g) : c.g;
        else
            generator = c.g;
        check = c.p;
        // X twists propagate Pauli X from the `from` side onto the target
        // logical's edge kind; Z twists reverse control and target.
        if (vertical) {
            control_kind = EdgeKind::vertical;
            target_kind = EdgeKind::horizontal;
        } else {
            control_kind = EdgeKind::horizontal;
            target_kind = EdgeKind::vertical;
        }
    }

    int control_qubit(const TwistSpec& spec, int h, int offset) const {
        bool vertical = spec.orientation == Orient::v;
        if (spec.implements == Pauli::X) {
            return vertical ? ix.qubit_index(EdgeKind::vertical, h, spec.from_index)
                            : ix.qubit_index(EdgeKind::horizontal, spec.from_index, h);
        }
        return vertical ? ix.qubit_index(EdgeKind::vertical, h + offset, spec.to_index)
                        : ix.qubit_index(EdgeKind::horizontal, spec.to_index, h + offset);
    }

    int target_qubit(const TwistSpec& spec, int h, int offset) const {
        bool vertical = spec.orientation == Orient::v;
        if (spec.implements == Pauli::X) {
            return vertical ? ix.qubit_index(EdgeKind::horizontal, h + offset, spec.to_index)
                            : ix.qubit_index(EdgeKind::vertical, spec.to_index, h + offset);
        }
        return vertical ? ix.qubit_index(EdgeKind::horizontal, h, spec.from_index)
                        : ix.qubit_index(EdgeKind::vertical, spec.from_index, h);
    }
};

// Position of the anchor along the twisted factor, as a covering index.
int anchor_position(const TwistGeometry& geo, const CodeBlueprint& bp, const TwistSpec& spec) {
    bool vertical = spec.orientation == Orient::v;
    int along = vertical ? spec.anchor.a : spec.anchor.b;
    int across = vertical ? spec.anchor.b : spec.anchor.a;
    if (bp.kind != ProductKind::balanced) {
        if (mod(across, vertical ? bp.m : bp.l) != mod(spec.from_index, vertical ? bp.m : bp.l))
            throw ScheduleInvalid("anchor does not lie in the from column/row");
        return mod(along, geo.factor_len);
    }
    // Balanced: recover the covering position whose class is the anchor.
    for (int h = 0; h < geo.cover_len; ++h) {
        GroupTuple cls = vertical ? bp_canonicalize(bp.l, h, spec.from_index)
                                  : bp_canonicalize(bp.l, spec.from_index, h);
        if (cls.a == spec.anchor.a && cls.b == spec.anchor.b) return h;
    }
    throw ScheduleInvalid("anchor does not lie in the from column/row");
}

}  // namespace

CompiledTwist compile_schedule(const CodeBlueprint& blueprint, const TwistSpec& spec) {
    if (blueprint.kind == ProductKind::bivariate)
        throw ScheduleInvalid("twists operate on hypergraph or balanced products");
    TwistGeometry geo(blueprint, spec);
    EdgeKind expected_anchor =
        spec.implements == Pauli::X ? geo.control_kind : geo.target_kind;
    if (spec.anchor.kind != expected_anchor)
        throw ScheduleInvalid("anchor edge kind does not match the twist");

    // The implemented logical must live in the `to` column/row.
    bool vertical_spec = spec.orientation == Orient::v;
    const LogicalLabel& target = spec.target_label;
    bool target_ok = target.pauli == spec.implements &&
                     ((vertical_spec && target.orient == Orient::v &&
                       target.i == spec.target_t && target.j == spec.to_index + 1) ||
                      (!vertical_spec && target.orient == Orient::h &&
                       target.i == spec.to_index + 1 && target.j == spec.target_t));
    if (!target_ok)
        throw ScheduleInvalid("target logical does not lie in the to column/row");

    int a_pos = anchor_position(geo, blueprint, spec);
    int shift = mod(spec.target_t - 1 - a_pos, geo.factor_len);
    CyclicPoly shifted = geo.generator.shifted(shift);
    std::vector<int> offsets = shifted.exponents();
    if (spec.order == TermOrder::descending) std::reverse(offsets.begin(), offsets.end());

    CompiledTwist out;
    out.offsets = offsets;
    for (int o : offsets) {
        CnotRound round;
        round.pairs.reserve(geo.cover_len);
        for (int h = 0; h < geo.cover_len; ++h)
            round.pairs.emplace_back(geo.control_qubit(spec, h, o), geo.target_qubit(spec, h, o));
        // Controls and targets live on different edge kinds, so the round
        // is disjoint as long as the covering positions stay distinct.
        std::vector<int> cs, ts;
        for (auto [c, t] : round.pairs) {
            cs.push_back(c);
            ts.push_back(t);
        }
        std::sort(cs.begin(), cs.end());
        std::sort(ts.begin(), ts.end());
        if (std::adjacent_find(cs.begin(), cs.end()) != cs.end() ||
            std::adjacent_find(ts.begin(), ts.end()) != ts.end())
            throw ScheduleInvalid("round has repeated controls or targets");
        out.rounds.push_back(std::move(round));
    }

    // Overlap of the source logical through the anchor with the control
    // (X) or target (Z) edge set of the twist. The source row is the
    // analytic pattern through the anchor: a translated h-type (vertical
    // twists) or v-type (horizontal twists) logical of the propagating
    // Pauli type.
    bool vertical = spec.orientation == Orient::v;
    const CyclicCode& cross = vertical ? blueprint.code2 : blueprint.code1;
    CyclicPoly cross_gen = cross.g;
    if (spec.implements == Pauli::X && blueprint.x_basis_uses_transpose)
        cross_gen = poly_transpose(cross_gen);
    int cross_pos = spec.from_index;
    int cross_alpha = vertical ? blueprint.alpha2() : blueprint.alpha1();
    int j_star = -1;
    for (int j = 1; j <= cross_alpha; ++j)
        if (cross_gen.shifted(j - 1).contains(cross_pos)) {
            j_star = j;
            break;
        }
    if (j_star < 0) throw ScheduleInvalid("anchor does not lie on a source logical");
    BitVec source_row =
        vertical
            ? kunneth_pattern_row(geo.ix, spec.anchor.kind,
                                  CyclicPoly::monomial(blueprint.l, a_pos),
                                  cross_gen.shifted(j_star - 1))
            : kunneth_pattern_row(geo.ix, spec.anchor.kind, cross_gen.shifted(j_star - 1),
                                  CyclicPoly::monomial(blueprint.m, a_pos));

    BitVec side_mask(geo.ix.num_qubits());
    for (int h = 0; h < geo.cover_len; ++h) {
        int q = spec.implements == Pauli::X ? geo.control_qubit(spec, h, 0)
                                            : geo.target_qubit(spec, h, 0);
        side_mask.set(q, true);
    }
    int overlap = 0;
    for (std::size_t q : source_row.set_bits())
        if (side_mask.get(q)) ++overlap;
    out.anchor_overlap_count = overlap;
    out.trivial = overlap % 2 == 0;
    return out;
}

PredictedCoboundary predicted_coboundary(const CodeBlueprint& blueprint, const TwistSpec& spec,
                                         int r) {
    TwistGeometry geo(blueprint, spec);
    // Anchor position 0 corresponds to the catalog convention; the general
    // shift is fixed by the spec fields alone.
    int a_pos = spec.orientation == Orient::v ? spec.anchor.a : spec.anchor.b;
    if (blueprint.kind == ProductKind::balanced) {
        TwistSpec probe = spec;
        a_pos = anchor_position(geo, blueprint, probe);
    }
    int shift = mod(spec.target_t - 1 - a_pos, geo.factor_len);
    std::vector<int> offsets = geo.generator.shifted(shift).exponents();
    if (spec.order == TermOrder::descending) std::reverse(offsets.begin(), offsets.end());
    if (r < 0 || r > static_cast<int>(offsets.size()))
        throw DimensionError("round index out of range");

    CyclicPoly partial(geo.factor_len,
                       std::vector<int>(offsets.begin(), offsets.begin() + r));
    PredictedCoboundary pred;
    if (spec.implements == Pauli::X) {
        pred.factor_poly = poly_mul(poly_transpose(geo.check), partial);
        pred.added_block = geo.target_kind;
        pred.cross_shift = mod(spec.to_index - spec.from_index,
                               spec.orientation == Orient::v ? blueprint.m : blueprint.l);
    } else {
        pred.factor_poly = poly_mul(geo.check, partial);
        pred.added_block = geo.control_kind;
        pred.cross_shift = mod(spec.to_index - spec.from_index,
                               spec.orientation == Orient::v ? blueprint.m : blueprint.l);
    }
    return pred;
}

void apply_round(CssCode& code, const CnotRound& round, BinMatrix* x_frames,
                 BinMatrix* z_frames) {
    for (auto [c, t] : round.pairs) {
        for (std::size_t r = 0; r < code.hx.rows(); ++r)
            if (code.hx.get(r, c)) code.hx.row(r).flip(t);
        for (std::size_t r = 0; r < code.hz.rows(); ++r)
            if (code.hz.get(r, t)) code.hz.row(r).flip(c);
        if (x_frames)
            for (std::size_t r = 0; r < x_frames->rows(); ++r)
                if (x_frames->get(r, c)) x_frames->row(r).flip(t);
        if (z_frames)
            for (std::size_t r = 0; r < z_frames->rows(); ++r)
                if (z_frames->get(r, t)) z_frames->row(r).flip(c);
    }
}

void TwistSimulator::TrackedRow::flip(int pos) {
    bits.flip(pos);
    auto it = std::lower_bound(support.begin(), support.end(), pos);
    if (it != support.end() && *it == pos)
        support.erase(it);
    else
        support.insert(it, pos);
}

bool TwistSimulator::sparse_dot(const TrackedRow& a, const TrackedRow& b) {
    const TrackedRow& small = a.support.size() <= b.support.size() ? a : b;
    const TrackedRow& big = a.support.size() <= b.support.size() ? b : a;
    int acc = 0;
    for (int pos : small.support) acc ^= big.bits.get(pos) ? 1 : 0;
    return acc;
}

TwistSimulator::TwistSimulator(const CssCode& code, const LogicalBasis& basis,
                               const std::vector<CnotRound>& rounds)
    : base_(&code), xf_(basis.x_rows), zf_(basis.z_rows) {
    BitVec control_mask(code.n), target_mask(code.n);
    for (const CnotRound& round : rounds)
        for (auto [c, t] : round.pairs) {
            control_mask.set(c, true);
            target_mask.set(t, true);
        }
    auto track = [&](const BinMatrix& m, const BitVec& mask, std::vector<TrackedRow>& out) {
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (!m.row(r).intersects(mask)) continue;
            TrackedRow tr;
            tr.index = r;
            tr.bits = m.row(r);
            for (std::size_t q : m.row(r).set_bits()) tr.support.push_back(static_cast<int>(q));
            out.push_back(std::move(tr));
        }
    };
    track(code.hx, control_mask, ax_);
    track(code.hz, target_mask, az_);

    auto rest_max = [&](const BinMatrix& m, const std::vector<TrackedRow>& tracked) {
        std::vector<bool> is_tracked(m.rows(), false);
        for (const TrackedRow& tr : tracked) is_tracked[tr.index] = true;
        std::size_t best = 0;
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (!is_tracked[r]) best = std::max(best, m.row(r).popcount());
        return best;
    };
    rest_max_wx_ = rest_max(code.hx, ax_);
    rest_max_wz_ = rest_max(code.hz, az_);
}

void TwistSimulator::apply(const CnotRound& round) {
    for (auto [c, t] : round.pairs) {
        for (TrackedRow& row : ax_)
            if (row.bits.get(c)) row.flip(t);
        for (TrackedRow& row : az_)
            if (row.bits.get(t)) row.flip(c);
        for (std::size_t r = 0; r < xf_.rows(); ++r)
            if (xf_.get(r, c)) xf_.row(r).flip(t);
        for (std::size_t r = 0; r < zf_.rows(); ++r)
            if (zf_.get(r, t)) zf_.row(r).flip(c);
    }
}

RoundMetrics TwistSimulator::metrics() const {
    RoundMetrics m;
    m.max_weight_hx = rest_max_wx_;
    for (const TrackedRow& row : ax_)
        m.max_weight_hx = std::max(m.max_weight_hx, row.support.size());
    m.max_weight_hz = rest_max_wz_;
    for (const TrackedRow& row : az_)
        m.max_weight_hz = std::max(m.max_weight_hz, row.support.size());
    m.commutes = true;
    // Rows outside the tracked sets are unchanged, and changed bits are
    // confined to the tracked columns, so checking tracked x tracked pairs
    // verifies the full product.
    for (const TrackedRow& rx : ax_)
        for (const TrackedRow& rz : az_)
            if (sparse_dot(rx, rz)) {
                m.commutes = false;
                return m;
            }
    return m;
}

bool TwistSimulator::closed() const {
    for (const TrackedRow& row : ax_)
        if (!(row.bits == base_->hx.row(row.index))) return false;
    for (const TrackedRow& row : az_)
        if (!(row.bits == base_->hz.row(row.index))) return false;
    return true;
}

CssCode TwistSimulator::snapshot_code() const {
    CssCode out = *base_;
    for (const TrackedRow& row : ax_) out.hx.row(row.index) = row.bits;
    for (const TrackedRow& row : az_) out.hz.row(row.index) = row.bits;
    return out;
}

TwistReport run_twist(const ProductCode& product, const LogicalBasis& basis,
                      const TwistSpec& spec, const RunTwistOptions& opts) {
    CompiledTwist compiled = compile_schedule(product.blueprint, spec);
    TwistSimulator sim(product.code, basis, compiled.rounds);

    TwistReport report;
    report.spec = spec;
    report.rounds = static_cast<int>(compiled.rounds.size());
    report.trivial = compiled.trivial;
    report.anchor_overlap_count = compiled.anchor_overlap_count;

    for (std::size_t r = 0; r < compiled.rounds.size(); ++r) {
        sim.apply(compiled.rounds[r]);
        RoundMetrics m = sim.metrics();
        if (!m.commutes) throw ScheduleInvalid("commutation broken during the twist");
        report.per_round.push_back(m);
        report.max_intermediate_weight = std::max(
            {report.max_intermediate_weight, m.max_weight_hx, m.max_weight_hz});
        if (opts.on_round) opts.on_round(static_cast<int>(r + 1), sim);
    }
    report.closed = sim.closed();
    if (!report.closed) throw ScheduleInvalid("twist did not return the original code");

    if (opts.compute_action) {
        int k = basis.k();
        report.glx = BinMatrix(k, k);
        report.glz = BinMatrix(k, k);
        for (int i = 0; i < k; ++i) {
            report.glx.row(i) =
                reduce_to_basis(product.code, basis, sim.x_frames().row(i), Pauli::X);
            report.glz.row(i) =
                reduce_to_basis(product.code, basis, sim.z_frames().row(i), Pauli::Z);
        }
        if (!gf2_inverse(report.glx) || !gf2_inverse(report.glz))
            throw ScheduleInvalid("logical action is not invertible");
        BinMatrix lhs = report.glx * basis.pairing * report.glz.transposed();
        if (!(lhs == basis.pairing))
            throw ScheduleInvalid("logical action does not preserve the pairing");
    }
    return report;
}

std::vector<TwistSpec> twist_catalog_16(const CodeBlueprint& blueprint) {
    if (blueprint.kind == ProductKind::bivariate)
        throw CatalogUnavailable("catalog applies to hypergraph or balanced products");
    if (blueprint.alpha1() != 2 || blueprint.alpha2() != 2)
        throw CatalogUnavailable("catalog requires alpha1 = alpha2 = 2");
    if (blueprint.kind == ProductKind::balanced && (blueprint.l / 3) % 2 == 0)
        throw CatalogUnavailable("balanced catalog is valid only for odd q");

    std::vector<TwistSpec> out;
    for (Orient orient : {Orient::v, Orient::h})
        for (int from = 0; from <= 1; ++from)
            for (int to = 0; to <= 1; ++to)
                for (int t = 1; t <= 2; ++t) {
                    TwistSpec spec;
                    spec.orientation = orient;
                    spec.from_index = from;
                    spec.to_index = to;
                    spec.target_t = t;
                    spec.implements = Pauli::X;
                    if (orient == Orient::v) {
                        spec.anchor = {EdgeKind::vertical, 0, from};
                        spec.target_label = {Pauli::X, Orient::v, t, to + 1};
                    } else {
                        spec.anchor = {EdgeKind::horizontal, from, 0};
                        spec.target_label = {Pauli::X, Orient::h, to + 1, t};
                    }
                    out.push_back(spec);
                }
    return out;
}

namespace {

// Shear relabeling (a, b) -> (a + shear * b + offset, b) of a tuple grid.
int shear_index(int l, int m, int a, int b, int shear, int offset) {
    return mod(a + shear * b + offset, l) * m + mod(b, m);
}

}  // namespace

InstantTwistReport instantaneous_twist(const ProductCode& product) {
    const CodeBlueprint& bp = product.blueprint;
    if (bp.kind != ProductKind::hgp)
        throw ScheduleInvalid("instantaneous twists are defined on hypergraph products");
    int l = bp.l, m = bp.m;

    CssCode twisted = product.code;
    CnotRound round;
    CodeIndex ix(bp);
    for (int a = 0; a < l; ++a)
        for (int b = 0; b < m; ++b)
            round.pairs.emplace_back(ix.qubit_index(EdgeKind::vertical, a, b),
                                     ix.qubit_index(EdgeKind::horizontal, a, b));
    apply_round(twisted, round);

    InstantTwistReport report;
    int bs = l * m;
    // Global translation freedom fixes the X-check offset to zero.
    for (int shear = 0; shear < l; ++shear)
        for (int tv = 0; tv < l; ++tv)
            for (int th = 0; th < l; ++th)
                for (int tz = 0; tz < l; ++tz) {
                    BinMatrix hx(bs, 2 * bs), hz(bs, 2 * bs);
                    auto qmap = [&](std::size_t q) {
                        int blk = q < static_cast<std::size_t>(bs) ? 0 : 1;
                        int idx = static_cast<int>(q) - blk * bs;
                        int a = idx / m, b = idx % m;
                        int off = blk == 0 ? tv : th;
                        return blk * bs + shear_index(l, m, a, b, shear, off);
                    };
                    for (int u = 0; u < bs; ++u) {
                        int a = u / m, b = u % m;
                        int ux = shear_index(l, m, a, b, shear, 0);
                        int uz = shear_index(l, m, a, b, shear, tz);
                        for (std::size_t q : twisted.hx.row(u).set_bits())
                            hx.set(ux, qmap(q), true);
                        for (std::size_t q : twisted.hz.row(u).set_bits())
                            hz.set(uz, qmap(q), true);
                    }
                    if (hx == product.code.hx && hz == product.code.hz) {
                        report.success = true;
                        report.shear = shear;
                        report.offset_xcheck = 0;
                        report.offset_vertical = tv;
                        report.offset_horizontal = th;
                        report.offset_zcheck = tz;
                        return report;
                    }
                }
    return report;
}

InstantTwistReport toric_instantaneous(int l, int m) {
    return instantaneous_twist(toric_build(l, m));
}

}  // namespace cyclotwist
