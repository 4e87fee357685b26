#pragma once

#include <functional>
#include <utility>

#include "cyclotwist/logicals.hpp"

namespace cyclotwist {

enum class TermOrder { ascending, descending };

// Declarative description of one generalised Dehn twist. A vertical twist
// applies CNOT rounds between a column of vertical edges and a column of
// horizontal edges; a horizontal twist does the same along rows.
struct TwistSpec {
    Orient orientation = Orient::v;
    int from_index = 0;  // column (row) of the propagating-Pauli side
    int to_index = 0;    // column (row) of the implemented logical
    int target_t = 1;    // translation index of the implemented logical, 1-based
    QubitLabel anchor{EdgeKind::vertical, 0, 0};
    LogicalLabel target_label;
    Pauli implements = Pauli::X;
    TermOrder order = TermOrder::ascending;
};

struct CnotRound {
    std::vector<std::pair<int, int>> pairs;  // (control, target) qubit ids
};

struct CompiledTwist {
    std::vector<CnotRound> rounds;
    std::vector<int> offsets;
    int anchor_overlap_count = 0;
    bool trivial = false;  // even overlap: identity logical action expected
};

// The source-logical overlap is computed from the blueprint's analytic
// pattern through the anchor, so even-q balanced blueprints (where the
// analytic basis collapses) still compile and report their parity.
CompiledTwist compile_schedule(const CodeBlueprint& blueprint, const TwistSpec& spec);

// Expected local operator change after r rounds: the affected check rows
// gain `factor_poly` (in the twisted factor) tensored with a single
// cross-factor translation, on the stated edge kind.
struct PredictedCoboundary {
    CyclicPoly factor_poly;
    int cross_shift = 0;
    EdgeKind added_block = EdgeKind::horizontal;
};
PredictedCoboundary predicted_coboundary(const CodeBlueprint& blueprint, const TwistSpec& spec,
                                         int r);

// Conjugates the check matrices and Pauli frames by one round of CNOTs:
// X rows copy control into target, Z rows copy target into control.
void apply_round(CssCode& code, const CnotRound& round, BinMatrix* x_frames = nullptr,
                 BinMatrix* z_frames = nullptr);

struct RoundMetrics {
    std::size_t max_weight_hx = 0;
    std::size_t max_weight_hz = 0;
    bool commutes = false;
};

// Incremental simulator tracking only the check rows a twist can touch.
class TwistSimulator {
  public:
    TwistSimulator(const CssCode& code, const LogicalBasis& basis,
                   const std::vector<CnotRound>& rounds);

    void apply(const CnotRound& round);
    RoundMetrics metrics() const;
    bool closed() const;
    CssCode snapshot_code() const;
    const BinMatrix& x_frames() const { return xf_; }
    const BinMatrix& z_frames() const { return zf_; }

  private:
    struct TrackedRow {
        std::size_t index;
        BitVec bits;
        std::vector<int> support;  // sorted
        void flip(int pos);
    };
    static bool sparse_dot(const TrackedRow& a, const TrackedRow& b);

    const CssCode* base_;
    std::vector<TrackedRow> ax_, az_;
    std::size_t rest_max_wx_ = 0, rest_max_wz_ = 0;
    BinMatrix xf_, zf_;
};

struct TwistReport {
    TwistSpec spec;
    int rounds = 0;
    bool closed = false;
    bool trivial = false;
    int anchor_overlap_count = 0;
    std::vector<RoundMetrics> per_round;
    std::size_t max_intermediate_weight = 0;
    BinMatrix glx, glz;  // row i = coordinates of the image of basis row i
};

struct RunTwistOptions {
    bool compute_action = true;
    // Called after every round with the 1-based round index.
    std::function<void(int, const TwistSimulator&)> on_round;
};

TwistReport run_twist(const ProductCode& product, const LogicalBasis& basis,
                      const TwistSpec& spec, const RunTwistOptions& opts = {});

// The fixed subset of 16 twists between the fully-supporting columns and
// rows (indices 0 and 1), for blueprints with alpha1 = alpha2 = 2. On
// balanced blueprints this requires odd q.
std::vector<TwistSpec> twist_catalog_16(const CodeBlueprint& blueprint);

// Single parallel CNOT round from every vertical edge to the equally
// labelled horizontal edge, followed by a search for a shear relabeling
// that recovers the original code.
struct InstantTwistReport {
    bool success = false;
    // Relabeling (a, b) -> (a + shear * b + offset, b) per label class.
    int shear = 0;
    int offset_xcheck = 0, offset_vertical = 0, offset_horizontal = 0, offset_zcheck = 0;
};
InstantTwistReport instantaneous_twist(const ProductCode& product);
InstantTwistReport toric_instantaneous(int l, int m);

}  // namespace cyclotwist
