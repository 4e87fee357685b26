#include "cyclotwist/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cyclotwist/errors.hpp"
#include "cyclotwist/products.hpp"

namespace cyclotwist {

std::string to_alist(const BinMatrix& m) {
    std::size_t n = m.cols(), rows = m.rows();
    std::vector<std::vector<std::size_t>> col_lists(n), row_lists(rows);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c : m.row(r).set_bits()) {
            col_lists[c].push_back(r + 1);
            row_lists[r].push_back(c + 1);
        }
    std::size_t max_col = 0, max_row = 0;
    for (const auto& v : col_lists) max_col = std::max(max_col, v.size());
    for (const auto& v : row_lists) max_row = std::max(max_row, v.size());

    std::ostringstream os;
    os << n << " " << rows << "\n" << max_col << " " << max_row << "\n";
    for (std::size_t c = 0; c < n; ++c) os << col_lists[c].size() << (c + 1 < n ? " " : "\n");
    for (std::size_t r = 0; r < rows; ++r)
        os << row_lists[r].size() << (r + 1 < rows ? " " : "\n");
    for (const auto& v : col_lists) {
        for (std::size_t i = 0; i < max_col; ++i)
            os << (i < v.size() ? v[i] : 0) << (i + 1 < max_col ? " " : "\n");
    }
    for (const auto& v : row_lists) {
        for (std::size_t i = 0; i < max_row; ++i)
            os << (i < v.size() ? v[i] : 0) << (i + 1 < max_row ? " " : "\n");
    }
    return os.str();
}

BinMatrix from_alist(const std::string& text) {
    std::istringstream is(text);
    std::size_t n, rows, max_col, max_row;
    if (!(is >> n >> rows >> max_col >> max_row)) throw Error("malformed alist header");
    std::vector<std::size_t> col_deg(n), row_deg(rows);
    for (auto& d : col_deg) is >> d;
    for (auto& d : row_deg) is >> d;
    BinMatrix m(rows, n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t i = 0; i < max_col; ++i) {
            long v;
            if (!(is >> v)) throw Error("truncated alist column lists");
            if (v > 0) m.set(static_cast<std::size_t>(v - 1), c, true);
        }
    // Row lists are redundant; parse and cross-check.
    BinMatrix check(rows, n);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t i = 0; i < max_row; ++i) {
            long v;
            if (!(is >> v)) throw Error("truncated alist row lists");
            if (v > 0) check.set(r, static_cast<std::size_t>(v - 1), true);
        }
    if (!(check == m)) throw Error("alist column and row lists disagree");
    return m;
}

void write_alist_file(const std::string& path, const BinMatrix& m) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << to_alist(m);
}

BinMatrix read_alist_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_alist(ss.str());
}

namespace {

using nlohmann::ordered_json;

ordered_json matrix_rows(const BinMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c : m.row(r).set_bits()) row.push_back(c);
        rows.push_back(std::move(row));
    }
    return rows;
}

BinMatrix matrix_from_rows(const nlohmann::json& rows, std::size_t cols) {
    BinMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& c : rows[r]) m.set(r, c.get<std::size_t>(), true);
    return m;
}

const char* kind_name(ProductKind kind) {
    switch (kind) {
        case ProductKind::hgp: return "hgp";
        case ProductKind::balanced: return "balanced";
        case ProductKind::bivariate: return "bivariate";
    }
    return "?";
}

ProductKind kind_from_name(const std::string& name) {
    if (name == "hgp") return ProductKind::hgp;
    if (name == "balanced") return ProductKind::balanced;
    if (name == "bivariate") return ProductKind::bivariate;
    throw Error("unknown code kind: " + name);
}

ordered_json tuple_list(const std::vector<GroupTuple>& tuples) {
    ordered_json out = ordered_json::array();
    for (const GroupTuple& t : tuples) out.push_back(ordered_json::array({t.a, t.b}));
    return out;
}

std::vector<GroupTuple> tuples_from(const nlohmann::json& j) {
    std::vector<GroupTuple> out;
    for (const auto& t : j) out.push_back({t[0].get<int>(), t[1].get<int>()});
    return out;
}

}  // namespace

std::string bundle_to_json(const ProductCode& code) {
    ordered_json j;
    j["kind"] = kind_name(code.blueprint.kind);
    j["n"] = code.code.n;
    j["k"] = code.k;
    ordered_json params;
    params["l"] = code.blueprint.l;
    params["m"] = code.blueprint.m;
    if (code.blueprint.kind == ProductKind::bivariate) {
        params["a_poly"] = tuple_list(code.blueprint.a_poly.terms);
        params["b_poly"] = tuple_list(code.blueprint.b_poly.terms);
    } else {
        params["p1"] = code.blueprint.code1.p.exponents();
        params["g1"] = code.blueprint.code1.g.exponents();
        params["p2"] = code.blueprint.code2.p.exponents();
        params["g2"] = code.blueprint.code2.g.exponents();
        params["x_basis_uses_transpose"] = code.blueprint.x_basis_uses_transpose;
    }
    j["params"] = std::move(params);
    j["hx"] = matrix_rows(code.code.hx);
    j["hz"] = matrix_rows(code.code.hz);
    ordered_json labels = ordered_json::array();
    for (const QubitLabel& q : code.code.qubit_labels)
        labels.push_back(ordered_json::array(
            {q.kind == EdgeKind::vertical ? "v" : "h", q.a, q.b}));
    j["qubit_labels"] = std::move(labels);
    j["x_check_labels"] = tuple_list(code.code.x_check_labels);
    j["z_check_labels"] = tuple_list(code.code.z_check_labels);
    return j.dump(2);
}

ProductCode bundle_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    ProductKind kind = kind_from_name(j.at("kind").get<std::string>());
    const auto& params = j.at("params");
    int l = params.at("l").get<int>();
    int m = params.at("m").get<int>();

    ProductCode rebuilt;
    if (kind == ProductKind::bivariate) {
        BivariatePoly A{l, m, tuples_from(params.at("a_poly"))};
        BivariatePoly B{l, m, tuples_from(params.at("b_poly"))};
        rebuilt = bb_build(A, B, l, m);
    } else {
        CyclicPoly p1(l, params.at("p1").get<std::vector<int>>());
        CyclicPoly g1(l, params.at("g1").get<std::vector<int>>());
        CyclicPoly p2(m, params.at("p2").get<std::vector<int>>());
        CyclicPoly g2(m, params.at("g2").get<std::vector<int>>());
        if (kind == ProductKind::hgp) {
            rebuilt = hgp_build(make_cyclic(l, p1, g1), make_cyclic(m, p2, g2));
            rebuilt.blueprint.x_basis_uses_transpose =
                params.at("x_basis_uses_transpose").get<bool>();
        } else {
            rebuilt = bp_build(p1, p2, l);
        }
    }
    // The stored matrices and k are authoritative; `verify` re-derives and
    // cross-checks them, so tampering surfaces there rather than here.
    int n = j.at("n").get<int>();
    if (n != rebuilt.code.n) throw Error("bundle qubit count disagrees with the parameters");
    BinMatrix hx = matrix_from_rows(j.at("hx"), n);
    BinMatrix hz = matrix_from_rows(j.at("hz"), n);
    if (hx.rows() != rebuilt.code.hx.rows() || hz.rows() != rebuilt.code.hz.rows())
        throw Error("bundle check counts disagree with the parameters");
    rebuilt.code.hx = std::move(hx);
    rebuilt.code.hz = std::move(hz);
    rebuilt.k = j.at("k").get<int>();
    return rebuilt;
}

void write_bundle_file(const std::string& path, const ProductCode& code) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << bundle_to_json(code) << "\n";
}

ProductCode read_bundle_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return bundle_from_json(ss.str());
}

std::string basis_to_json(const LogicalBasis& basis) {
    ordered_json j;
    auto rows = [&](const BinMatrix& m, const std::vector<LogicalLabel>& labels) {
        ordered_json out = ordered_json::array();
        for (std::size_t r = 0; r < m.rows(); ++r) {
            ordered_json row;
            row["label"] = to_string(labels[r]);
            ordered_json support = ordered_json::array();
            for (std::size_t c : m.row(r).set_bits()) support.push_back(c);
            row["support"] = std::move(support);
            out.push_back(std::move(row));
        }
        return out;
    };
    j["x"] = rows(basis.x_rows, basis.x_labels);
    j["z"] = rows(basis.z_rows, basis.z_labels);
    return j.dump(2);
}

std::string twist_report_to_json(const TwistReport& report) {
    ordered_json j;
    ordered_json spec;
    spec["orientation"] = report.spec.orientation == Orient::v ? "vertical" : "horizontal";
    spec["from"] = report.spec.from_index;
    spec["to"] = report.spec.to_index;
    spec["target_t"] = report.spec.target_t;
    spec["implements"] = report.spec.implements == Pauli::X ? "X" : "Z";
    spec["anchor"] = ordered_json::array(
        {report.spec.anchor.kind == EdgeKind::vertical ? "v" : "h", report.spec.anchor.a,
         report.spec.anchor.b});
    spec["target_label"] = to_string(report.spec.target_label);
    j["spec"] = std::move(spec);
    j["rounds"] = report.rounds;
    j["closed"] = report.closed;
    j["trivial"] = report.trivial;
    j["anchor_overlap_count"] = report.anchor_overlap_count;
    j["max_intermediate_weight"] = report.max_intermediate_weight;
    ordered_json per_round = ordered_json::array();
    for (const RoundMetrics& m : report.per_round) {
        ordered_json r;
        r["max_weight_hx"] = m.max_weight_hx;
        r["max_weight_hz"] = m.max_weight_hz;
        r["commutes"] = m.commutes;
        per_round.push_back(std::move(r));
    }
    j["per_round"] = std::move(per_round);
    auto bits = [](const BinMatrix& m) {
        ordered_json rows = ordered_json::array();
        for (std::size_t r = 0; r < m.rows(); ++r) {
            std::string s;
            for (std::size_t c = 0; c < m.cols(); ++c) s += m.get(r, c) ? '1' : '0';
            rows.push_back(s);
        }
        return rows;
    };
    j["glx"] = bits(report.glx);
    j["glz"] = bits(report.glz);
    return j.dump(2);
}

namespace {

ordered_json side_json(const DistanceResult& r) {
    ordered_json j;
    j["side"] = r.side == Pauli::X ? "X" : "Z";
    j["certified_lower"] = r.certified_lower;
    if (r.best_upper)
        j["best_upper"] = *r.best_upper;
    else
        j["best_upper"] = nullptr;
    j["exact"] = r.exact;
    ordered_json witness = ordered_json::array();
    if (r.witness)
        for (std::size_t i : r.witness->set_bits()) witness.push_back(i);
    j["witness"] = std::move(witness);
    j["methods"] = r.methods;
    return j;
}

}  // namespace

std::string distance_result_to_json(const CssDistanceResult& result) {
    ordered_json j;
    j["x"] = side_json(result.x);
    j["z"] = side_json(result.z);
    j["certified_lower"] = result.certified_lower;
    if (result.best_upper)
        j["best_upper"] = *result.best_upper;
    else
        j["best_upper"] = nullptr;
    j["exact"] = result.exact;
    return j.dump(2);
}

}  // namespace cyclotwist
