#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclotwist/distance.hpp"
#include "cyclotwist/io.hpp"
#include "cyclotwist/lgroup.hpp"
#include "cyclotwist/products.hpp"
#include "cyclotwist/search.hpp"
#include "cyclotwist/twist.hpp"

using namespace cyclotwist;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitBudget = 3;
constexpr int kExitBadInput = 4;

std::filesystem::path out_dir() {
    if (const char* env = std::getenv("CYCLOTWIST_OUT_DIR")) return env;
    return ".";
}

std::filesystem::path resolve_out(const std::string& out, const std::string& fallback) {
    if (!out.empty()) return out;
    return out_dir() / fallback;
}

std::vector<int> parse_exponents(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoi(tok));
    }
    if (out.empty()) throw Error("empty exponent list");
    return out;
}

// Bivariate terms: comma-separated tokens like e, a9, b2, a12b2.
BivariatePoly parse_bivariate(const std::string& text, int j, int k) {
    BivariatePoly poly{j, k, {}};
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        int a = 0, b = 0;
        if (tok != "e") {
            std::size_t pos = 0;
            while (pos < tok.size()) {
                char gen = tok[pos++];
                std::size_t start = pos;
                while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos])))
                    ++pos;
                int exp = start == pos ? 1 : std::stoi(tok.substr(start, pos - start));
                if (gen == 'a')
                    a = exp;
                else if (gen == 'b')
                    b = exp;
                else
                    throw Error("bad bivariate token: " + tok);
            }
        }
        poly.terms.push_back({a, b});
    }
    if (poly.terms.empty()) throw Error("empty bivariate polynomial");
    return poly;
}

void print_code_summary(const ProductCode& code) {
    std::cout << "[[" << code.code.n << "," << code.k << "]]"
              << "  row weight hx=" << code.code.hx.max_row_weight()
              << " hz=" << code.code.hz.max_row_weight() << "\n";
}

TwistSpec spec_from_flags(Orient orient, int from, int to, int t, Pauli implements,
                          const std::string& order) {
    TwistSpec spec;
    spec.orientation = orient;
    spec.from_index = from;
    spec.to_index = to;
    spec.target_t = t;
    spec.implements = implements;
    spec.order = order == "desc" ? TermOrder::descending : TermOrder::ascending;
    if (orient == Orient::v) {
        spec.anchor = {implements == Pauli::X ? EdgeKind::vertical : EdgeKind::horizontal, 0,
                       from};
        spec.target_label = {implements, Orient::v, t, to + 1};
    } else {
        spec.anchor = {implements == Pauli::X ? EdgeKind::horizontal : EdgeKind::vertical, from,
                       0};
        spec.target_label = {implements, Orient::h, to + 1, t};
    }
    return spec;
}

int cmd_build(const std::string& kind, int q, const std::string& p1s, const std::string& p2s,
              int l, int m, const std::string& As, const std::string& Bs, int jj, int kk,
              const std::string& out, bool alist, bool emit_basis) {
    ProductCode code;
    if (kind == "hgp") {
        if (!p1s.empty() || !p2s.empty()) {
            if (l <= 0 || m <= 0) throw Error("generic hgp needs --l and --m");
            auto mk = [](int n, const std::vector<int>& pe) {
                CyclicPoly p(n, pe);
                PlainPoly gcd = poly_gcd(PlainPoly::from_cyclic(p), PlainPoly::x_n_plus_1(n));
                // generator: cofactor of the gcd in x^n + 1
                PlainPoly quotient = PlainPoly::x_n_plus_1(n);
                // divide x^n+1 by gcd
                std::vector<int> ge;
                PlainPoly rem = quotient;
                while (!rem.is_zero() && rem.degree() >= gcd.degree()) {
                    int shift = rem.degree() - gcd.degree();
                    ge.push_back(shift);
                    rem ^= gcd.shifted(shift);
                }
                return make_cyclic(n, p, CyclicPoly(n, ge));
            };
            code = hgp_build(mk(l, parse_exponents(p1s)), mk(m, parse_exponents(p2s)));
        } else {
            if (q <= 0) throw Error("hgp needs --q");
            code = hgp_family(q);
        }
    } else if (kind == "bp") {
        if (q <= 0) throw Error("bp needs --q");
        int n = 3 * q;
        CyclicPoly p1 = p1s.empty() ? CyclicPoly(n, {0, 1, 2}) : CyclicPoly(n, parse_exponents(p1s));
        CyclicPoly p2 = p2s.empty() ? CyclicPoly(n, {0, 1, 2}) : CyclicPoly(n, parse_exponents(p2s));
        code = bp_build(p1, p2, n);
    } else if (kind == "bb") {
        if (jj <= 0 || kk <= 0) throw Error("bb needs --j and --k");
        code = bb_build(parse_bivariate(As, jj, kk), parse_bivariate(Bs, jj, kk), jj, kk);
    } else if (kind == "toric") {
        if (l <= 0 || m <= 0) throw Error("toric needs --l and --m");
        code = toric_build(l, m);
    } else {
        throw Error("unknown build kind: " + kind);
    }

    auto path = resolve_out(out, kind + "_code.json");
    write_bundle_file(path.string(), code);
    if (alist) {
        write_alist_file(path.string() + ".hx.alist", code.code.hx);
        write_alist_file(path.string() + ".hz.alist", code.code.hz);
    }
    if (emit_basis) {
        LogicalBasis basis = product_basis(code.blueprint, code.code);
        std::ofstream f(path.string() + ".basis.json");
        if (!f) throw Error("cannot write basis file");
        f << basis_to_json(basis) << "\n";
    }
    print_code_summary(code);
    std::cout << "wrote " << path.string() << "\n";
    return kExitOk;
}

int cmd_twist(const std::string& bundle, bool catalog, const std::string& orient_s, int from,
              int to, int t, const std::string& implements_s, const std::string& order,
              int certify_rounds, int threads, const std::string& out) {
    ProductCode code = read_bundle_file(bundle);
    if (code.blueprint.kind == ProductKind::bivariate) {
        code = bb_to_bp_image(code);
        std::cout << "bivariate bundle mapped to its balanced-product image\n";
    }
    LogicalBasis basis = product_basis(code.blueprint, code.code);

    std::vector<TwistSpec> specs;
    if (catalog) {
        specs = twist_catalog_16(code.blueprint);
    } else {
        specs.push_back(spec_from_flags(orient_s == "h" ? Orient::h : Orient::v, from, to, t,
                                        implements_s == "Z" ? Pauli::Z : Pauli::X, order));
    }

    std::size_t max_weight = 0;
    bool all_closed = true;
    int min_round_lower = code.code.n + 1;
    std::optional<int> min_round_distance;
    std::vector<GlElement> glx_gens;
    nlohmann::ordered_json reports = nlohmann::ordered_json::array();
    for (const TwistSpec& spec : specs) {
        RunTwistOptions opts;
        std::vector<int> round_lowers;
        if (certify_rounds > 0) {
            opts.on_round = [&](int, const TwistSimulator& sim) {
                CssCode snapshot = sim.snapshot_code();
                for (Pauli side : {Pauli::X, Pauli::Z}) {
                    const BinMatrix& checks = side == Pauli::X ? snapshot.hz : snapshot.hx;
                    const BinMatrix& pairing =
                        side == Pauli::X ? sim.z_frames() : sim.x_frames();
                    EnumOptions eopts;
                    eopts.wmax = certify_rounds;
                    eopts.threads = threads;
                    DistanceResult r = bounded_weight_enum(checks, pairing, eopts, -1);
                    if (r.best_upper) {
                        min_round_distance = std::min(min_round_distance.value_or(1 << 20),
                                                      *r.best_upper);
                        round_lowers.push_back(*r.best_upper);
                    } else {
                        min_round_lower = std::min(min_round_lower, r.certified_lower);
                        round_lowers.push_back(r.certified_lower);
                    }
                }
            };
        }
        TwistReport report = run_twist(code, basis, spec, opts);
        all_closed = all_closed && report.closed;
        max_weight = std::max(max_weight, report.max_intermediate_weight);
        glx_gens.push_back(GlElement::from_matrix(report.glx));
        auto j = nlohmann::ordered_json::parse(twist_report_to_json(report));
        if (certify_rounds > 0) j["round_distance_lower"] = round_lowers;
        reports.push_back(std::move(j));
    }

    auto path = resolve_out(out, catalog ? "twist_catalog.json" : "twist_report.json");
    {
        nlohmann::ordered_json doc;
        nlohmann::ordered_json config;
        config["bundle"] = bundle;
        config["catalog"] = catalog;
        config["certify_rounds"] = certify_rounds;
        config["threads"] = threads;
        if (!catalog) {
            config["orientation"] = orient_s;
            config["from"] = from;
            config["to"] = to;
            config["t"] = t;
            config["implements"] = implements_s;
            config["order"] = order;
        }
        doc["config"] = std::move(config);
        doc["reports"] = std::move(reports);
        std::ofstream f(path);
        if (!f) throw Error("cannot write " + path.string());
        f << doc.dump(2) << "\n";
    }
    std::cout << (all_closed ? "all twists closed" : "CLOSURE FAILURE") << "; max intermediate check weight " << max_weight
              << "\n";
    if (certify_rounds > 0) {
        if (min_round_distance)
            std::cout << "minimum intermediate distance found: " << *min_round_distance << "\n";
        else
            std::cout << "all intermediate distances certified >= " << min_round_lower << "\n";
    }
    if (catalog) {
        BigUint order_x = generated_group_order(glx_gens);
        std::cout << "glx group order " << order_x.to_string()
                  << (order_x == gl_order(basis.k()) ? " = |GL(k,2)|" : "") << "\n";
    }
    std::cout << "wrote " << path.string() << "\n";
    return all_closed ? kExitOk : kExitValidation;
}

int cmd_distance(const std::string& bundle, int wmax, std::uint64_t budget, int isd_iters,
                 std::uint64_t seed, bool symmetry, int threads, const std::string& out) {
    ProductCode code = read_bundle_file(bundle);
    LogicalBasis basis = product_basis(code.blueprint, code.code);
    CssDistanceOptions opts;
    opts.enumeration.wmax = wmax;
    opts.enumeration.budget = budget;
    opts.enumeration.use_symmetry = symmetry;
    opts.enumeration.threads = threads;
    opts.isd.iterations = isd_iters;
    opts.isd.seed = seed;

    CssDistanceResult result = css_distance(code.code, basis, opts);
    bool budget_hit = result.budget_exceeded;

    auto path = resolve_out(out, "distance.json");
    {
        nlohmann::ordered_json doc = nlohmann::ordered_json::parse(distance_result_to_json(result));
        nlohmann::ordered_json config;
        config["bundle"] = bundle;
        config["wmax"] = opts.enumeration.wmax;
        config["budget"] = budget;
        config["isd_iters"] = isd_iters;
        config["seed"] = seed;
        config["symmetry"] = symmetry;
        config["threads"] = threads;
        doc["config"] = std::move(config);
        std::ofstream f(path);
        if (!f) throw Error("cannot write " + path.string());
        f << doc.dump(2) << "\n";
    }
    std::cout << "certified lower " << result.certified_lower;
    if (result.best_upper) std::cout << ", best upper " << *result.best_upper;
    std::cout << (result.exact ? " (exact)" : "") << "\n";
    std::cout << "wrote " << path.string() << "\n";
    return budget_hit ? kExitBudget : kExitOk;
}

int cmd_search(int q, const std::string& profile_s, const std::string& records, bool resume,
               std::uint64_t budget, int isd_iters, std::uint64_t seed, int threads) {
    SearchTask task;
    task.q = q;
    auto comma = profile_s.find(',');
    if (comma == std::string::npos) throw Error("profile must be w1,w2");
    task.profile.w1 = std::stoi(profile_s.substr(0, comma));
    task.profile.w2 = std::stoi(profile_s.substr(comma + 1));
    task.record_path =
        records.empty() ? resolve_out("", "search_q" + std::to_string(q) + ".jsonl").string()
                        : records;
    task.resume = resume;
    task.enumeration.budget = budget;
    task.isd.iterations = isd_iters;
    task.isd.seed = seed;
    task.threads = threads;

    {
        nlohmann::ordered_json config;
        config["q"] = task.q;
        config["profile"] = {task.profile.w1, task.profile.w2};
        config["records"] = task.record_path;
        config["resume"] = task.resume;
        config["budget"] = task.enumeration.budget;
        config["isd_iters"] = task.isd.iterations;
        config["seed"] = task.isd.seed;
        config["threads"] = task.threads;
        std::ofstream f(task.record_path + ".config.json");
        if (f) f << config.dump(2) << "\n";
    }
    SearchOutcome outcome = run_search(task);
    std::cout << outcome.records.size() << " candidates";
    if (!outcome.best.empty()) {
        const SearchRecord& b = outcome.best.front();
        std::cout << "; best [[" << b.n << "," << b.k << "]] distance ";
        if (b.exact)
            std::cout << b.certified_lower << " (exact)";
        else if (b.best_upper)
            std::cout << "in [" << b.certified_lower << "," << *b.best_upper << "]";
        std::cout << " with p1=" << CyclicPoly(3 * q, b.p1).to_string()
                  << " p2=" << CyclicPoly(3 * q, b.p2).to_string();
    }
    std::cout << "\nwrote " << task.record_path << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& bundle, const std::string& against, int bb_bp_q) {
    ProductCode code = read_bundle_file(bundle);
    bool ok = true;
    auto report = [&](const std::string& name, bool pass) {
        std::cout << (pass ? "  [pass] " : "  [FAIL] ") << name << "\n";
        ok = ok && pass;
    };

    report("commutation hx hz^T = 0", commutation_holds(code.code));
    int k_rank = code.code.n - static_cast<int>(gf2_rank(code.code.hx)) -
                 static_cast<int>(gf2_rank(code.code.hz));
    report("logical count matches rank (k = " + std::to_string(k_rank) + ")",
           k_rank == code.k);
    try {
        LogicalBasis basis = product_basis(code.blueprint, code.code);
        VerifyReport v = verify_logicals(code.code, basis);
        report("logical basis verifies", v.all_ok());
    } catch (const Error& e) {
        report(std::string("logical basis verifies (") + e.what() + ")", false);
    }

    if (!against.empty()) {
        ProductCode other = read_bundle_file(against);
        const ProductCode& bb = code.blueprint.kind == ProductKind::bivariate ? code : other;
        const ProductCode& bp = code.blueprint.kind == ProductKind::bivariate ? other : code;
        BbBpIsomorphism iso = bb_bp_isomorphism(bb, bp, bb_bp_q);
        CssCode mapped = apply_isomorphism(bb.code, iso);
        report("bivariate-balanced relabeling is bit-exact",
               mapped.hx == bp.code.hx && mapped.hz == bp.code.hz);
    }

    std::cout << (ok ? "verify: pass" : "verify: FAIL") << "\n";
    return ok ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclic-product CSS codes and generalised Dehn twists"};
    app.require_subcommand(1);

    // build
    auto* build = app.add_subcommand("build", "construct a code and write its bundle");
    std::string build_kind, p1s, p2s, As, Bs, build_out;
    int q = 0, l = 0, m = 0, jj = 0, kk = 0;
    bool alist = false, emit_basis = false;
    build->add_option("kind", build_kind, "hgp | bp | bb | toric")->required();
    build->add_option("--q", q, "family parameter (n = 3q per factor)");
    build->add_option("--p1", p1s, "first check polynomial, comma-separated exponents");
    build->add_option("--p2", p2s, "second check polynomial");
    build->add_option("--l", l, "first group order");
    build->add_option("--m", m, "second group order");
    build->add_option("--A", As, "bivariate A polynomial, tokens like a9,b1,b2 or e");
    build->add_option("--B", Bs, "bivariate B polynomial");
    build->add_option("--j", jj, "bivariate first modulus");
    build->add_option("--k", kk, "bivariate second modulus");
    build->add_option("--out", build_out, "output bundle path");
    build->add_flag("--alist", alist, "also write hx/hz in alist format");
    build->add_flag("--basis", emit_basis, "also write the logical basis as JSON");

    // twist
    auto* twist = app.add_subcommand("twist", "compile and simulate Dehn twists");
    std::string twist_bundle, orient_s = "v", implements_s = "X", order_s = "asc", twist_out;
    bool catalog = false;
    int from = 0, to = 0, tt = 1, certify_rounds = 0, twist_threads = 0;
    twist->add_option("bundle", twist_bundle, "code bundle JSON")->required();
    twist->add_flag("--catalog", catalog, "run the fixed 16-twist catalog");
    twist->add_option("--orientation", orient_s, "v | h");
    twist->add_option("--from", from, "source column/row index");
    twist->add_option("--to", to, "target column/row index");
    twist->add_option("--t", tt, "target translation index (1-based)");
    twist->add_option("--implements", implements_s, "X | Z");
    twist->add_option("--order", order_s, "asc | desc term order");
    twist->add_option("--certify-rounds", certify_rounds,
                      "exhaustively certify every intermediate code up to this weight");
    twist->add_option("--threads", twist_threads, "enumeration worker threads");
    twist->add_option("--out", twist_out, "output report path");

    // distance
    auto* distance = app.add_subcommand("distance", "certify code distance");
    std::string dist_bundle, dist_out;
    int wmax = -1, isd_iters = 10000, threads = 0;
    std::uint64_t budget = 2'000'000'000ull, seed = 1;
    bool symmetry = false;
    distance->add_option("bundle", dist_bundle, "code bundle JSON")->required();
    distance->add_option("--wmax", wmax, "exhaustive enumeration weight limit");
    distance->add_option("--budget", budget, "candidate budget");
    distance->add_option("--isd-iters", isd_iters, "information-set iterations");
    distance->add_option("--seed", seed, "ISD seed");
    distance->add_flag("--symmetry", symmetry, "use translation symmetry reduction");
    distance->add_option("--threads", threads, "enumeration worker threads");
    distance->add_option("--out", dist_out, "output result path");

    // search
    auto* search = app.add_subcommand("search", "sweep representative polynomial pairs");
    std::string profile_s = "3,3", records;
    int search_q = 1, search_isd = 2000, search_threads = 0;
    std::uint64_t search_budget = 100'000'000ull, search_seed = 1;
    bool resume = false;
    search->add_option("--q", search_q, "family parameter")->required();
    search->add_option("--profile", profile_s, "weight profile, e.g. 3,3 or 3,5");
    search->add_option("--records", records, "JSON-lines record file");
    search->add_flag("--resume", resume, "skip candidates already recorded");
    search->add_option("--budget", search_budget, "enumeration budget per candidate");
    search->add_option("--isd-iters", search_isd, "ISD iterations per candidate");
    search->add_option("--seed", search_seed, "ISD seed");
    search->add_option("--threads", search_threads, "worker threads");

    // verify
    auto* verify = app.add_subcommand("verify", "re-check a bundle's invariants");
    std::string verify_bundle, against;
    int bb_bp_q = 0;
    verify->add_option("bundle", verify_bundle, "code bundle JSON")->required();
    verify->add_option("--against", against, "second bundle for relabeling equality");
    verify->add_option("--bb-bp-q", bb_bp_q, "q for the bivariate-balanced relabeling");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitBadInput;
    }

    auto auto_threads = [](int t) {
        return t > 0 ? t : std::max(1u, std::thread::hardware_concurrency());
    };
    threads = auto_threads(threads);
    search_threads = auto_threads(search_threads);
    twist_threads = auto_threads(twist_threads);

    try {
        if (build->parsed())
            return cmd_build(build_kind, q, p1s, p2s, l, m, As, Bs, jj, kk, build_out, alist,
                             emit_basis);
        if (twist->parsed())
            return cmd_twist(twist_bundle, catalog, orient_s, from, to, tt, implements_s,
                             order_s, certify_rounds, twist_threads, twist_out);
        if (distance->parsed())
            return cmd_distance(dist_bundle, wmax, budget, isd_iters, seed, symmetry, threads,
                                dist_out);
        if (search->parsed())
            return cmd_search(search_q, profile_s, records, resume, search_budget, search_isd,
                              search_seed, search_threads);
        if (verify->parsed()) return cmd_verify(verify_bundle, against, bb_bp_q);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what()
                  << " (largest certifiable wmax " << e.largest_certifiable_wmax << ")\n";
        return kExitBudget;
    } catch (const InvalidPair& e) {
        std::cerr << "validation: " << e.what() << "\n";
        return kExitValidation;
    } catch (const BasisInvalid& e) {
        std::cerr << "validation: " << e.what() << "\n";
        return kExitValidation;
    } catch (const ScheduleInvalid& e) {
        std::cerr << "validation: " << e.what() << "\n";
        return kExitValidation;
    } catch (const NotALogical& e) {
        std::cerr << "validation: " << e.what() << "\n";
        return kExitValidation;
    } catch (const IsomorphismUnavailable& e) {
        std::cerr << "validation: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
