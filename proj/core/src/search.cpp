#include "cyclotwist/search.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <set>

#include <json.hpp>

#include "cyclotwist/errors.hpp"
#include "cyclotwist/logicals.hpp"

namespace cyclotwist {

namespace {

// Subsets of [1, n) of size w-1, prepended with 0.
void for_each_support(int n, int w, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> pick(w, 0);
    std::function<void(int, int)> rec = [&](int depth, int start) {
        if (depth == w) {
            fn(pick);
            return;
        }
        for (int i = start; i < n; ++i) {
            pick[depth] = i;
            rec(depth + 1, i + 1);
        }
    };
    pick[0] = 0;
    rec(1, 1);
}

using ExpPair = std::pair<std::vector<int>, std::vector<int>>;

std::vector<std::vector<int>> shift_normal_forms(const CyclicPoly& p) {
    std::vector<std::vector<int>> out;
    for (int d : p.exponents()) out.push_back(p.shifted(-d).exponents());
    return out;
}

ExpPair canonical_pair_key(const CyclicPoly& p1, const CyclicPoly& p2) {
    std::optional<ExpPair> best;
    auto consider = [&](const CyclicPoly& a, const CyclicPoly& b) {
        for (const auto& ea : shift_normal_forms(a))
            for (const auto& eb : shift_normal_forms(b)) {
                ExpPair key{ea, eb};
                if (!best || key < *best) best = key;
            }
    };
    CyclicPoly t1 = poly_transpose(p1), t2 = poly_transpose(p2);
    consider(p1, p2);
    consider(p2, p1);
    consider(t1, t2);
    consider(t2, t1);
    return *best;
}

std::string now_string() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

}  // namespace

std::vector<CyclicPoly> admissible_polys(int q, int weight) {
    int n = 3 * q;
    auto [p_min, g] = family_polys(q);
    (void)p_min;
    std::vector<CyclicPoly> out;
    if (weight < 1 || weight > n) return out;
    for_each_support(n, weight, [&](const std::vector<int>& support) {
        CyclicPoly p(n, support);
        if (static_cast<int>(p.weight()) != weight) return;
        if (!poly_mul(p, g).is_zero()) return;
        // Same classical code as the minimal check polynomial: alpha = 2.
        PlainPoly gcd = poly_gcd(PlainPoly::from_cyclic(p), PlainPoly::x_n_plus_1(n));
        if (gcd.degree() != 2) return;
        out.push_back(p);
    });
    return out;
}

std::vector<std::pair<CyclicPoly, CyclicPoly>> enumerate_candidates(
    int q, const WeightProfile& profile) {
    std::vector<CyclicPoly> first = admissible_polys(q, profile.w1);
    std::vector<CyclicPoly> second =
        profile.w1 == profile.w2 ? first : admissible_polys(q, profile.w2);

    std::set<ExpPair> seen;
    std::vector<std::pair<CyclicPoly, CyclicPoly>> out;
    for (const CyclicPoly& p1 : first)
        for (const CyclicPoly& p2 : second) {
            ExpPair key = canonical_pair_key(p1, p2);
            if (seen.insert(key).second) out.push_back({p1, p2});
        }
    return out;
}

std::string record_to_json(const SearchRecord& record) {
    nlohmann::ordered_json j;
    j["q"] = record.q;
    j["p1"] = record.p1;
    j["p2"] = record.p2;
    j["n"] = record.n;
    j["k"] = record.k;
    j["certified_lower"] = record.certified_lower;
    if (record.best_upper)
        j["best_upper"] = *record.best_upper;
    else
        j["best_upper"] = nullptr;
    j["exact"] = record.exact;
    j["witness"] = record.witness;
    j["ts"] = record.timestamp;
    return j.dump();
}

SearchRecord record_from_json(const std::string& line) {
    nlohmann::json j = nlohmann::json::parse(line);
    SearchRecord r;
    r.q = j.at("q").get<int>();
    r.p1 = j.at("p1").get<std::vector<int>>();
    r.p2 = j.at("p2").get<std::vector<int>>();
    r.n = j.at("n").get<int>();
    r.k = j.at("k").get<int>();
    r.certified_lower = j.at("certified_lower").get<int>();
    if (!j.at("best_upper").is_null()) r.best_upper = j.at("best_upper").get<int>();
    r.exact = j.at("exact").get<bool>();
    r.witness = j.value("witness", std::vector<int>{});
    r.timestamp = j.value("ts", std::string{});
    return r;
}

namespace {

SearchRecord evaluate_candidate(const SearchTask& task, const CyclicPoly& p1,
                                const CyclicPoly& p2) {
    int l = 3 * task.q;
    ProductCode code = bp_build(p1, p2, l);
    LogicalBasis basis = product_basis(code.blueprint, code.code);

    CssDistanceOptions opts;
    opts.enumeration = task.enumeration;
    opts.enumeration.threads = task.threads;
    opts.isd = task.isd;
    CssDistanceResult dist = css_distance(code.code, basis, opts);

    SearchRecord rec;
    rec.q = task.q;
    rec.p1 = p1.exponents();
    rec.p2 = p2.exponents();
    rec.n = code.code.n;
    rec.k = code.k;
    rec.certified_lower = dist.certified_lower;
    rec.best_upper = dist.best_upper;
    rec.exact = dist.exact;
    if (dist.x.witness && dist.x.best_upper &&
        (!dist.best_upper || *dist.x.best_upper == *dist.best_upper))
        for (std::size_t i : dist.x.witness->set_bits()) rec.witness.push_back(static_cast<int>(i));
    else if (dist.z.witness)
        for (std::size_t i : dist.z.witness->set_bits()) rec.witness.push_back(static_cast<int>(i));
    rec.timestamp = now_string();
    return rec;
}

}  // namespace

SearchOutcome run_search(const SearchTask& task) {
    auto candidates = enumerate_candidates(task.q, task.profile);

    // Resume: index existing records by their polynomial pair.
    std::map<ExpPair, SearchRecord> done;
    if (task.resume && !task.record_path.empty()) {
        std::ifstream in(task.record_path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            SearchRecord r = record_from_json(line);
            if (r.q != task.q) continue;
            done[{r.p1, r.p2}] = r;
        }
    }

    std::ofstream out_file;
    if (!task.record_path.empty())
        out_file.open(task.record_path, task.resume ? std::ios::app : std::ios::trunc);

    // Candidate-parallel with a sliding window; records are committed to
    // the single writer in candidate order, so resumed and threaded runs
    // produce the same file contents.
    SearchOutcome outcome;
    int window = std::max(1, task.threads);
    std::vector<std::optional<SearchRecord>> ready(candidates.size());
    std::size_t next_launch = 0, next_commit = 0;
    std::vector<std::future<SearchRecord>> in_flight(candidates.size());

    auto launch = [&](std::size_t i) {
        const auto& [p1, p2] = candidates[i];
        ExpPair key{p1.exponents(), p2.exponents()};
        auto it = done.find(key);
        if (it != done.end()) {
            ready[i] = it->second;
            return;
        }
        SearchTask sub = task;
        sub.threads = 1;
        in_flight[i] = std::async(std::launch::async, [sub, p1 = p1, p2 = p2] {
            return evaluate_candidate(sub, p1, p2);
        });
    };

    while (next_commit < candidates.size()) {
        while (next_launch < candidates.size() &&
               next_launch < next_commit + static_cast<std::size_t>(window))
            launch(next_launch++);
        std::size_t i = next_commit++;
        SearchRecord rec;
        bool fresh = false;
        if (ready[i]) {
            rec = *ready[i];
        } else {
            rec = in_flight[i].get();
            fresh = true;
        }
        outcome.records.push_back(rec);
        if (fresh && out_file.is_open()) {
            out_file << record_to_json(rec) << "\n";
            out_file.flush();
        }
    }

    std::optional<int> best_value;
    for (const SearchRecord& r : outcome.records)
        if (auto v = r.rank_value(); v && (!best_value || *v > *best_value)) best_value = v;
    for (const SearchRecord& r : outcome.records)
        if (auto v = r.rank_value(); v && best_value && *v == *best_value)
            outcome.best.push_back(r);
    std::sort(outcome.best.begin(), outcome.best.end(),
              [](const SearchRecord& a, const SearchRecord& b) {
                  return std::pair(a.p1, a.p2) < std::pair(b.p1, b.p2);
              });
    return outcome;
}

}  // namespace cyclotwist
