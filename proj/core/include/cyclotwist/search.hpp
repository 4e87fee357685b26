#pragma once

#include <optional>
#include <string>
#include <utility>

#include "cyclotwist/distance.hpp"
#include "cyclotwist/products.hpp"

namespace cyclotwist {

struct WeightProfile {
    int w1 = 3;
    int w2 = 3;
};

struct SearchTask {
    int q = 1;
    WeightProfile profile;
    std::string record_path;  // JSON-lines; empty disables persistence
    bool resume = false;
    EnumOptions enumeration;
    IsdOptions isd;
    int threads = 1;
};

struct SearchRecord {
    int q = 0;
    std::vector<int> p1, p2;
    int n = 0, k = 0;
    int certified_lower = 1;
    std::optional<int> best_upper;
    bool exact = false;
    std::vector<int> witness;
    std::string timestamp;

    // Distance value used for ranking: the exact distance when certified,
    // otherwise the best upper bound.
    std::optional<int> rank_value() const {
        if (exact) return certified_lower;
        return best_upper;
    }
};

// Representative polynomials admissible for the balanced-product family:
// constant term 1, annihilated by the family generator, and defining the
// same classical code as 1 + x + x^2 (alpha = 2).
std::vector<CyclicPoly> admissible_polys(int q, int weight);

// All candidate pairs for the profile, deduplicated under monomial shifts
// of either factor, the joint mirror, and the factor swap.
std::vector<std::pair<CyclicPoly, CyclicPoly>> enumerate_candidates(int q,
                                                                    const WeightProfile& profile);

struct SearchOutcome {
    std::vector<SearchRecord> records;  // candidate order
    std::vector<SearchRecord> best;     // maximal rank value, ties kept
};

SearchOutcome run_search(const SearchTask& task);

// JSON-lines (de)serialization of one record.
std::string record_to_json(const SearchRecord& record);
SearchRecord record_from_json(const std::string& line);

}  // namespace cyclotwist
