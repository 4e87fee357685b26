#pragma once

#include <string>

#include "cyclotwist/distance.hpp"
#include "cyclotwist/twist.hpp"

namespace cyclotwist {

// alist text format: "n m", max column/row degrees, per-column degrees,
// per-row degrees, then 1-indexed neighbor lists per column and per row,
// zero-padded to the maximum degree.
std::string to_alist(const BinMatrix& m);
BinMatrix from_alist(const std::string& text);
void write_alist_file(const std::string& path, const BinMatrix& m);
BinMatrix read_alist_file(const std::string& path);

// JSON code bundle: kind, parameters, check matrices as row-index lists,
// labels. Round-trips bit-exactly.
std::string bundle_to_json(const ProductCode& code);
ProductCode bundle_from_json(const std::string& text);
void write_bundle_file(const std::string& path, const ProductCode& code);
ProductCode read_bundle_file(const std::string& path);

std::string basis_to_json(const LogicalBasis& basis);
std::string twist_report_to_json(const TwistReport& report);
std::string distance_result_to_json(const CssDistanceResult& result);

}  // namespace cyclotwist
