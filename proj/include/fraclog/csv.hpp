#pragma once

#include <string>

#include "fraclog/margin_report.hpp"

namespace fraclog {

/// Shortest round-trip decimal representation of a double (bit-stable
/// across runs, re-parses to the same value).
std::string format_double(double value);

inline constexpr const char* kMarginCsvHeader =
    "inequality_id,params,lhs,rhs,margin,relative_margin,resolution,truncation_flag";

/// One CSV row per report: inequality_id, params (semicolon-joined
/// key=value), lhs, rhs, margin, relative_margin, resolution,
/// truncation_flag.
std::string margin_csv_row(const std::string& inequality_id,
                           const std::string& params,
                           const MarginReport& report);

}  // namespace fraclog
