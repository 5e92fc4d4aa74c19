#include "fraclog/csv.hpp"

#include <charconv>
#include <stdexcept>

namespace fraclog {

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  if (res.ec != std::errc{}) throw std::runtime_error("format_double failed");
  return std::string(buf, res.ptr);
}

std::string margin_csv_row(const std::string& inequality_id,
                           const std::string& params,
                           const MarginReport& report) {
  std::string row;
  row.reserve(128);
  row += inequality_id;
  row += ',';
  row += params;
  row += ',';
  row += format_double(report.lhs);
  row += ',';
  row += format_double(report.rhs);
  row += ',';
  row += format_double(report.margin());
  row += ',';
  row += format_double(report.relative_margin());
  row += ',';
  row += std::to_string(report.disc.resolution);
  row += ',';
  row += report.disc.truncation ? '1' : '0';
  return row;
}

double margin_tolerance(const MarginReport& report, double scale) {
  const double rel = report.disc.truncation ? 1e-4 : 1e-6;
  return scale * rel * std::abs(report.rhs);
}

}  // namespace fraclog
