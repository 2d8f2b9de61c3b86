#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conicrect/sweep.hpp"

namespace conicrect {

using NamedValues = std::vector<std::pair<std::string, double>>;

/// Result of one CLI run, independent of the output format.
struct RunReport {
  std::string op;
  NamedValues inputs;
  NamedValues values;
  std::optional<double> residual;
  std::optional<double> tolerance;
  std::optional<long> iterations;
  std::optional<bool> passed;  // checks only
  std::vector<std::string> flags;
  std::vector<std::pair<double, double>> iterates;  // AGM history, empty otherwise

  bool operator==(const RunReport&) const = default;
};

inline constexpr int kSchemaVersion = 1;

/// %.17g: enough digits to read back the same double.
std::string format_double(double v);

std::string to_json(const RunReport& report);
RunReport report_from_json(const std::string& text);
std::string to_plain(const RunReport& report);

std::string table_to_csv(const SweepTable& table);
std::string table_to_json(const SweepTable& table);

}  // namespace conicrect
