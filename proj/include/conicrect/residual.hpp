#pragma once

#include <string>
#include <utility>
#include <vector>

namespace conicrect {

/// Both sides of a numerical identity and their absolute difference.
struct ResidualReport {
  std::string name;
  std::vector<std::pair<std::string, double>> inputs;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
};

inline ResidualReport make_residual(std::string name,
                                    std::vector<std::pair<std::string, double>> inputs,
                                    double lhs, double rhs) {
  return {std::move(name), std::move(inputs), lhs, rhs, lhs > rhs ? lhs - rhs : rhs - lhs};
}

}  // namespace conicrect
