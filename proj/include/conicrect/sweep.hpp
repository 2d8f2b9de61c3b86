#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace conicrect {

using ParamMap = std::map<std::string, double>;

/// A named operation that the table command can sweep.
struct SweepOp {
  std::string name;
  std::vector<std::string> params;
  ParamMap defaults;
  std::vector<std::string> outputs;
  std::function<std::vector<double>(const ParamMap&)> eval;
};

const std::vector<SweepOp>& sweep_ops();

/// Throws DomainError for an unknown name.
const SweepOp& find_sweep_op(const std::string& name);

struct SweepRequest {
  std::string op;
  std::string sweep;  // which parameter varies
  double from = 0.0;
  double to = 0.0;
  double step = 0.0;
  ParamMap fixed;
};

struct SweepTable {
  std::string op;
  std::string sweep;
  std::vector<std::string> columns;  // op parameters, then outputs
  std::vector<std::vector<double>> rows;
};

/// from, from + step, ... up to `to` (inclusive within a rounding allowance).
std::vector<double> sweep_points(double from, double to, double step);

/// Evaluates every point in parallel; rows come back in sweep order.
SweepTable run_sweep(const SweepRequest& request);

/// Single-threaded reference for run_sweep.
SweepTable run_sweep_serial(const SweepRequest& request);

}  // namespace conicrect
