#include "conicrect/report.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

#include "conicrect/errors.hpp"
#include "json.hpp"

namespace conicrect {

using json = nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

json named_to_json(const NamedValues& values) {
  json obj = json::object();
  for (const auto& [k, v] : values) obj[k] = v;
  return obj;
}

NamedValues named_from_json(const json& obj) {
  NamedValues out;
  for (const auto& [k, v] : obj.items()) out.emplace_back(k, v.get<double>());
  return out;
}

}  // namespace

std::string to_json(const RunReport& r) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["op"] = r.op;
  j["inputs"] = named_to_json(r.inputs);
  j["values"] = named_to_json(r.values);
  if (r.residual) j["residual"] = *r.residual;
  if (r.tolerance) j["tolerance"] = *r.tolerance;
  if (r.iterations) j["iterations"] = *r.iterations;
  if (r.passed) j["passed"] = *r.passed;
  j["flags"] = r.flags;
  if (!r.iterates.empty()) {
    json its = json::array();
    for (const auto& [p, q] : r.iterates) its.push_back({p, q});
    j["iterates"] = its;
  }
  return j.dump(2);
}

RunReport report_from_json(const std::string& text) {
  const json j = json::parse(text);
  if (j.at("schema_version").get<int>() != kSchemaVersion)
    throw DomainError("report: unsupported schema_version");
  RunReport r;
  r.op = j.at("op").get<std::string>();
  r.inputs = named_from_json(j.at("inputs"));
  r.values = named_from_json(j.at("values"));
  if (j.contains("residual")) r.residual = j["residual"].get<double>();
  if (j.contains("tolerance")) r.tolerance = j["tolerance"].get<double>();
  if (j.contains("iterations")) r.iterations = j["iterations"].get<long>();
  if (j.contains("passed")) r.passed = j["passed"].get<bool>();
  r.flags = j.at("flags").get<std::vector<std::string>>();
  if (j.contains("iterates"))
    for (const auto& pq : j["iterates"]) r.iterates.emplace_back(pq[0].get<double>(), pq[1].get<double>());
  return r;
}

std::string to_plain(const RunReport& r) {
  std::ostringstream os;
  for (const auto& [k, v] : r.values) os << k << " = " << format_double(v) << '\n';
  if (r.iterations) os << "iterations = " << *r.iterations << '\n';
  for (size_t i = 0; i < r.iterates.size(); ++i)
    os << "n = " << i << "  p = " << format_double(r.iterates[i].first)
       << "  q = " << format_double(r.iterates[i].second) << '\n';
  if (r.residual) os << "residual = " << format_double(*r.residual) << '\n';
  if (r.tolerance) os << "tolerance = " << format_double(*r.tolerance) << '\n';
  if (r.passed) os << (*r.passed ? "PASS" : "FAIL") << '\n';
  for (const auto& f : r.flags) os << "warning: " << f << '\n';
  return os.str();
}

std::string table_to_csv(const SweepTable& t) {
  std::ostringstream os;
  for (size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_double(row[i]);
    os << '\n';
  }
  return os.str();
}

std::string table_to_json(const SweepTable& t) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["op"] = t.op;
  j["sweep"] = t.sweep;
  j["columns"] = t.columns;
  j["rows"] = t.rows;
  return j.dump(2);
}

}  // namespace conicrect
