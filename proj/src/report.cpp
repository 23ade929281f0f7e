#include "report.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

namespace qklab {

std::string comparator_symbol(Comparator c) {
  switch (c) {
    case Comparator::LessEq: return "<=";
    case Comparator::GreaterEq: return ">=";
    case Comparator::Approx: return "~=";
  }
  return "?";
}

bool evaluate_comparator(Comparator c, double value, double bound, double tolerance) {
  switch (c) {
    case Comparator::LessEq: return value <= bound + tolerance;
    case Comparator::GreaterEq: return value >= bound - tolerance;
    case Comparator::Approx: return std::abs(value - bound) <= tolerance;
  }
  return false;
}

CheckReport make_check(std::string name, std::map<std::string, std::string> params, double value,
                       Comparator comparator, double bound, double tolerance) {
  CheckReport r;
  r.check_name = std::move(name);
  r.params = std::move(params);
  r.value = value;
  r.bound = bound;
  r.comparator = comparator;
  r.tolerance = tolerance;
  r.pass = evaluate_comparator(comparator, value, bound, tolerance);
  return r;
}

std::string params_string(const std::map<std::string, std::string>& params) {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ';';
    out += k;
    out += '=';
    out += v;
  }
  return out;
}

void sort_reports(std::vector<CheckReport>& reports) {
  std::sort(reports.begin(), reports.end(), [](const CheckReport& a, const CheckReport& b) {
    if (a.check_name != b.check_name) return a.check_name < b.check_name;
    return params_string(a.params) < params_string(b.params);
  });
}

std::string reports_to_json(const std::vector<CheckReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json item;
    item["check_name"] = r.check_name;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    item["params"] = params;
    item["value"] = r.value;
    item["bound"] = r.bound;
    item["comparator"] = comparator_symbol(r.comparator);
    item["tolerance"] = r.tolerance;
    item["pass"] = r.pass;
    item["runtime_ms"] = 0;
    arr.push_back(item);
  }
  return arr.dump(2) + "\n";
}

std::string format_double(double v) {
  return nlohmann::json(v).dump();
}

std::string reports_to_csv(const std::vector<CheckReport>& reports) {
  std::string out = "check_name,params,value,bound,comparator,tolerance,pass,runtime_ms\n";
  for (const auto& r : reports) {
    out += r.check_name;
    out += ",\"";
    out += params_string(r.params);
    out += "\",";
    out += format_double(r.value);
    out += ',';
    out += format_double(r.bound);
    out += ',';
    out += comparator_symbol(r.comparator);
    out += ',';
    out += format_double(r.tolerance);
    out += ',';
    out += r.pass ? "true" : "false";
    out += ",0\n";
  }
  return out;
}

}  // namespace qklab
