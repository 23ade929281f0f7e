#pragma once

#include <map>
#include <string>
#include <vector>

#include "common.hpp"

namespace qklab {

enum class Comparator { LessEq, GreaterEq, Approx };

std::string comparator_symbol(Comparator c);

// Uniform result record for every verification: pass is exactly the
// comparator applied to (value, bound, tolerance).
struct CheckReport {
  std::string check_name;
  std::map<std::string, std::string> params;
  double value = 0.0;
  double bound = 0.0;
  Comparator comparator = Comparator::LessEq;
  double tolerance = 0.0;
  bool pass = false;
  long long runtime_ms = 0;
};

bool evaluate_comparator(Comparator c, double value, double bound, double tolerance);

CheckReport make_check(std::string name, std::map<std::string, std::string> params, double value,
                       Comparator comparator, double bound, double tolerance);

// Stable ordering: check_name, then the canonical params string.
void sort_reports(std::vector<CheckReport>& reports);

std::string params_string(const std::map<std::string, std::string>& params);

// JSON array with keys in declaration order. runtime_ms is serialized as 0
// so that identical manifests produce byte-identical files; wall-clock
// timings go to diagnostics, not reports.
std::string reports_to_json(const std::vector<CheckReport>& reports);

std::string reports_to_csv(const std::vector<CheckReport>& reports);

std::string format_double(double v);

}  // namespace qklab
