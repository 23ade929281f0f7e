#include "capacity.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace qklab {

namespace {

void check_params(int n, int m) {
  if (n < 2 || m < 2) raise(Errc::InvalidArgument, "bit budget needs N >= 2 and M >= 2");
}

// 2^bits > n, exact for integer bits.
bool power_exceeds(long long bits, long long n) {
  if (bits >= 63) return true;
  return (1ll << bits) > n;
}

std::string format_bits(double x) {
  char buf[32];
  const double rounded = std::round(x);
  if (std::abs(x - rounded) < 1e-9) {
    std::snprintf(buf, sizeof buf, "%.1f", rounded);
  } else {
    std::snprintf(buf, sizeof buf, "%.4f", x);
  }
  return buf;
}

std::string format_maybe_int(double x) {
  char buf[32];
  const double rounded = std::round(x);
  if (std::abs(x - rounded) < 1e-9) {
    std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(rounded));
  } else {
    std::snprintf(buf, sizeof buf, "%.4f", x);
  }
  return buf;
}

}  // namespace

BitBudget bit_budget(int n, int m) {
  check_params(n, m);
  BitBudget b;
  b.n = n;
  b.m = m;
  b.available_bits = std::log2(static_cast<double>(n));
  b.combinatorial_bits = (m - 1) * b.available_bits;
  b.kolmogorov_bits = static_cast<long long>(m - 1) * (n - 1);
  return b;
}

std::vector<DeficitRow> deficit_table(const std::vector<int>& ns) {
  std::vector<DeficitRow> rows;
  rows.reserve(ns.size());
  for (int n : ns) {
    const BitBudget two = bit_budget(n, 2);
    const BitBudget three = bit_budget(n, 3);
    DeficitRow row;
    row.n = n;
    row.available = two.available_bits;
    row.kolm_m2 = two.kolmogorov_bits;
    row.comb_m3 = three.combinatorial_bits;
    row.feasible = !determinism_infeasible(n, 2, DeficitBound::Kolmogorov).infeasible;
    rows.push_back(row);
  }
  return rows;
}

std::string deficit_table_csv(const std::vector<DeficitRow>& rows) {
  std::string out = "N,available,kolm_M2,comb_M3,feasible\n";
  for (const auto& row : rows) {
    out += std::to_string(row.n);
    out += ',';
    out += format_bits(row.available);
    out += ',';
    out += std::to_string(row.kolm_m2);
    out += ',';
    out += format_maybe_int(row.comb_m3);
    out += ',';
    out += row.feasible ? "true" : "false";
    out += '\n';
  }
  return out;
}

unsigned long long assignment_count(int n, int m) {
  check_params(n, m);
  unsigned long long count = 1;
  const auto base = static_cast<unsigned long long>(n);
  for (int i = 0; i < m - 1; ++i) {
    if (count > std::numeric_limits<unsigned long long>::max() / base)
      raise(Errc::Overflow, "N^(M-1) does not fit in 64 bits");
    count *= base;
  }
  return count;
}

Feasibility determinism_infeasible(int n, int m, DeficitBound bound) {
  const BitBudget b = bit_budget(n, m);
  Feasibility f;
  if (bound == DeficitBound::Kolmogorov) {
    f.infeasible = power_exceeds(b.kolmogorov_bits, n);
    f.margin = static_cast<double>(b.kolmogorov_bits) - b.available_bits;
  } else {
    f.infeasible = b.combinatorial_bits > b.available_bits + 1e-9;
    f.margin = b.combinatorial_bits - b.available_bits;
  }
  return f;
}

Feasibility ks_bits_infeasible(int projector_count, int n) {
  if (projector_count < 1) raise(Errc::InvalidArgument, "projector count must be positive");
  if (n < 2) raise(Errc::InvalidArgument, "capacity needs N >= 2");
  Feasibility f;
  f.infeasible = power_exceeds(projector_count, n);
  f.margin = projector_count - std::log2(static_cast<double>(n));
  return f;
}

}  // namespace qklab
