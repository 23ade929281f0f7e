#pragma once

#include <string>
#include <vector>

#include "common.hpp"

namespace qklab {

// Storage accounting for deterministic outcome assignments across M
// measurement contexts in a capacity-N system.
struct BitBudget {
  int n = 0;
  int m = 0;
  double available_bits = 0.0;       // log2 N
  double combinatorial_bits = 0.0;   // (M-1) log2 N
  long long kolmogorov_bits = 0;     // (M-1)(N-1)
};

BitBudget bit_budget(int n, int m);

struct DeficitRow {
  int n = 0;
  double available = 0.0;
  long long kolm_m2 = 0;
  double comb_m3 = 0.0;
  bool feasible = false;  // storage for M = 2 fits: 2^(N-1) <= N, exact
};

std::vector<DeficitRow> deficit_table(const std::vector<int>& ns);

// CSV with header "N,available,kolm_M2,comb_M3,feasible".
std::string deficit_table_csv(const std::vector<DeficitRow>& rows);

// N^(M-1) with a 64-bit overflow guard.
unsigned long long assignment_count(int n, int m);

enum class DeficitBound { Combinatorial, Kolmogorov };

struct Feasibility {
  bool infeasible = false;
  double margin = 0.0;  // required - available, in bits
};

// Kolmogorov comparisons are exact (integer vs power of two); the real-valued
// combinatorial comparison carries 1e-9 slack to keep the marginal N=2 row
// off the float-equality knife edge.
Feasibility determinism_infeasible(int n, int m, DeficitBound bound);

// One bit per projector of a non-contextual value assignment; projector
// counts are inputs, not derived here.
Feasibility ks_bits_infeasible(int projector_count, int n);

}  // namespace qklab
