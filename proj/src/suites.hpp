#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "report.hpp"

namespace qklab {

// Knobs shared by every suite. Zero-valued fields mean "suite default".
// Identical manifests produce identical reports: every randomized check
// derives its RandomSource from the manifest seed and a stream id hashed
// from the check name, so results do not depend on execution order.
struct RunManifest {
  std::uint64_t seed = 0;
  int n = 0;
  int m = 0;
  int samples = 0;
  double alpha = 0.0;
  bool inject_failure = false;  // test hook: appends one always-failing check
};

const std::vector<std::string>& suite_names();  // excludes "all"

// Runs one suite ("kernel", "dynamics", "mub", "born", "capacity",
// "compose", "sampling" or "all") and returns its sorted reports.
std::vector<CheckReport> run_suite(const std::string& suite, const RunManifest& manifest);

struct QutritWalkthrough {
  std::string text;
  std::string json;
  std::vector<CheckReport> checks;
};

// The N = 3 narrative: capacity deficit, 4 unbiased bases, uniform
// equal-superposition affinities, cyclic eigenvalues.
QutritWalkthrough qutrit_walkthrough();

}  // namespace qklab
