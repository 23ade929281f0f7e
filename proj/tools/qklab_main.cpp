// qklab command line: verification suites, the capacity table, and the N = 3
// walkthrough, all through the shared-library C API.
//
// Exit codes: 0 all checks pass, 1 at least one check failed, 2 usage or I/O
// error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qklab/qklab.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

bool write_output(const std::string& path, const char* text) {
  if (path.empty()) {
    std::fputs(text, stdout);
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << text;
  return static_cast<bool>(out);
}

struct CommonFlags {
  std::uint64_t seed = 0;
  int n = 0;
  int m = 0;
  int samples = 0;
  double alpha = 0.0;
  std::string out_path;
  std::string format = "json";
  bool inject_failure = false;
};

void attach_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--seed", flags.seed, "Root seed for every randomized check (default 0)");
  cmd->add_option("--n", flags.n, "Dimension override where a suite accepts one");
  cmd->add_option("--m", flags.m, "Context-count override where a suite accepts one");
  cmd->add_option("--samples", flags.samples, "Sample-count override for randomized sweeps");
  cmd->add_option("--alpha", flags.alpha, "Extra Born-exponent value to probe in the born suite");
  cmd->add_option("--out", flags.out_path, "Write the report here instead of stdout");
  cmd->add_option("--format", flags.format, "Report format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_flag("--inject-failure", flags.inject_failure,
                "Test hook: append one always-failing check")
      ->group("");
}

int run_verify(const std::string& suite, const CommonFlags& flags) {
  qk_run_options options{};
  options.seed = flags.seed;
  options.n = flags.n;
  options.m = flags.m;
  options.samples = flags.samples;
  options.alpha = flags.alpha;
  options.inject_failure = flags.inject_failure ? 1 : 0;
  options.format = flags.format == "csv" ? 1 : 0;

  char* report = nullptr;
  qk_run_stats stats{};
  const qk_status status = qk_run_suite(suite.c_str(), &options, &report, &stats);
  if (status != QK_OK) {
    std::cerr << "error: " << qk_status_name(status) << ": " << qk_last_error_message() << "\n";
    return kExitUsage;
  }
  const bool written = write_output(flags.out_path, report);
  qk_string_free(report);
  if (!written) {
    std::cerr << "error: cannot write " << flags.out_path << "\n";
    return kExitUsage;
  }
  std::cerr << "suite " << suite << ": " << stats.checks_run - stats.checks_failed << "/"
            << stats.checks_run << " checks passed\n";
  return stats.checks_failed == 0 ? kExitPass : kExitCheckFailed;
}

int run_capacity_table(const std::vector<int>& dims, const std::string& out_path) {
  char* csv = nullptr;
  const qk_status status = qk_capacity_table_csv(dims.data(), static_cast<int>(dims.size()), &csv);
  if (status != QK_OK) {
    std::cerr << "error: " << qk_status_name(status) << ": " << qk_last_error_message() << "\n";
    return kExitUsage;
  }
  const bool written = write_output(out_path, csv);
  qk_string_free(csv);
  if (!written) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return kExitUsage;
  }
  return kExitPass;
}

int run_qutrit(const std::string& out_path) {
  char* text = nullptr;
  char* json = nullptr;
  qk_run_stats stats{};
  const qk_status status = qk_qutrit_walkthrough(&text, &json, &stats);
  if (status != QK_OK) {
    std::cerr << "error: " << qk_status_name(status) << ": " << qk_last_error_message() << "\n";
    return kExitUsage;
  }
  std::fputs(text, stdout);
  bool written = true;
  if (!out_path.empty()) written = write_output(out_path, json);
  qk_string_free(text);
  qk_string_free(json);
  if (!written) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return kExitUsage;
  }
  return stats.checks_failed == 0 ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qklab — machine-checkable verification of finite-capacity quantum structure"};
  app.require_subcommand(1);

  CommonFlags verify_flags;
  std::string suite;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run a verification suite and emit one report record per check");
  verify
      ->add_option("suite", suite,
                   "kernel | dynamics | mub | born | capacity | compose | sampling | all")
      ->required();
  attach_common(verify, verify_flags);

  std::vector<int> table_dims = {2, 4, 8, 16};
  std::string table_out;
  CLI::App* capacity = app.add_subcommand("capacity", "Capacity bookkeeping outputs");
  CLI::App* table = capacity->add_subcommand("table", "Deterministic-storage deficit table");
  table->add_option("--dims", table_dims, "Dimensions to tabulate")->delimiter(',');
  table->add_option("--out", table_out, "Write the CSV here instead of stdout");
  capacity->require_subcommand(1);

  std::string qutrit_out;
  CLI::App* qutrit =
      app.add_subcommand("qutrit", "Walk through the N = 3 example and check its numbers");
  qutrit->add_option("--out", qutrit_out, "Write the JSON record here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (verify->parsed()) return run_verify(suite, verify_flags);
  if (capacity->parsed()) return run_capacity_table(table_dims, table_out);
  if (qutrit->parsed()) return run_qutrit(qutrit_out);
  return kExitUsage;
}
