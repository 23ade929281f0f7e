// Exercises the shared-library surface exactly as an external consumer
// would: public header only, no C++ internals.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "qklab/qklab.h"

TEST_CASE("state round trip with canonical amplitudes") {
  const double re[3] = {1.0, 1.0, 1.0};
  const double im[3] = {0.0, 0.0, 0.0};
  qk_state* s = nullptr;
  REQUIRE(qk_state_create(3, re, im, &s) == QK_OK);
  CHECK(qk_state_dim(s) == 3);
  double out_re[3], out_im[3];
  REQUIRE(qk_state_amplitudes(s, out_re, out_im) == QK_OK);
  for (int k = 0; k < 3; ++k) {
    CHECK(std::abs(out_re[k] - 1.0 / std::sqrt(3.0)) < 1e-12);
    CHECK(std::abs(out_im[k]) < 1e-12);
  }
  qk_state_destroy(s);
}

TEST_CASE("kernel from the C surface") {
  const double sup[3] = {1.0, 1.0, 1.0};
  const double e0[3] = {1.0, 0.0, 0.0};
  qk_state* a = nullptr;
  qk_state* b = nullptr;
  REQUIRE(qk_state_create(3, sup, nullptr, &a) == QK_OK);
  REQUIRE(qk_state_create(3, e0, nullptr, &b) == QK_OK);
  double k = -1.0;
  REQUIRE(qk_kernel(a, b, &k) == QK_OK);
  CHECK(std::abs(k - 2.0 / 3.0) < 1e-12);
  double f = -1.0;
  REQUIRE(qk_fidelity(a, a, &f) == QK_OK);
  CHECK(std::abs(f - 1.0) < 1e-12);
  qk_state_destroy(a);
  qk_state_destroy(b);
}

TEST_CASE("error codes cross the boundary") {
  const double zeros[2] = {0.0, 0.0};
  qk_state* s = nullptr;
  CHECK(qk_state_create(2, zeros, nullptr, &s) == QK_E_ZERO_VECTOR);
  CHECK(std::strlen(qk_last_error_message()) > 0);

  const double one[1] = {1.0};
  const double pair[2] = {1.0, 0.0};
  qk_state* a = nullptr;
  qk_state* b = nullptr;
  REQUIRE(qk_state_create(1, one, nullptr, &a) == QK_OK);
  REQUIRE(qk_state_create(2, pair, nullptr, &b) == QK_OK);
  double k = 0.0;
  CHECK(qk_kernel(a, b, &k) == QK_E_DIMENSION_MISMATCH);
  qk_state_destroy(a);
  qk_state_destroy(b);

  qk_mub* mub = nullptr;
  CHECK(qk_mub_create(6, &mub) == QK_E_UNSUPPORTED_DIMENSION);
  CHECK(std::string(qk_status_name(QK_E_UNSUPPORTED_DIMENSION)) == "unsupported_dimension");
}

TEST_CASE("rng handles: determinism and splitting") {
  qk_rng* a = nullptr;
  qk_rng* b = nullptr;
  REQUIRE(qk_rng_create(42, &a) == QK_OK);
  REQUIRE(qk_rng_create(42, &b) == QK_OK);
  qk_state* sa = nullptr;
  qk_state* sb = nullptr;
  REQUIRE(qk_state_haar(3, a, &sa) == QK_OK);
  REQUIRE(qk_state_haar(3, b, &sb) == QK_OK);
  double ra[3], ia[3], rb[3], ib[3];
  qk_state_amplitudes(sa, ra, ia);
  qk_state_amplitudes(sb, rb, ib);
  for (int k = 0; k < 3; ++k) {
    CHECK(ra[k] == rb[k]);
    CHECK(ia[k] == ib[k]);
  }
  qk_rng* child = nullptr;
  REQUIRE(qk_rng_split(a, 3, &child) == QK_OK);
  qk_state* sc = nullptr;
  REQUIRE(qk_state_haar(3, child, &sc) == QK_OK);
  qk_state_destroy(sa);
  qk_state_destroy(sb);
  qk_state_destroy(sc);
  qk_rng_destroy(a);
  qk_rng_destroy(b);
  qk_rng_destroy(child);
}

TEST_CASE("mub family and affinities through handles") {
  qk_mub* mub = nullptr;
  REQUIRE(qk_mub_create(3, &mub) == QK_OK);
  CHECK(qk_mub_size(mub) == 4);
  double dev = 1.0;
  REQUIRE(qk_mub_max_deviation(mub, &dev) == QK_OK);
  CHECK(dev < 1e-12);

  qk_basis* b0 = nullptr;
  REQUIRE(qk_mub_basis(mub, 0, &b0) == QK_OK);
  CHECK(qk_basis_dim(b0) == 3);
  qk_state* v = nullptr;
  REQUIRE(qk_basis_vector(b0, 1, &v) == QK_OK);
  double p[3];
  REQUIRE(qk_affinities(v, b0, p) == QK_OK);
  CHECK(std::abs(p[1] - 1.0) < 1e-12);
  CHECK(qk_mub_basis(mub, 9, &b0) == QK_E_OUT_OF_RANGE);

  qk_state_destroy(v);
  qk_basis_destroy(b0);
  qk_mub_destroy(mub);
}

TEST_CASE("capacity surface: bit budget and table bytes") {
  qk_bit_budget budget;
  REQUIRE(qk_bit_budget_compute(3, 3, &budget) == QK_OK);
  CHECK(std::abs(budget.combinatorial_bits - 2.0 * std::log2(3.0)) < 1e-12);
  CHECK(budget.kolmogorov_bits == 4);
  CHECK(qk_bit_budget_compute(1, 2, &budget) == QK_E_INVALID_ARGUMENT);

  const int ns[4] = {2, 4, 8, 16};
  char* csv = nullptr;
  REQUIRE(qk_capacity_table_csv(ns, 4, &csv) == QK_OK);
  CHECK(std::string(csv) ==
        "N,available,kolm_M2,comb_M3,feasible\n"
        "2,1.0,1,2,true\n"
        "4,2.0,3,4,false\n"
        "8,3.0,7,6,false\n"
        "16,4.0,15,8,false\n");
  qk_string_free(csv);
}

TEST_CASE("suite runner: stats, determinism, unknown suite, failure hook") {
  qk_run_options options{};
  options.seed = 7;
  char* a = nullptr;
  char* b = nullptr;
  qk_run_stats stats{};
  REQUIRE(qk_run_suite("capacity", &options, &a, &stats) == QK_OK);
  CHECK(stats.checks_run > 10);
  CHECK(stats.checks_failed == 0);
  REQUIRE(qk_run_suite("capacity", &options, &b, nullptr) == QK_OK);
  CHECK(std::string(a) == std::string(b));
  qk_string_free(a);
  qk_string_free(b);

  char* c = nullptr;
  CHECK(qk_run_suite("bogus", &options, &c, nullptr) == QK_E_UNKNOWN_SUITE);

  options.inject_failure = 1;
  REQUIRE(qk_run_suite("capacity", &options, &c, &stats) == QK_OK);
  CHECK(stats.checks_failed == 1);
  qk_string_free(c);
}

TEST_CASE("qutrit walkthrough text and json") {
  char* text = nullptr;
  char* json = nullptr;
  qk_run_stats stats{};
  REQUIRE(qk_qutrit_walkthrough(&text, &json, &stats) == QK_OK);
  CHECK(stats.checks_failed == 0);
  CHECK(std::string(text).find("3.1699") != std::string::npos);
  CHECK(std::string(json).find("\"mub_count\": 4") != std::string::npos);
  qk_string_free(text);
  qk_string_free(json);
}
