/*
 * qklab — verification laboratory for finite-capacity quantum mechanics.
 *
 * C ABI over the C++ core: opaque handles, integer status codes, explicit
 * destroy functions. Every function returns QK_OK on success; on failure the
 * out-parameters are untouched and qk_last_error_message() carries a
 * human-readable detail string (thread-local).
 *
 * Complex data crosses the boundary as parallel double arrays (re, im).
 * Amplitude conventions: states are unit vectors with the global phase fixed
 * so the first amplitude of modulus > 1e-12 is real and non-negative.
 */

#ifndef QKLAB_H
#define QKLAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qk_status {
  QK_OK = 0,
  QK_E_DIMENSION_ZERO = 1,
  QK_E_DIMENSION_TOO_SMALL = 2,
  QK_E_DIMENSION_TOO_LARGE = 3,
  QK_E_DIMENSION_MISMATCH = 4,
  QK_E_ZERO_VECTOR = 5,
  QK_E_NOT_DENSITY_OPERATOR = 6,
  QK_E_INVALID_PERMUTATION = 7,
  QK_E_ORTHOGONAL_LINK = 8,
  QK_E_UNSUPPORTED_DIMENSION = 9,
  QK_E_BOUNDARY_SINGULARITY = 10,
  QK_E_OUT_OF_RANGE = 11,
  QK_E_OVERFLOW = 12,
  QK_E_NOT_UNBIASED = 13,
  QK_E_INFEASIBLE_DATA = 14,
  QK_E_UNKNOWN_SUITE = 15,
  QK_E_IO = 16,
  QK_E_INVALID_ARGUMENT = 17,
  QK_E_INTERNAL = 18
} qk_status;

typedef struct qk_state qk_state;
typedef struct qk_basis qk_basis;
typedef struct qk_mub qk_mub;
typedef struct qk_rng qk_rng;

/* ------------------------------------------------------------------ misc */

const char* qk_status_name(qk_status status);
const char* qk_last_error_message(void);
void qk_string_free(char* s);

/* ------------------------------------------------------------------- rng */

qk_status qk_rng_create(uint64_t seed, qk_rng** out);
void qk_rng_destroy(qk_rng* rng);
qk_status qk_rng_split(const qk_rng* rng, uint64_t stream, qk_rng** out);

/* ----------------------------------------------------------------- states */

qk_status qk_state_create(int dim, const double* re, const double* im, qk_state** out);
qk_status qk_state_haar(int dim, qk_rng* rng, qk_state** out);
void qk_state_destroy(qk_state* state);
int qk_state_dim(const qk_state* state);
qk_status qk_state_amplitudes(const qk_state* state, double* re, double* im);

qk_status qk_kernel(const qk_state* x, const qk_state* y, double* out);
qk_status qk_fidelity(const qk_state* x, const qk_state* y, double* out);

/* ----------------------------------------------------------------- bases */

qk_status qk_basis_computational(int dim, qk_basis** out);
qk_status qk_basis_fourier(int dim, qk_basis** out);
void qk_basis_destroy(qk_basis* basis);
int qk_basis_dim(const qk_basis* basis);
qk_status qk_basis_vector(const qk_basis* basis, int k, qk_state** out);

/* p must hold dim doubles; p_k = 1 - K(psi, b_k). */
qk_status qk_affinities(const qk_state* psi, const qk_basis* basis, double* p);

/* ------------------------------------------------------------------ mubs */

qk_status qk_mub_create(int dim, qk_mub** out);
void qk_mub_destroy(qk_mub* mub);
int qk_mub_size(const qk_mub* mub);
qk_status qk_mub_basis(const qk_mub* mub, int index, qk_basis** out);
qk_status qk_mub_max_deviation(const qk_mub* mub, double* out);

/* -------------------------------------------------------------- capacity */

typedef struct qk_bit_budget {
  int n;
  int m;
  double available_bits;
  double combinatorial_bits;
  long long kolmogorov_bits;
} qk_bit_budget;

qk_status qk_bit_budget_compute(int n, int m, qk_bit_budget* out);

/* CSV with header "N,available,kolm_M2,comb_M3,feasible" for the given
 * dimensions (count entries). The string is malloc'd; free with
 * qk_string_free. */
qk_status qk_capacity_table_csv(const int* ns, int count, char** out);

/* ---------------------------------------------------------------- suites */

typedef struct qk_run_options {
  uint64_t seed;
  int n;              /* 0 = suite default */
  int m;              /* 0 = suite default */
  int samples;        /* 0 = suite default */
  double alpha;       /* 0 = none */
  int inject_failure; /* non-zero appends one always-failing check */
  int format;         /* 0 = json, 1 = csv */
} qk_run_options;

typedef struct qk_run_stats {
  int checks_run;
  int checks_failed;
} qk_run_stats;

/* Suite names: kernel, dynamics, mub, born, capacity, compose, sampling,
 * all. Returns the serialized report (malloc'd) and fill-in stats. Identical
 * options produce byte-identical reports. */
qk_status qk_run_suite(const char* suite, const qk_run_options* options, char** report_out,
                       qk_run_stats* stats_out);

/* Text narrative and JSON record of the N = 3 walkthrough. Either output may
 * be NULL when not wanted. */
qk_status qk_qutrit_walkthrough(char** text_out, char** json_out, qk_run_stats* stats_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QKLAB_H */
