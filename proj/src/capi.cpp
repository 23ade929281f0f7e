#include "qklab/qklab.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "capacity.hpp"
#include "dynamics.hpp"
#include "mub.hpp"
#include "report.hpp"
#include "rng.hpp"
#include "sampling.hpp"
#include "state.hpp"
#include "suites.hpp"

namespace {

thread_local std::string g_last_error;

qk_status map_code(qklab::Errc code) {
  using qklab::Errc;
  switch (code) {
    case Errc::DimensionZero: return QK_E_DIMENSION_ZERO;
    case Errc::DimensionTooSmall: return QK_E_DIMENSION_TOO_SMALL;
    case Errc::DimensionTooLarge: return QK_E_DIMENSION_TOO_LARGE;
    case Errc::DimensionMismatch: return QK_E_DIMENSION_MISMATCH;
    case Errc::ZeroVector: return QK_E_ZERO_VECTOR;
    case Errc::NotDensityOperator: return QK_E_NOT_DENSITY_OPERATOR;
    case Errc::InvalidPermutation: return QK_E_INVALID_PERMUTATION;
    case Errc::OrthogonalLink: return QK_E_ORTHOGONAL_LINK;
    case Errc::UnsupportedDimension: return QK_E_UNSUPPORTED_DIMENSION;
    case Errc::BoundarySingularity: return QK_E_BOUNDARY_SINGULARITY;
    case Errc::OutOfRange: return QK_E_OUT_OF_RANGE;
    case Errc::Overflow: return QK_E_OVERFLOW;
    case Errc::NotUnbiased: return QK_E_NOT_UNBIASED;
    case Errc::InfeasibleData: return QK_E_INFEASIBLE_DATA;
    case Errc::UnknownSuite: return QK_E_UNKNOWN_SUITE;
    case Errc::IoError: return QK_E_IO;
    case Errc::InvalidArgument: return QK_E_INVALID_ARGUMENT;
  }
  return QK_E_INTERNAL;
}

template <typename Fn>
qk_status guarded(Fn&& fn) {
  try {
    fn();
    return QK_OK;
  } catch (const qklab::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QK_E_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return QK_E_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

struct qk_state {
  qklab::PureState value;
};
struct qk_basis {
  qklab::Basis value;
};
struct qk_mub {
  qklab::MubFamily value;
};
struct qk_rng {
  qklab::RandomSource value;
};

extern "C" {

const char* qk_status_name(qk_status status) {
  switch (status) {
    case QK_OK: return "ok";
    case QK_E_DIMENSION_ZERO: return "dimension_zero";
    case QK_E_DIMENSION_TOO_SMALL: return "dimension_too_small";
    case QK_E_DIMENSION_TOO_LARGE: return "dimension_too_large";
    case QK_E_DIMENSION_MISMATCH: return "dimension_mismatch";
    case QK_E_ZERO_VECTOR: return "zero_vector";
    case QK_E_NOT_DENSITY_OPERATOR: return "not_density_operator";
    case QK_E_INVALID_PERMUTATION: return "invalid_permutation";
    case QK_E_ORTHOGONAL_LINK: return "orthogonal_link";
    case QK_E_UNSUPPORTED_DIMENSION: return "unsupported_dimension";
    case QK_E_BOUNDARY_SINGULARITY: return "boundary_singularity";
    case QK_E_OUT_OF_RANGE: return "out_of_range";
    case QK_E_OVERFLOW: return "overflow";
    case QK_E_NOT_UNBIASED: return "not_unbiased";
    case QK_E_INFEASIBLE_DATA: return "infeasible_data";
    case QK_E_UNKNOWN_SUITE: return "unknown_suite";
    case QK_E_IO: return "io_error";
    case QK_E_INVALID_ARGUMENT: return "invalid_argument";
    case QK_E_INTERNAL: return "internal_error";
  }
  return "unknown_status";
}

const char* qk_last_error_message(void) { return g_last_error.c_str(); }

void qk_string_free(char* s) { std::free(s); }

qk_status qk_rng_create(uint64_t seed, qk_rng** out) {
  if (out == nullptr) return QK_E_INVALID_ARGUMENT;
  return guarded([&] { *out = new qk_rng{qklab::RandomSource(seed)}; });
}

void qk_rng_destroy(qk_rng* rng) { delete rng; }

qk_status qk_rng_split(const qk_rng* rng, uint64_t stream, qk_rng** out) {
  if (rng == nullptr || out == nullptr) return QK_E_INVALID_ARGUMENT;
  return guarded([&] { *out = new qk_rng{rng->value.split(stream)}; });
}

qk_status qk_state_create(int dim, const double* re, const double* im, qk_state** out) {
  if (re == nullptr || out == nullptr) return QK_E_INVALID_ARGUMENT;
  return guarded([&] {
    qklab::Vec c(dim);
    for (int k = 0; k < dim; ++k) c[k] = qklab::Complex(re[k], im != nullptr ? im[k] : 0.0);
    *out = new qk_state{qklab::PureState::from_coefficients(c)};
  });
}

qk_status qk_state_haar(int dim, qk_rng* rng, qk_state** out) {
  if (rng == nullptr || out == nullptr) return QK_E_INVALID_ARGUMENT;
  return guarded([&] { *out = new qk_state{qklab::haar_random_state(dim, rng->value)}; });
}

void qk_state_destroy(qk_state* state) { delete state; }

int qk_state_dim(const qk_state* state) { return state != nullptr ? state->value.dim() : 0; }

qk_status qk_state_amplitudes(const qk_state* state, double* re, double* im) {
  if (state == nullptr || re == nullptr || im == nullptr) return QK_E_INVALID_ARGUMENT;
  for (int k = 0; k < state->value.dim(); ++k) {
    re[k] = state->value.amplitude(k).real();
    im[k] = state->value.amplitude(k).imag();
  }
  return QK_OK;
}

qk_status qk_kernel(const qk_state* x, const qk_state* y, double* out) {
  if (x == nullptr || y == nullptr || out == nullptr) return QK_E_INVALID_ARGUMENT;
  return guarded([&] { *out = qklab::kernel(x->value, y->value); });
}

qk_status qk_fidelity(const qk_state* x, const qk_state* y, double* out) {
  if (x == nullptr || y == nullptr || out == nullptr) return QK_E_INVALID_ARGUMENT;
  return guarded([&] { *out = qklab::fidelity(x->value, y->value); });
}

qk_status qk_basis_computational(int dim, qk_basis** out) {
  if (out == nullptr) return QK_E_INVALID_ARGUMENT;
  return guarded([&] { *out = new qk_basis{qklab::Basis::computational(dim)}; });
}

qk_status qk_basis_fourier(int dim, qk_basis** out) {
  if (out == nullptr) return QK_E_INVALID_ARGUMENT;
  return guarded([&] { *out = new qk_basis{qklab::fourier_eigenbasis(dim)}; });
}

void qk_basis_destroy(qk_basis* basis) { delete basis; }

int qk_basis_dim(const qk_basis* basis) { return basis != nullptr ? basis->value.dim() : 0; }

qk_status qk_basis_vector(const qk_basis* basis, int k, qk_state** out) {
  if (basis == nullptr || out == nullptr) return QK_E_INVALID_ARGUMENT;
  if (k < 0 || k >= basis->value.dim()) return QK_E_OUT_OF_RANGE;
  return guarded([&] { *out = new qk_state{basis->value.vector(k)}; });
}

qk_status qk_affinities(const qk_state* psi, const qk_basis* basis, double* p) {
  if (psi == nullptr || basis == nullptr || p == nullptr) return QK_E_INVALID_ARGUMENT;
  return guarded([&] {
    const qklab::RealVec values = qklab::affinities(psi->value, basis->value);
    for (int k = 0; k < basis->value.dim(); ++k) p[k] = values[k];
  });
}

qk_status qk_mub_create(int dim, qk_mub** out) {
  if (out == nullptr) return QK_E_INVALID_ARGUMENT;
  return guarded([&] { *out = new qk_mub{qklab::mub_family(dim)}; });
}

void qk_mub_destroy(qk_mub* mub) { delete mub; }

int qk_mub_size(const qk_mub* mub) { return mub != nullptr ? mub->value.size() : 0; }

qk_status qk_mub_basis(const qk_mub* mub, int index, qk_basis** out) {
  if (mub == nullptr || out == nullptr) return QK_E_INVALID_ARGUMENT;
  if (index < 0 || index >= mub->value.size()) return QK_E_OUT_OF_RANGE;
  return guarded(
      [&] { *out = new qk_basis{mub->value.bases[static_cast<std::size_t>(index)]}; });
}

qk_status qk_mub_max_deviation(const qk_mub* mub, double* out) {
  if (mub == nullptr || out == nullptr) return QK_E_INVALID_ARGUMENT;
  return guarded([&] { *out = qklab::verify_unbiased(mub->value); });
}

qk_status qk_bit_budget_compute(int n, int m, qk_bit_budget* out) {
  if (out == nullptr) return QK_E_INVALID_ARGUMENT;
  return guarded([&] {
    const qklab::BitBudget b = qklab::bit_budget(n, m);
    out->n = b.n;
    out->m = b.m;
    out->available_bits = b.available_bits;
    out->combinatorial_bits = b.combinatorial_bits;
    out->kolmogorov_bits = b.kolmogorov_bits;
  });
}

qk_status qk_capacity_table_csv(const int* ns, int count, char** out) {
  if (ns == nullptr || count < 1 || out == nullptr) return QK_E_INVALID_ARGUMENT;
  return guarded([&] {
    const std::vector<int> dims(ns, ns + count);
    const std::string csv = qklab::deficit_table_csv(qklab::deficit_table(dims));
    *out = dup_string(csv);
    if (*out == nullptr) qklab::raise(qklab::Errc::IoError, "allocation failed");
  });
}

qk_status qk_run_suite(const char* suite, const qk_run_options* options, char** report_out,
                       qk_run_stats* stats_out) {
  if (suite == nullptr || options == nullptr || report_out == nullptr)
    return QK_E_INVALID_ARGUMENT;
  return guarded([&] {
    qklab::RunManifest manifest;
    manifest.seed = options->seed;
    manifest.n = options->n;
    manifest.m = options->m;
    manifest.samples = options->samples;
    manifest.alpha = options->alpha;
    manifest.inject_failure = options->inject_failure != 0;
    const auto reports = qklab::run_suite(suite, manifest);

    const std::string text = options->format == 1 ? qklab::reports_to_csv(reports)
                                                  : qklab::reports_to_json(reports);
    *report_out = dup_string(text);
    if (*report_out == nullptr) qklab::raise(qklab::Errc::IoError, "allocation failed");
    if (stats_out != nullptr) {
      stats_out->checks_run = static_cast<int>(reports.size());
      stats_out->checks_failed = 0;
      for (const auto& r : reports)
        if (!r.pass) ++stats_out->checks_failed;
    }
  });
}

qk_status qk_qutrit_walkthrough(char** text_out, char** json_out, qk_run_stats* stats_out) {
  return guarded([&] {
    const qklab::QutritWalkthrough w = qklab::qutrit_walkthrough();
    if (text_out != nullptr) {
      *text_out = dup_string(w.text);
      if (*text_out == nullptr) qklab::raise(qklab::Errc::IoError, "allocation failed");
    }
    if (json_out != nullptr) {
      *json_out = dup_string(w.json);
      if (*json_out == nullptr) qklab::raise(qklab::Errc::IoError, "allocation failed");
    }
    if (stats_out != nullptr) {
      stats_out->checks_run = static_cast<int>(w.checks.size());
      stats_out->checks_failed = 0;
      for (const auto& chk : w.checks)
        if (!chk.pass) ++stats_out->checks_failed;
    }
  });
}

}  // extern "C"
