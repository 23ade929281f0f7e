#pragma once

#include <array>
#include <vector>

#include "state.hpp"

namespace qklab {

// Cyclic shift P with P e_k = e_{k+1 mod N}; P^N = I and no smaller power
// returns to the identity.
struct CyclicGenerator {
  Unitary permutation;
  int dim() const { return permutation.dim(); }
};

CyclicGenerator cyclic_generator(int dim);

// Eigenbasis of the cyclic shift: f_k has components conj(w)^{jk}/sqrt(N)
// with w = exp(2 pi i / N), so that P f_k = w^k f_k holds exactly in that
// orientation.
Basis fourier_eigenbasis(int dim);

// Per-eigenvector kernel profile of a permutation matrix against the
// computational basis. For an eigenvector supported on an orbit of size n,
// the kernel against in-orbit basis states is 1 - 1/n and 1 elsewhere; the
// profile is uniform exactly when sigma is a single N-cycle.
struct PermutationEigenProfile {
  struct Entry {
    int orbit_index = 0;
    int orbit_size = 0;
    double in_orbit_kernel = 0.0;
  };
  std::vector<Entry> eigenvectors;
  RealMat kernel_table;  // kernel_table(i, j) = K(b_i, f_j)
  bool uniform = false;
};

PermutationEigenProfile permutation_eigen_analysis(const std::vector<int>& sigma);

// Band-limited interpolation of the cyclic shift: U(t) applies phase
// exp(2 pi i k t / T) to eigenvector f_k, so U(n T / N) = P^n, U(T) = I and
// the one-parameter group law holds.
class EvolutionFamily {
 public:
  static EvolutionFamily interpolate(const CyclicGenerator& gen, double period);

  int dim() const { return static_cast<int>(eigenvectors_.rows()); }
  double period() const { return period_; }
  const Mat& eigenvector_matrix() const { return eigenvectors_; }
  Basis eigenbasis() const { return Basis::from_unitary_columns(eigenvectors_); }
  Unitary evaluate(double t) const;

 private:
  EvolutionFamily(Mat eigenvectors, double period)
      : eigenvectors_(std::move(eigenvectors)), period_(period) {}
  Mat eigenvectors_;
  double period_;
};

struct Hamiltonian {
  Mat entries;  // Hermitian, hbar = 1
  int dim() const { return static_cast<int>(entries.rows()); }
};

// Self-adjoint generator of the interpolated family: exp(-iHt) reproduces
// evaluate(t) for all t, and exp(-iHT) = I at the recurrence period.
Hamiltonian hamiltonian_from_cycle(const EvolutionFamily& family);

// exp(-iHt) for Hermitian H, computed spectrally.
Unitary evolve(const Hamiltonian& h, double t);

// Scan of real matrices ((a,b),(b,a)) for orthogonality a^2+b^2=1, ab=0 over
// an axis-aligned grid on [-1,1]^2. Solutions cluster at I, -I, S, -S and
// nowhere else; grid artifacts within distance 2/resolution are merged.
struct ObstructionScan {
  int resolution = 0;
  std::vector<std::array<double, 2>> cluster_centers;  // (a, b)
  int cluster_count() const { return static_cast<int>(cluster_centers.size()); }
  double worst_center_error = 0.0;  // distance to nearest exact solution
};

ObstructionScan n2_obstruction_scan(int resolution);

// The complex companion family U(theta) = cos(theta) I + i sin(theta) S:
// unitary, commutes with the swap, and non-scalar for theta outside {0, pi}.
Mat n2_complex_family(double theta);

// Pancharatnam/Bargmann phase of a closed loop: arg of the product of
// consecutive overlaps, in (-pi, pi]. Gauge-invariant by construction.
double bargmann_holonomy(const std::vector<PureState>& loop);

}  // namespace qklab
