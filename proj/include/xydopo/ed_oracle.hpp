#pragma once

#include <Eigen/Dense>
#include <optional>
#include <span>

#include "xydopo/core_types.hpp"

namespace xydopo {

// Brute-force exact diagonalization of the periodic XY ring in the sigma^z
// product basis. Bit i of a basis index is 1 when spin i points up
// (sigma^z_i = +1). Every matrix element is real: sx sx and sy sy both flip
// the two spins of a bond, with amplitude -(jx - jy) when the spins are
// parallel and -(jx + jy) when antiparallel.
//
// Memory: the dense path stores two parity blocks of 2^(n-1) x 2^(n-1)
// doubles plus their eigenvectors, about 4 * 8 * 4^(n-1) bytes (~134 MB at
// n = 12). The full matrix from build_dense_hamiltonian is the same size on
// its own. Lanczos keeps every Krylov vector of 2^(n-1) doubles for full
// reorthogonalization: 4 MB each at n = 20, up to 500 of them.

enum class EdMethod { Dense, Lanczos };

/// Eigenvalue of prod_i sigma^z_i.
enum class Parity { Even, Odd };

struct EdResult {
  int n = 0;
  double ground_energy = 0.0;
  double ground_m_z = 0.0;  // <sum_i sz_i> / n, averaged over degeneracy
  Parity parity = Parity::Even;
  double gap = 0.0;  // second-lowest eigenvalue minus the lowest
};

inline constexpr int kDenseMaxSites = 12;
inline constexpr int kLanczosMaxSites = 20;

/// Full 2^n x 2^n Hamiltonian, n in [2, 12].
Eigen::MatrixXd build_dense_hamiltonian(const XYParams& p, int n);

/// out = H in for the full 2^n space, matrix-free.
void apply_hamiltonian(const XYParams& p, int n, std::span<const double> in,
                       std::span<double> out);

/// Ground state of the n-site ring. Dense needs n <= 12, Lanczos n <= 20;
/// InvalidArgument otherwise. Lanczos raises NumericalError after 500
/// iterations without convergence.
EdResult ed_ground_state(const XYParams& p, int n,
                         EdMethod method = EdMethod::Dense);

struct EdComparison {
  EdResult ed;
  double periodic_energy;      // -1/2 sum E_k, k = 2 pi m / n
  double antiperiodic_energy;  // -1/2 sum E_k, k = (2m+1) pi / n
  double periodic_residual;    // periodic_energy - ed.ground_energy
  double antiperiodic_residual;
  /// Sector whose sum reproduces ED within 1e-9 (antiperiodic wins ties).
  std::optional<Sector> matching_sector;
};

/// ED against the quasiparticle sum on both momentum sectors; n even.
EdComparison ed_vs_analytic(const XYParams& p, int n,
                            EdMethod method = EdMethod::Dense);

}  // namespace xydopo
