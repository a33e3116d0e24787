#include "xydopo/ed_oracle.hpp"

#include <lapacke.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "xydopo/errors.hpp"
#include "xydopo/xy_solver.hpp"

namespace xydopo {

namespace {

using State = std::uint32_t;

constexpr int kLanczosBudget = 500;
constexpr double kRitzTol = 1e-12;
constexpr double kDegeneracyTol = 1e-9;
constexpr int kDenseEigenpairs = 8;

int popcount(State s) { return std::popcount(s); }

// sum_i sz_i for a basis state.
int total_sz(State s, int n) { return 2 * popcount(s) - n; }

// Parity sector q is 0 when prod sz = +1 (even number of down spins) and
// holds 2^(n-1) states; bit 0 is fixed by the parity of the rest.
State sector_state(std::size_t idx, int n, int q) {
  const State rest = static_cast<State>(idx) << 1;
  const State bit0 = static_cast<State>((n + q + popcount(rest)) & 1);
  return rest | bit0;
}

std::size_t sector_index(State s) { return s >> 1; }

// Calls visit(target_state, amplitude) for every off-diagonal element in
// column `s`, and returns the diagonal element.
template <class Visit>
double for_each_element(const XYParams& p, int n, State s, Visit&& visit) {
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    const bool parallel = ((s >> i) & 1u) == ((s >> j) & 1u);
    const double amp = parallel ? -(p.jx() - p.jy()) : -(p.jx() + p.jy());
    if (amp != 0.0) visit(s ^ (State{1} << i) ^ (State{1} << j), amp);
  }
  return -p.h() * total_sz(s, n);
}

void check_sites(int n, int max_sites) {
  if (n < 2 || n > max_sites) {
    throw InvalidArgument("site count must lie in [2, " +
                          std::to_string(max_sites) + "], got " +
                          std::to_string(n));
  }
}

struct SectorSolution {
  std::vector<double> energies;        // ascending, as many as computed
  std::vector<Eigen::VectorXd> ground;  // eigenvectors of the lowest manifold
  int q;
};

double magnetization(const Eigen::VectorXd& v, int n, int q) {
  double acc = 0.0;
  for (Eigen::Index idx = 0; idx < v.size(); ++idx) {
    const State s = sector_state(static_cast<std::size_t>(idx), n, q);
    acc += v[idx] * v[idx] * total_sz(s, n);
  }
  return acc / (v.squaredNorm() * n);
}

Eigen::MatrixXd dense_block(const XYParams& p, int n, int q) {
  const std::size_t dim = std::size_t{1} << (n - 1);
  Eigen::MatrixXd block = Eigen::MatrixXd::Zero(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const State s = sector_state(col, n, q);
    block(col, col) += for_each_element(p, n, s, [&](State t, double amp) {
      block(sector_index(t), col) += amp;
    });
  }
  return block;
}

// Lowest kDenseEigenpairs eigenpairs of a parity block (LAPACK dsyevr).
SectorSolution solve_dense_sector(const XYParams& p, int n, int q) {
  Eigen::MatrixXd block = dense_block(p, n, q);
  const auto dim = static_cast<lapack_int>(block.rows());
  const lapack_int wanted = std::min<lapack_int>(dim, kDenseEigenpairs);
  lapack_int found = 0;
  Eigen::VectorXd vals(dim);
  Eigen::MatrixXd vecs(dim, wanted);
  std::vector<lapack_int> support(2 * static_cast<std::size_t>(wanted));
  const lapack_int info = LAPACKE_dsyevr(
      LAPACK_COL_MAJOR, 'V', 'I', 'L', dim, block.data(), dim, 0.0, 0.0, 1,
      wanted, 0.0, &found, vals.data(), vecs.data(), dim, support.data());
  if (info != 0 || found < 1) {
    throw NumericalError("dense eigensolver failed (info " +
                             std::to_string(info) + ")",
                         0.0);
  }
  SectorSolution out{{vals.data(), vals.data() + found}, {}, q};
  const double e0 = vals[0];
  const double tol = kDegeneracyTol * std::max(1.0, std::abs(e0));
  for (lapack_int i = 0; i < found && vals[i] - e0 <= tol; ++i) {
    out.ground.push_back(vecs.col(i));
  }
  return out;
}

void apply_sector(const XYParams& p, int n, int q, const Eigen::VectorXd& in,
                  Eigen::VectorXd& out) {
  out.setZero();
  for (Eigen::Index idx = 0; idx < in.size(); ++idx) {
    const double x = in[idx];
    const State s = sector_state(static_cast<std::size_t>(idx), n, q);
    out[idx] += x * for_each_element(p, n, s, [&](State t, double amp) {
      out[static_cast<Eigen::Index>(sector_index(t))] += amp * x;
    });
  }
}

// Lanczos with full reorthogonalization on one parity sector.
SectorSolution solve_lanczos_sector(const XYParams& p, int n, int q) {
  const Eigen::Index dim = Eigen::Index{1} << (n - 1);
  std::mt19937_64 rng(0x5eed0000u + static_cast<unsigned>(2 * n + q));
  std::uniform_real_distribution<double> uni(-1.0, 1.0);

  std::vector<Eigen::VectorXd> basis;
  Eigen::VectorXd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v[i] = uni(rng);
  v.normalize();
  basis.push_back(v);

  std::vector<double> alpha;
  std::vector<double> beta;
  Eigen::VectorXd w(dim);
  double prev0 = std::numeric_limits<double>::infinity();
  double prev1 = std::numeric_limits<double>::infinity();

  for (int it = 0; it < kLanczosBudget; ++it) {
    apply_sector(p, n, q, basis.back(), w);
    alpha.push_back(basis.back().dot(w));
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) w -= b.dot(w) * b;
    }
    const double b_next = w.norm();

    const auto m = static_cast<Eigen::Index>(alpha.size());
    Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), m);
    Eigen::VectorXd sub = Eigen::Map<Eigen::VectorXd>(beta.data(), m - 1);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
    tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    const auto& theta = tri.eigenvalues();
    const double t0 = theta[0];
    const double t1 = m > 1 ? theta[1] : std::numeric_limits<double>::infinity();

    const double scale = std::max(1.0, std::abs(t0));
    const double residual = b_next * std::abs(tri.eigenvectors()(m - 1, 0));
    const bool exhausted = b_next < 1e-12 * scale || m == dim;
    const bool settled = std::abs(t0 - prev0) < kRitzTol * scale &&
                         (m < 3 || std::abs(t1 - prev1) < kRitzTol * scale) &&
                         residual < 1e-8 * scale;
    if (exhausted || settled) {
      Eigen::VectorXd ground = Eigen::VectorXd::Zero(dim);
      for (Eigen::Index i = 0; i < m; ++i) {
        ground += tri.eigenvectors()(i, 0) * basis[static_cast<std::size_t>(i)];
      }
      ground.normalize();
      SectorSolution out{{t0}, {ground}, q};
      if (m > 1) out.energies.push_back(t1);
      return out;
    }
    prev0 = t0;
    prev1 = t1;
    beta.push_back(b_next);
    basis.push_back(w / b_next);
  }
  throw NumericalError("Lanczos did not converge in " +
                           std::to_string(kLanczosBudget) + " iterations",
                       std::abs(prev0));
}

EdResult combine(int n, const SectorSolution& even, const SectorSolution& odd) {
  std::vector<double> all = even.energies;
  all.insert(all.end(), odd.energies.begin(), odd.energies.end());
  std::sort(all.begin(), all.end());

  EdResult r;
  r.n = n;
  r.ground_energy = all.front();
  r.gap = all.size() > 1 ? all[1] - all[0] : 0.0;

  const double tol = kDegeneracyTol * std::max(1.0, std::abs(r.ground_energy));
  const bool even_low = even.energies.front() - r.ground_energy <= tol;
  const bool odd_low = odd.energies.front() - r.ground_energy <= tol;
  r.parity = even_low ? Parity::Even : Parity::Odd;

  double acc = 0.0;
  int count = 0;
  for (const auto* sec : {&even, &odd}) {
    if ((sec == &even && !even_low) || (sec == &odd && !odd_low)) continue;
    for (const auto& v : sec->ground) {
      acc += magnetization(v, n, sec->q);
      ++count;
    }
  }
  r.ground_m_z = acc / count;
  return r;
}

}  // namespace

Eigen::MatrixXd build_dense_hamiltonian(const XYParams& p, int n) {
  check_sites(n, kDenseMaxSites);
  const std::size_t dim = std::size_t{1} << n;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const auto s = static_cast<State>(col);
    h(col, col) += for_each_element(p, n, s, [&](State t, double amp) {
      h(t, col) += amp;
    });
  }
  return h;
}

void apply_hamiltonian(const XYParams& p, int n, std::span<const double> in,
                       std::span<double> out) {
  check_sites(n, kLanczosMaxSites);
  const std::size_t dim = std::size_t{1} << n;
  if (in.size() != dim || out.size() != dim) {
    throw InvalidArgument("vector length must be 2^n");
  }
  std::fill(out.begin(), out.end(), 0.0);
  for (std::size_t col = 0; col < dim; ++col) {
    const auto s = static_cast<State>(col);
    const double x = in[col];
    out[col] += x * for_each_element(p, n, s, [&](State t, double amp) {
      out[t] += amp * x;
    });
  }
}

EdResult ed_ground_state(const XYParams& p, int n, EdMethod method) {
  if (method == EdMethod::Dense) {
    check_sites(n, kDenseMaxSites);
    return combine(n, solve_dense_sector(p, n, 0), solve_dense_sector(p, n, 1));
  }
  check_sites(n, kLanczosMaxSites);
  return combine(n, solve_lanczos_sector(p, n, 0),
                 solve_lanczos_sector(p, n, 1));
}

EdComparison ed_vs_analytic(const XYParams& p, int n, EdMethod method) {
  const auto periodic = MomentumGrid::discrete(n, Sector::Periodic);
  const auto anti = MomentumGrid::discrete(n, Sector::Antiperiodic);
  EdComparison c{ed_ground_state(p, n, method),
                 xy_ground_energy_finite(p, periodic),
                 xy_ground_energy_finite(p, anti),
                 0.0,
                 0.0,
                 std::nullopt};
  c.periodic_residual = c.periodic_energy - c.ed.ground_energy;
  c.antiperiodic_residual = c.antiperiodic_energy - c.ed.ground_energy;
  const double tol = 1e-9 * std::max(1.0, std::abs(c.ed.ground_energy));
  if (std::abs(c.antiperiodic_residual) <= tol) {
    c.matching_sector = Sector::Antiperiodic;
  } else if (std::abs(c.periodic_residual) <= tol) {
    c.matching_sector = Sector::Periodic;
  }
  return c;
}

}  // namespace xydopo
