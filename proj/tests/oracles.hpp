#pragma once

// Independent reference computations for the unit tests. Nothing here calls
// the library: formulas are written in a different algebraic form and
// integrals use plain composite Simpson rules instead of Gauss-Legendre.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

inline constexpr double pi = std::numbers::pi;

// Composite Simpson rule with `intervals` (even) subintervals.
inline double simpson(const std::function<double(double)>& f, double a,
                      double b, int intervals) {
  const double h = (b - a) / intervals;
  double acc = f(a) + f(b);
  for (int i = 1; i < intervals; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return acc * h / 3.0;
}

// Simpson over [a, b] split at interior points (kinks or jumps of the
// integrand). Each piece is sampled just inside its ends so a jump takes its
// one-sided limit.
inline double simpson_split(const std::function<double(double)>& f, double a,
                            double b, std::vector<double> cuts,
                            int intervals = 20000) {
  std::sort(cuts.begin(), cuts.end());
  double acc = 0.0;
  double lo = a;
  cuts.push_back(b);
  for (double c : cuts) {
    if (c <= lo || c > b) continue;
    const double pad = cuts.size() > 1 ? 1e-13 * (c - lo) : 0.0;
    acc += simpson(f, lo + pad, c - pad, intervals);
    lo = c;
  }
  return acc;
}

// (E_k)^2 in its polynomial form 4(h^2 + Jd^2) + 8 Js h cos k + 16 jx jy cos^2 k.
inline double xy_e2_poly(double jx, double jy, double h, double k) {
  const double c = std::cos(k);
  const double jd = jx - jy;
  return 4.0 * (h * h + jd * jd) + 8.0 * (jx + jy) * h * c +
         16.0 * jx * jy * c * c;
}

inline double xy_e(double jx, double jy, double h, double k) {
  return std::sqrt(std::max(0.0, xy_e2_poly(jx, jy, h, k)));
}

// Omega_k^2 = delta^2 - d2 - 4 delta j cos k + 4 j^2 cos^2 k.
inline double dopo_w2_poly(double j, double delta, double d2, double k) {
  const double c = std::cos(k);
  return delta * delta - d2 - 4.0 * delta * j * c + 4.0 * j * j * c * c;
}

// Momenta in [0, pi] where the XY integrand has a kink (E_k = 0), isotropic
// case only; anisotropic integrands are smooth except exactly at h_c.
inline std::vector<double> iso_kinks(double j, double h) {
  if (j == 0.0 || std::abs(h) >= 2.0 * j) return {};
  return {std::acos(-h / (2.0 * j))};
}

// e_g = -(1/2pi) int_0^pi E_k dk by Simpson.
inline double xy_energy_density(double jx, double jy, double h,
                                int intervals = 20000) {
  std::vector<double> cuts;
  if (jx == jy) cuts = iso_kinks(jx, h);
  return -simpson_split([&](double k) { return xy_e(jx, jy, h, k); }, 0.0, pi,
                        cuts, intervals) /
         (2.0 * pi);
}

// m_z = -de/dh with the derivative taken under the integral:
// dE/dh = 2 A / |(A, B)| with A = h + Js cos k, B = Jd sin k.
inline double xy_magnetization(double jx, double jy, double h,
                               int intervals = 20000) {
  auto f = [&](double k) {
    const double a = h + (jx + jy) * std::cos(k);
    const double r = std::hypot(a, (jx - jy) * std::sin(k));
    return r == 0.0 ? 0.0 : 2.0 * a / r;
  };
  std::vector<double> cuts;
  if (jx == jy) cuts = iso_kinks(jx, h);
  return simpson_split(f, 0.0, pi, cuts, intervals) / (2.0 * pi);
}

// Some k in [0, pi] has Omega_k^2 < 0, from the range of eps_k.
inline bool dopo_unstable(double j, double delta, double d2) {
  const double lo = delta - 2.0 * std::abs(j);
  const double hi = delta + 2.0 * std::abs(j);
  const double min_abs = (lo <= 0.0 && hi >= 0.0)
                             ? 0.0
                             : std::min(std::abs(lo), std::abs(hi));
  return min_abs * min_abs < d2;
}

// Brute-force spin Hamiltonian from Kronecker products of complex Pauli
// matrices; site 0 is the least significant factor and sz|1> = +|1>.
inline Eigen::MatrixXcd spin_hamiltonian(double jx, double jy, double h,
                                         int n) {
  using M = Eigen::MatrixXcd;
  using C = std::complex<double>;
  M sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0, 1, 1, 0;
  sy << 0, C(0, 1), C(0, -1), 0;  // basis order |down>, |up>
  sz << -1, 0, 0, 1;
  auto site_op = [n](const M& op, int site) {
    M out = M::Identity(1, 1);
    for (int s = n - 1; s >= 0; --s) {
      const M f = (s == site) ? op : M::Identity(2, 2);
      M next(out.rows() * 2, out.cols() * 2);
      for (int r = 0; r < out.rows(); ++r) {
        for (int c = 0; c < out.cols(); ++c) {
          next.block(r * 2, c * 2, 2, 2) = out(r, c) * f;
        }
      }
      out = next;
    }
    return out;
  };
  const long dim = 1L << n;
  M hmat = M::Zero(dim, dim);
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    hmat -= jx * site_op(sx, i) * site_op(sx, j);
    hmat -= jy * site_op(sy, i) * site_op(sy, j);
    hmat -= h * site_op(sz, i);
  }
  return hmat;
}

inline double brute_ground_energy(double jx, double jy, double h, int n) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
      spin_hamiltonian(jx, jy, h, n), Eigen::EigenvaluesOnly);
  return es.eigenvalues()[0];
}

}  // namespace oracle
