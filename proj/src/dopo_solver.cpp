#include "xydopo/dopo_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "xydopo/detail/cos_quadratic.hpp"
#include "xydopo/errors.hpp"
#include "xydopo/quadrature.hpp"

namespace xydopo {

namespace {

constexpr double kStabilityTol = 1e-10;

// Omega_k^2 as a polynomial in cos k.
detail::CosQuadratic omega_quadratic(const DopoParams& p) {
  return {4.0 * p.j() * p.j(), -4.0 * p.delta() * p.j(),
          p.delta() * p.delta() - p.d2()};
}

void require_discrete(const MomentumGrid& g) {
  if (g.is_continuum()) {
    throw InvalidArgument("operation needs a discrete momentum grid");
  }
}

// Momenta in [0, pi] where eps_k^2 < d2, as [k_lo, k_hi].
std::vector<double> unstable_window(const DopoParams& p) {
  const double drive = std::sqrt(std::max(0.0, p.d2()));
  if (p.j() == 0.0) return {0.0, std::numbers::pi};
  double c_lo = (p.delta() - drive) / (2.0 * p.j());
  double c_hi = (p.delta() + drive) / (2.0 * p.j());
  if (c_lo > c_hi) std::swap(c_lo, c_hi);
  c_lo = std::clamp(c_lo, -1.0, 1.0);
  c_hi = std::clamp(c_hi, -1.0, 1.0);
  return {std::acos(c_hi), std::acos(c_lo)};
}

}  // namespace

double dopo_epsilon(const DopoParams& p, double k) {
  return p.delta() - 2.0 * p.j() * std::cos(k);
}

double dopo_omega_squared(const DopoParams& p, double k) {
  const double eps = dopo_epsilon(p, k);
  return eps * eps - p.d2();
}

Spectrum dopo_spectrum(const DopoParams& p, const MomentumGrid& g) {
  require_discrete(g);
  Spectrum s;
  s.k.assign(g.points().begin(), g.points().end());
  s.value.reserve(s.k.size());
  for (double k : s.k) s.value.push_back(dopo_omega_squared(p, k));
  return s;
}

double dopo_zero_point_energy(const DopoParams& p, const MomentumGrid& g) {
  require_discrete(g);
  std::vector<double> unstable;
  double sum = 0.0;
  for (double k : g.points()) {
    const double w2 = dopo_omega_squared(p, k);
    if (w2 < -kStabilityTol) {
      unstable.push_back(k);
      continue;
    }
    sum += std::sqrt(std::max(0.0, w2)) - dopo_epsilon(p, k);
  }
  if (!unstable.empty()) {
    throw UnstablePhase(std::to_string(unstable.size()) +
                            " grid mode(s) have Omega_k^2 < 0",
                        std::move(unstable));
  }
  return 0.5 * sum;
}

double dopo_min_omega_squared(const DopoParams& p) {
  const auto m = omega_quadratic(p).min_on_unit();
  return std::min({dopo_omega_squared(p, 0.0),
                   dopo_omega_squared(p, std::numbers::pi),
                   dopo_omega_squared(p, std::acos(m.cos_k))});
}

QuadratureResult dopo_energy_density(const DopoParams& p,
                                     const QuadratureSpec& quad) {
  if (dopo_min_omega_squared(p) < -kStabilityTol) {
    auto window = unstable_window(p);
    const std::string what = "Omega_k^2 < 0 for k in [" +
                             std::to_string(window[0]) + ", " +
                             std::to_string(window[1]) + "]";
    throw UnstablePhase(what, std::move(window));
  }
  const auto breaks = omega_quadratic(p).singular_momenta();
  auto r = integrate(
      [&](double k) { return std::sqrt(std::max(0.0, dopo_omega_squared(p, k))); },
      0.0, std::numbers::pi, breaks, quad);
  const double scale = 1.0 / (2.0 * std::numbers::pi);
  return {r.value * scale - 0.5 * p.delta(), r.error * scale, r.nodes};
}

SqueezingParams dopo_squeezing(const DopoParams& p, double k) {
  if (p.d2() < 0.0) {
    throw NonphysicalDrive("squeezing needs d2 >= 0, got " +
                           std::to_string(p.d2()));
  }
  const double eps = std::abs(dopo_epsilon(p, k));
  const double drive = std::sqrt(p.d2());
  if (eps == 0.0 || drive >= eps) {
    throw NoSqueezedVacuum("mode k = " + std::to_string(k) +
                           " is at or beyond threshold (D >= |eps_k|)");
  }
  return {k, 0.5 * std::atanh(drive / eps), 0.5 * std::numbers::pi};
}

double dopo_critical_detuning(const DopoParams& p) {
  if (p.j() < 0.0) throw InvalidArgument("critical detuning needs j >= 0");
  return -2.0 * p.j() - p.drive();
}

std::array<double, 4> dopo_threshold_detunings(const DopoParams& p) {
  const double drive = p.drive();
  std::array<double, 4> t{-2.0 * p.j() - drive, -2.0 * p.j() + drive,
                          2.0 * p.j() - drive, 2.0 * p.j() + drive};
  std::sort(t.begin(), t.end());
  return t;
}

Phase dopo_classify_phase(const DopoParams& p, int scan, double tol) {
  if (scan < 1000) throw InvalidArgument("phase scan needs >= 1000 points");
  const double eps_tol = std::sqrt(tol);
  double min_w2 = dopo_omega_squared(p, 0.0);
  bool positive = false;
  bool negative = false;
  for (int i = 0; i < scan; ++i) {
    const double k = std::numbers::pi * i / (scan - 1);
    const double eps = dopo_epsilon(p, k);
    min_w2 = std::min(min_w2, eps * eps - p.d2());
    positive = positive || eps > eps_tol;
    negative = negative || eps < -eps_tol;
  }
  if (min_w2 < -tol || (positive && negative)) return Phase::Superradiant;
  if (min_w2 > tol) return Phase::Normal;
  return Phase::Critical;
}

}  // namespace xydopo
