#pragma once

#include <array>

#include "xydopo/core_types.hpp"

namespace xydopo {

struct SqueezingParams {
  double k;
  double r;      // squeezing magnitude
  double theta;  // squeezing phase, radians
};

/// eps_k = delta - 2 j cos k.
double dopo_epsilon(const DopoParams& p, double k);

/// Omega_k^2 = eps_k^2 - d2. Negative means an unstable mode.
double dopo_omega_squared(const DopoParams& p, double k);

/// Signed Omega_k^2 on every point of a discrete grid.
Spectrum dopo_spectrum(const DopoParams& p, const MomentumGrid& g);

/// Zero-point energy 1/2 sum_k (Omega_k - eps_k). UnstablePhase carries the
/// grid momenta with Omega_k^2 < 0.
double dopo_zero_point_energy(const DopoParams& p, const MomentumGrid& g);

/// Thermodynamic zero-point energy per site,
///   (1/2pi) int_0^pi Omega_k dk - delta/2.
/// UnstablePhase carries the endpoints of the unstable window in [0, pi].
QuadratureResult dopo_energy_density(const DopoParams& p,
                                     const QuadratureSpec& quad = {});

/// Bogoliubov parameters of a stable mode. The drive phase is taken as 0, so
/// theta = pi/2; r = artanh(D / |eps_k|) / 2.
SqueezingParams dopo_squeezing(const DopoParams& p, double k);

/// Threshold -2j - D reached first when |delta| shrinks from the normal phase
/// on the delta < 0 side. Needs d2 >= 0 and j >= 0.
double dopo_critical_detuning(const DopoParams& p);

/// All algebraic thresholds {-2j - D, -2j + D, 2j - D, 2j + D}, ascending.
std::array<double, 4> dopo_threshold_detunings(const DopoParams& p);

/// Classify by scanning `scan` evenly spaced momenta on [0, pi]:
///  - Superradiant when some Omega_k^2 < -tol, or eps_k takes both signs
///    beyond tol (a mode crosses zero frequency);
///  - Normal when min Omega_k^2 > tol and eps_k keeps one sign;
///  - Critical otherwise.
/// scan must be at least 1000.
Phase dopo_classify_phase(const DopoParams& p, int scan = 4096,
                          double tol = 1e-10);

/// Exact min_k Omega_k^2 over the Brillouin zone.
double dopo_min_omega_squared(const DopoParams& p);

}  // namespace xydopo
