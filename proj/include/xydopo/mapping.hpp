#pragma once

#include <optional>
#include <string>

#include "xydopo/core_types.hpp"

namespace xydopo {

/// DOPO ring whose squared spectrum equals that of the source XY chain.
struct MappingResult {
  DopoParams dopo;
  bool physical;  // dopo.d2() >= 0
  XYParams source;
};

/// j = 2 sqrt(jx jy), delta = -h (jx + jy) / sqrt(jx jy),
/// d2 = (jx - jy)^2 (h^2 / (jx jy) - 4).
/// SingularMap when jx * jy == 0, InvalidArgument when jx * jy < 0.
MappingResult map_xy_to_dopo(const XYParams& p);

/// Inverse at a caller-chosen field h. Returns (jx, jy) with jx >= jy >= 0,
/// or nullopt when no real solution reproduces all three DOPO parameters to
/// within 1e-9.
std::optional<XYParams> map_dopo_to_xy(const DopoParams& d, double h);

/// h (jx + jy) / (2 sqrt(jx jy)): the offset in e_g^D = -e_g^XY + shift.
double energy_shift(const XYParams& p);

/// max_k |(E_k^XY)^2 - Omega_k^2| over a discrete grid, with the DOPO side
/// taken from map_xy_to_dopo(p).
double verify_spectral_match(const XYParams& p, const MomentumGrid& g);

struct EnergyDensityComparison {
  QuadratureResult e_xy;
  std::optional<QuadratureResult> e_dopo;
  /// e_dopo - (-e_xy + shift); absent when the DOPO side is unstable.
  std::optional<double> residual;
  /// Set when the DOPO quadrature refused an unstable spectrum.
  std::optional<std::string> dopo_unstable;
};

/// Both sides of the energy-shift identity, each by its own quadrature.
EnergyDensityComparison map_energy_density(const XYParams& p,
                                           const QuadratureSpec& quad = {});

}  // namespace xydopo
