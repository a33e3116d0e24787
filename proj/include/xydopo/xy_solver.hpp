#pragma once

#include <vector>

#include "xydopo/core_types.hpp"

namespace xydopo {

/// E_k = 2 sqrt([h + (jx + jy) cos k]^2 + [(jx - jy) sin k]^2).
double xy_dispersion(const XYParams& p, double k);

/// Dispersion on every point of a discrete grid.
Spectrum xy_spectrum(const XYParams& p, const MomentumGrid& g);

/// Total (not per-site) ground energy -1/2 sum_k E_k on a discrete grid.
double xy_ground_energy_finite(const XYParams& p, const MomentumGrid& g);

/// Thermodynamic energy per site, -(1/2pi) int_0^pi E_k dk.
QuadratureResult xy_energy_density(const XYParams& p,
                                   const QuadratureSpec& quad = {});

/// A finite-difference derivative of e_g with respect to h.
struct FieldDerivative {
  double value = 0.0;
  /// The stencil [h - dh, h + dh] contains a critical field in its interior.
  bool straddles_critical = false;
};

/// m_z = -d e_g / dh by central difference.
FieldDerivative xy_magnetization(const XYParams& p, const QuadratureSpec& quad,
                                 double dh = 1e-3);

/// chi = -d^2 e_g / dh^2 by central second difference. Requires
/// quad.tol <= dh^2 * 1e-3, otherwise NumericalError.
FieldDerivative xy_susceptibility(const XYParams& p, const QuadratureSpec& quad,
                                  double dh = 1e-3);

enum class ModelCase { Isotropic, Anisotropic, TFI };

struct CriticalPoint {
  double field;
  double k_star;
};

struct CriticalFieldSet {
  ModelCase model_case;
  std::vector<CriticalPoint> values;  // ascending in field
};

/// Fields at which the gap closes. DegenerateModel when jx = jy = 0.
CriticalFieldSet xy_critical_fields(const XYParams& p);

/// Ordered / Paramagnetic / Critical (|h| = jx + jy within 1e-12).
/// Negative couplings raise UnsupportedParameter.
Phase xy_phase(const XYParams& p);

/// Exact min_k E_k over the Brillouin zone.
double xy_gap(const XYParams& p);

}  // namespace xydopo
