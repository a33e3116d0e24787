#include "xydopo/mapping.hpp"

#include <algorithm>
#include <cmath>

#include "xydopo/dopo_solver.hpp"
#include "xydopo/errors.hpp"
#include "xydopo/xy_solver.hpp"

namespace xydopo {

namespace {

constexpr double kInverseResidual = 1e-9;

double checked_root_product(const XYParams& p) {
  const double prod = p.jx() * p.jy();
  if (prod == 0.0) {
    throw SingularMap(
        "XY -> DOPO map needs jx * jy != 0; approach the Ising limit with a "
        "small jy instead");
  }
  if (prod < 0.0) {
    throw InvalidArgument("XY -> DOPO map needs jx * jy > 0");
  }
  return std::sqrt(prod);
}

bool close(double a, double b) {
  return std::abs(a - b) <= kInverseResidual * std::max(1.0, std::abs(b));
}

}  // namespace

MappingResult map_xy_to_dopo(const XYParams& p) {
  const double root = checked_root_product(p);
  const double jd = p.jd();
  const double ratio = p.h() / root;
  DopoParams d{2.0 * root, -p.h() * p.js() / root,
               jd * jd * (ratio * ratio - 4.0)};
  return {d, d.physical(), p};
}

std::optional<XYParams> map_dopo_to_xy(const DopoParams& d, double h) {
  if (!(d.j() > 0.0)) throw InvalidArgument("inverse map needs j > 0");
  if (h == 0.0 || !std::isfinite(h)) return std::nullopt;

  const double product = 0.25 * d.j() * d.j();
  const double sum = -d.delta() * (0.5 * d.j()) / h;
  double disc = sum * sum - 4.0 * product;
  if (disc < 0.0) {
    // Tolerate rounding on the isotropic line, reject real gaps.
    if (disc < -kInverseResidual * std::max(1.0, sum * sum)) return std::nullopt;
    disc = 0.0;
  }
  const double spread = std::sqrt(disc);
  const double jx = 0.5 * (sum + spread);
  const double jy = 0.5 * (sum - spread);
  if (jy <= 0.0) return std::nullopt;

  const XYParams candidate{jx, jy, h};
  const auto forward = map_xy_to_dopo(candidate).dopo;
  if (!close(forward.j(), d.j()) || !close(forward.delta(), d.delta()) ||
      !close(forward.d2(), d.d2())) {
    return std::nullopt;
  }
  return candidate;
}

double energy_shift(const XYParams& p) {
  return p.h() * p.js() / (2.0 * checked_root_product(p));
}

double verify_spectral_match(const XYParams& p, const MomentumGrid& g) {
  if (g.is_continuum()) {
    throw InvalidArgument("spectral match needs a discrete momentum grid");
  }
  const auto mapped = map_xy_to_dopo(p).dopo;
  double worst = 0.0;
  for (double k : g.points()) {
    const double e = xy_dispersion(p, k);
    worst = std::max(worst, std::abs(e * e - dopo_omega_squared(mapped, k)));
  }
  return worst;
}

EnergyDensityComparison map_energy_density(const XYParams& p,
                                           const QuadratureSpec& quad) {
  EnergyDensityComparison out{xy_energy_density(p, quad), {}, {}, {}};
  const auto mapped = map_xy_to_dopo(p).dopo;
  try {
    out.e_dopo = dopo_energy_density(mapped, quad);
  } catch (const UnstablePhase& e) {
    out.dopo_unstable = e.what();
    return out;
  }
  out.residual = out.e_dopo->value - (-out.e_xy.value + energy_shift(p));
  return out;
}

}  // namespace xydopo
