#include "xydopo/xy_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "xydopo/detail/cos_quadratic.hpp"
#include "xydopo/errors.hpp"
#include "xydopo/quadrature.hpp"

namespace xydopo {

namespace {

constexpr double kCriticalTol = 1e-12;

// E_k^2 / 4 as a polynomial in cos k.
detail::CosQuadratic squared_quarter(const XYParams& p) {
  const double js = p.js();
  const double jd = p.jd();
  return {js * js - jd * jd, 2.0 * p.h() * js, p.h() * p.h() + jd * jd};
}

void require_discrete(const MomentumGrid& g) {
  if (g.is_continuum()) {
    throw InvalidArgument("operation needs a discrete momentum grid");
  }
}

bool straddles(const XYParams& p, double dh) {
  if (p.jx() == 0.0 && p.jy() == 0.0) return false;
  const auto set = xy_critical_fields(p);
  return std::any_of(set.values.begin(), set.values.end(), [&](const auto& c) {
    return c.field > p.h() - dh && c.field < p.h() + dh;
  });
}

}  // namespace

double xy_dispersion(const XYParams& p, double k) {
  const double a = p.h() + p.js() * std::cos(k);
  const double b = p.jd() * std::sin(k);
  return 2.0 * std::hypot(a, b);
}

Spectrum xy_spectrum(const XYParams& p, const MomentumGrid& g) {
  require_discrete(g);
  Spectrum s;
  s.k.assign(g.points().begin(), g.points().end());
  s.value.reserve(s.k.size());
  for (double k : s.k) s.value.push_back(xy_dispersion(p, k));
  return s;
}

double xy_ground_energy_finite(const XYParams& p, const MomentumGrid& g) {
  require_discrete(g);
  double sum = 0.0;
  for (double k : g.points()) sum += xy_dispersion(p, k);
  return -0.5 * sum;
}

QuadratureResult xy_energy_density(const XYParams& p,
                                   const QuadratureSpec& quad) {
  const auto breaks = squared_quarter(p).singular_momenta();
  auto r = integrate([&](double k) { return xy_dispersion(p, k); }, 0.0,
                     std::numbers::pi, breaks, quad);
  const double scale = 1.0 / (2.0 * std::numbers::pi);
  return {-r.value * scale, r.error * scale, r.nodes};
}

FieldDerivative xy_magnetization(const XYParams& p, const QuadratureSpec& quad,
                                 double dh) {
  if (!(dh > 0.0)) throw InvalidArgument("dh must be positive");
  const double up = xy_energy_density(p.with_field(p.h() + dh), quad).value;
  const double down = xy_energy_density(p.with_field(p.h() - dh), quad).value;
  return {-(up - down) / (2.0 * dh), straddles(p, dh)};
}

FieldDerivative xy_susceptibility(const XYParams& p, const QuadratureSpec& quad,
                                  double dh) {
  if (!(dh > 0.0)) throw InvalidArgument("dh must be positive");
  const double limit = dh * dh * 1e-3;
  if (quad.tol > limit) {
    throw NumericalError("quadrature tol " + std::to_string(quad.tol) +
                             " exceeds dh^2 * 1e-3 = " + std::to_string(limit) +
                             "; second difference would be noise-dominated",
                         quad.tol);
  }
  const double up = xy_energy_density(p.with_field(p.h() + dh), quad).value;
  const double mid = xy_energy_density(p, quad).value;
  const double down = xy_energy_density(p.with_field(p.h() - dh), quad).value;
  return {-(up - 2.0 * mid + down) / (dh * dh), straddles(p, dh)};
}

CriticalFieldSet xy_critical_fields(const XYParams& p) {
  if (p.jx() == 0.0 && p.jy() == 0.0) {
    throw DegenerateModel("jx = jy = 0: free spins have no transition");
  }
  CriticalFieldSet set{};
  if (p.jx() == p.jy()) {
    set.model_case = ModelCase::Isotropic;
    const double two_j = 2.0 * p.jx();
    for (double hc : {-two_j, two_j}) {
      const double c = std::clamp(-hc / two_j, -1.0, 1.0);
      set.values.push_back({hc, std::acos(c)});
    }
  } else {
    set.model_case = (p.jx() == 0.0 || p.jy() == 0.0) ? ModelCase::TFI
                                                       : ModelCase::Anisotropic;
    set.values.push_back({-p.js(), 0.0});
    set.values.push_back({p.js(), std::numbers::pi});
  }
  std::sort(set.values.begin(), set.values.end(),
            [](const auto& a, const auto& b) { return a.field < b.field; });
  return set;
}

Phase xy_phase(const XYParams& p) {
  if (p.jx() < 0.0 || p.jy() < 0.0) {
    throw UnsupportedParameter(
        "phase classification needs non-negative couplings");
  }
  const double excess = std::abs(p.h()) - p.js();
  if (std::abs(excess) <= kCriticalTol) return Phase::Critical;
  return excess > 0.0 ? Phase::Paramagnetic : Phase::Ordered;
}

double xy_gap(const XYParams& p) {
  // The quadratic locates the minimum; the hypot form evaluates it without
  // the cancellation of the expanded polynomial near a gap closing.
  const auto m = squared_quarter(p).min_on_unit();
  return std::min({xy_dispersion(p, 0.0), xy_dispersion(p, std::numbers::pi),
                   xy_dispersion(p, std::acos(m.cos_k))});
}

}  // namespace xydopo
