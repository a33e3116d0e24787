#include "xydopo/core_types.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "xydopo/errors.hpp"

namespace xydopo {

namespace {

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw InvalidArgument(std::string(name) + " must be a finite real number");
  }
}

}  // namespace

XYParams::XYParams(double jx, double jy, double h) : jx_(jx), jy_(jy), h_(h) {
  require_finite(jx, "jx");
  require_finite(jy, "jy");
  require_finite(h, "h");
}

DopoParams::DopoParams(double j, double delta, double d2)
    : j_(j), delta_(delta), d2_(d2) {
  require_finite(j, "j");
  require_finite(delta, "delta");
  require_finite(d2, "d2");
}

double DopoParams::drive() const {
  if (d2_ < 0.0) {
    throw NonphysicalDrive("drive amplitude undefined for d2 = " +
                           std::to_string(d2_) + " < 0");
  }
  return std::sqrt(d2_);
}

std::string_view to_string(Sector s) noexcept {
  switch (s) {
    case Sector::Periodic:
      return "periodic";
    case Sector::Antiperiodic:
      return "antiperiodic";
  }
  return "?";
}

std::optional<Sector> parse_sector(std::string_view s) noexcept {
  if (s == "periodic") return Sector::Periodic;
  if (s == "antiperiodic") return Sector::Antiperiodic;
  return std::nullopt;
}

MomentumGrid MomentumGrid::discrete(int n, Sector sector) {
  if (n < 2 || n % 2 != 0) {
    throw InvalidArgument("grid size must be a positive even integer, got " +
                          std::to_string(n));
  }
  MomentumGrid g;
  g.n_ = n;
  g.sector_ = sector;
  g.points_.reserve(static_cast<std::size_t>(n));
  const double step = 2.0 * std::numbers::pi / n;
  const int half = n / 2;
  if (sector == Sector::Periodic) {
    for (int m = -half + 1; m <= half; ++m) g.points_.push_back(step * m);
    // m = n/2 lands on pi exactly rather than on a rounded neighbour.
    g.points_.back() = std::numbers::pi;
  } else {
    for (int m = -half; m < half; ++m) {
      g.points_.push_back((2 * m + 1) * std::numbers::pi / n);
    }
  }
  return g;
}

std::string_view to_string(Phase p) noexcept {
  switch (p) {
    case Phase::Ordered:
      return "ordered";
    case Phase::Paramagnetic:
      return "paramagnetic";
    case Phase::Normal:
      return "normal";
    case Phase::Superradiant:
      return "superradiant";
    case Phase::Critical:
      return "critical";
  }
  return "?";
}

}  // namespace xydopo
