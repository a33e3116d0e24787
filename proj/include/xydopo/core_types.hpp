#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace xydopo {

/// Couplings and transverse field of the XY chain
///   H = -sum_i (jx sx_i sx_{i+1} + jy sy_i sy_{i+1}) - h sum_i sz_i
/// Energies are in units of a reference coupling J0 = 1.
class XYParams {
 public:
  XYParams(double jx, double jy, double h);

  double jx() const noexcept { return jx_; }
  double jy() const noexcept { return jy_; }
  double h() const noexcept { return h_; }

  double js() const noexcept { return jx_ + jy_; }
  double jd() const noexcept { return jx_ - jy_; }

  XYParams with_field(double h) const { return {jx_, jy_, h}; }

  friend bool operator==(const XYParams&, const XYParams&) = default;

 private:
  double jx_;
  double jy_;
  double h_;
};

/// Effective N-DOPO ring: hopping j, detuning delta and the signed squared
/// drive d2 = D^2. d2 < 0 is allowed and marks a parameter set with no real
/// drive amplitude.
class DopoParams {
 public:
  DopoParams(double j, double delta, double d2);

  double j() const noexcept { return j_; }
  double delta() const noexcept { return delta_; }
  double d2() const noexcept { return d2_; }

  bool physical() const noexcept { return d2_ >= 0.0; }
  /// D = sqrt(d2); throws NonphysicalDrive when d2 < 0.
  double drive() const;

  DopoParams with_detuning(double delta) const { return {j_, delta, d2_}; }

  friend bool operator==(const DopoParams&, const DopoParams&) = default;

 private:
  double j_;
  double delta_;
  double d2_;
};

enum class Sector {
  Periodic,      // k = 2 pi m / n, m = -n/2+1 .. n/2
  Antiperiodic,  // k = (2m+1) pi / n, m = -n/2 .. n/2-1
};

std::string_view to_string(Sector s) noexcept;
std::optional<Sector> parse_sector(std::string_view s) noexcept;

class MomentumGrid {
 public:
  static MomentumGrid continuum() { return MomentumGrid{}; }
  /// n even and >= 2, otherwise InvalidArgument.
  static MomentumGrid discrete(int n, Sector sector);

  bool is_continuum() const noexcept { return n_ == 0; }
  int size() const noexcept { return n_; }
  Sector sector() const noexcept { return sector_; }
  std::span<const double> points() const noexcept { return points_; }

 private:
  MomentumGrid() = default;

  int n_ = 0;
  Sector sector_ = Sector::Periodic;
  std::vector<double> points_;
};

inline MomentumGrid build_grid(int n, Sector sector) {
  return MomentumGrid::discrete(n, sector);
}

/// Paired (k, value) arrays. For the XY chain value is E_k >= 0, for the DOPO
/// ring it is the signed squared frequency Omega_k^2.
struct Spectrum {
  std::vector<double> k;
  std::vector<double> value;
};

enum class Phase { Ordered, Paramagnetic, Normal, Superradiant, Critical };

std::string_view to_string(Phase p) noexcept;

/// Composite Gauss-Legendre settings: absolute tolerance and node budget.
struct QuadratureSpec {
  double tol = 1e-10;
  std::size_t max_nodes = std::size_t{1} << 20;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // |I(2m panels) - I(m panels)| at acceptance
  std::size_t nodes = 0;
};

/// One point of a parameter sweep. Optional fields are absent when not
/// requested or undefined at this point.
struct SweepRecord {
  double control = 0.0;
  std::optional<double> h;
  std::optional<double> delta;
  std::optional<double> e_g;
  std::optional<double> m_z;
  std::optional<double> chi;
  std::optional<Phase> phase;
  std::optional<double> gap;
  std::vector<std::string> flags;
};

}  // namespace xydopo
