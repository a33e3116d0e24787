#include "xydopo/validate.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <numbers>
#include <random>

#include "xydopo/dopo_solver.hpp"
#include "xydopo/ed_oracle.hpp"
#include "xydopo/mapping.hpp"
#include "xydopo/xy_solver.hpp"

namespace xydopo {

namespace {

struct Model2 {
  const char* name;
  double jx;
  double jy;
};

constexpr Model2 kFigureModels[] = {
    {"aniso", 2.0, 1.0}, {"iso", 1.0, 1.0}, {"tfi", 1.0, 0.0}};

class Recorder {
 public:
  explicit Recorder(ValidationReport& r) : report_(r) {}

  // Passes when |value| <= threshold.
  void bound(const std::string& name, double threshold,
             const std::function<double()>& measure) {
    try {
      const double v = measure();
      report_.checks.push_back(
          {name, std::abs(v) <= threshold, v, threshold, ""});
    } catch (const std::exception& e) {
      report_.checks.push_back({name, false, NAN, threshold, e.what()});
    }
  }

  void require(const std::string& name, bool ok, double value,
               std::string detail = {}) {
    report_.checks.push_back({name, ok, value, 0.0, std::move(detail)});
  }

 private:
  ValidationReport& report_;
};

DopoParams mapped(const XYParams& p, double perturbation) {
  const auto d = map_xy_to_dopo(p).dopo;
  return d.with_detuning(d.delta() + perturbation);
}

double spectral_residual(const XYParams& p, double perturbation, int n) {
  const auto grid = MomentumGrid::discrete(n, Sector::Periodic);
  const auto d = mapped(p, perturbation);
  double worst = 0.0;
  for (double k : grid.points()) {
    const double e = xy_dispersion(p, k);
    worst = std::max(worst, std::abs(e * e - dopo_omega_squared(d, k)));
  }
  return worst;
}

double shift_residual(const XYParams& p, double perturbation) {
  const QuadratureSpec quad{1e-12, std::size_t{1} << 20};
  const double e_xy = xy_energy_density(p, quad).value;
  const double e_d = dopo_energy_density(mapped(p, perturbation), quad).value;
  return e_d - (-e_xy + energy_shift(p));
}

void quick_checks(Recorder& rec, double pert) {
  const XYParams spectral_cases[] = {
      {2.0, 1.0, 4.0}, {1.0, 1.0, 1.5}, {3.0, 0.5, 0.0}, {1.0, 0.01, 1.01}};
  for (const auto& p : spectral_cases) {
    rec.bound(fmt::format("spectral_match/jx={}/jy={}/h={}", p.jx(), p.jy(), p.h()),
              1e-9, [&] { return spectral_residual(p, pert, 128); });
  }

  for (const auto& m : {kFigureModels[0], kFigureModels[1]}) {
    const double hc = m.jx + m.jy;
    for (double h : {hc + 0.5, hc + 1.0, hc + 2.0}) {
      rec.bound(fmt::format("energy_shift/{}/h={}", m.name, h), 1e-8,
                [&] { return shift_residual(XYParams{m.jx, m.jy, h}, pert); });
    }
  }

  const QuadratureSpec tight{1e-12, std::size_t{1} << 20};
  rec.bound("anchor/tfi/h=0", 1e-10, [&] {
    return xy_energy_density({1.0, 0.0, 0.0}, tight).value + 1.0;
  });
  rec.bound("anchor/tfi/h=1", 1e-8, [&] {
    return xy_energy_density({1.0, 0.0, 1.0}, tight).value +
           4.0 / std::numbers::pi;
  });
  rec.bound("anchor/iso/h=3", 1e-10, [&] {
    return xy_energy_density({1.0, 1.0, 3.0}, tight).value + 3.0;
  });

  for (const auto& m : kFigureModels) {
    const double hc = m.jx + m.jy;
    rec.bound(fmt::format("critical_field/{}", m.name), 0.0, [&] {
      const auto set = xy_critical_fields({m.jx, m.jy, 0.0});
      return std::abs(set.values.front().field + hc) +
             std::abs(set.values.back().field - hc);
    });
  }
  for (const auto& [name, jx, jy] :
       {Model2{"aniso", 2.0, 1.0}, Model2{"iso", 1.0, 1.0},
        Model2{"near-tfi", 1.0, 0.01}}) {
    rec.bound(fmt::format("critical_transport/{}", name), 1e-9, [&] {
      const auto d = mapped(XYParams{jx, jy, jx + jy}, pert);
      return dopo_critical_detuning(d) - d.delta();
    });
  }

  rec.bound("ed/tfi/h=2/n=8/antiperiodic", 1e-9, [] {
    return ed_vs_analytic({1.0, 0.0, 2.0}, 8).antiperiodic_residual;
  });
}

void full_checks(Recorder& rec, double pert) {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> coupling(0.0, 4.0);
  std::uniform_real_distribution<double> field(-6.0, 6.0);
  auto draw_coupling = [&] {
    double v = 0.0;
    while (v == 0.0) v = 4.0 - coupling(rng);  // (0, 4]
    return v;
  };

  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const XYParams p{draw_coupling(), draw_coupling(), field(rng)};
    worst = std::max(worst, std::abs(spectral_residual(p, pert, 128)));
  }
  rec.bound("random/spectral_match/1000", 1e-9, [&] { return worst; });

  double worst_shift = 0.0;
  std::string failure;
  for (int i = 0; i < 100; ++i) {
    const double jx = draw_coupling();
    const double jy = draw_coupling();
    const double h = (jx + jy) * (1.05 + 0.5 * coupling(rng) / 4.0);
    try {
      worst_shift = std::max(
          worst_shift, std::abs(shift_residual(XYParams{jx, jy, h}, pert)));
    } catch (const std::exception& e) {
      failure = e.what();
      worst_shift = INFINITY;
    }
  }
  rec.bound("random/energy_shift/100", 1e-8, [&] {
    if (!failure.empty()) throw std::runtime_error(failure);
    return worst_shift;
  });

  const QuadratureSpec quad{1e-12, std::size_t{1} << 20};
  for (const auto& m : kFigureModels) {
    const double hc = m.jx + m.jy;
    for (double scale : {0.5, 1.5}) {
      const XYParams p{m.jx, m.jy, scale * hc};
      const double e_inf = xy_energy_density(p, quad).value;
      double previous = INFINITY;
      bool monotone = true;
      double last = 0.0;
      for (int n : {6, 8, 10, 12}) {
        const auto ed = ed_ground_state(p, n);
        last = std::abs(ed.ground_energy / n - e_inf);
        rec.require(fmt::format("ed_table/{}/h={}/n={}", m.name, p.h(), n),
                    true, last, "|e_ED(n) - e_inf|");
        monotone = monotone && last <= previous + 1e-12;
        previous = last;
        if (n == 12 && scale == 1.5) {
          const double m_fd = xy_magnetization(p, quad, 1e-4).value;
          rec.bound(fmt::format("ed_m_z/{}/h={}/n=12", m.name, p.h()), 0.02,
                    [&] { return ed.ground_m_z - m_fd; });
        }
      }
      rec.require(fmt::format("ed_monotone/{}/h={}", m.name, p.h()), monotone,
                  last);
      rec.bound(fmt::format("ed_n12/{}/h={}", m.name, p.h()), 0.02,
                [&] { return last; });
    }
  }
}

}  // namespace

bool ValidationReport::passed() const { return failures() == 0; }

int ValidationReport::failures() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                        [](const Check& c) { return !c.passed; }));
}

ValidationReport run_validate(const ValidationOptions& opts) {
  ValidationReport report;
  Recorder rec(report);
  quick_checks(rec, opts.perturbation);
  if (opts.level == ValidationLevel::Full) full_checks(rec, opts.perturbation);
  return report;
}

}  // namespace xydopo
