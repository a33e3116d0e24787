#include "xydopo/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <sstream>
#include <thread>

#include "xydopo/dopo_solver.hpp"
#include "xydopo/mapping.hpp"
#include "xydopo/xy_solver.hpp"

namespace xydopo {

namespace {

constexpr double kPhaseTol = 1e-12;

// Everything about a sweep that does not depend on the control value.
struct SweepContext {
  std::vector<double> critical_controls;
  std::vector<int> critical_indices;
  std::optional<double> mapped_critical_detuning;
};

SweepContext make_context(const SweepConfig& cfg) {
  SweepContext ctx;
  const auto& p = cfg.params;
  switch (cfg.model) {
    case Model::Xy:
    case Model::Mapped: {
      if (p.jx == 0.0 && p.jy == 0.0) break;
      for (const auto& c : xy_critical_fields(XYParams{p.jx, p.jy, 0.0}).values) {
        ctx.critical_controls.push_back(c.field);
      }
      if (cfg.model == Model::Mapped) {
        const XYParams at_hc{p.jx, p.jy, p.jx + p.jy};
        ctx.mapped_critical_detuning =
            dopo_critical_detuning(map_xy_to_dopo(at_hc).dopo);
      }
      break;
    }
    case Model::Dopo: {
      const DopoParams d{p.j, 0.0, p.d2};
      if (!d.physical()) break;
      for (double t : dopo_threshold_detunings(d)) {
        ctx.critical_controls.push_back(t);
      }
      break;
    }
  }
  const auto& r = cfg.range;
  const double step = (r.stop - r.start) / (r.steps - 1);
  for (double c : ctx.critical_controls) {
    if (c < r.start || c > r.stop) continue;
    ctx.critical_indices.push_back(
        static_cast<int>(std::lround((c - r.start) / step)));
  }
  return ctx;
}

// Energy per site as a function of the control value; nullopt when the DOPO
// spectrum is unstable there.
std::optional<double> energy_at(const SweepConfig& cfg, double control) {
  const auto& p = cfg.params;
  switch (cfg.model) {
    case Model::Xy:
      return xy_energy_density(XYParams{p.jx, p.jy, control}, cfg.quad).value;
    case Model::Mapped: {
      const auto mapped = map_xy_to_dopo(XYParams{p.jx, p.jy, control}).dopo;
      try {
        return dopo_energy_density(mapped, cfg.quad).value;
      } catch (const UnstablePhase&) {
        return std::nullopt;
      }
    }
    case Model::Dopo:
      try {
        return dopo_energy_density(DopoParams{p.j, control, p.d2}, cfg.quad)
            .value;
      } catch (const UnstablePhase&) {
        return std::nullopt;
      }
  }
  return std::nullopt;
}

SweepRecord evaluate_point(const SweepConfig& cfg, const SweepContext& ctx,
                           int index) {
  const auto& p = cfg.params;
  const auto& out = cfg.outputs;
  const double control = cfg.range.at(index);
  SweepRecord rec;
  rec.control = control;

  std::optional<DopoParams> dopo;
  switch (cfg.model) {
    case Model::Xy:
      rec.h = control;
      break;
    case Model::Mapped: {
      rec.h = control;
      const auto m = map_xy_to_dopo(XYParams{p.jx, p.jy, control});
      dopo = m.dopo;
      rec.delta = m.dopo.delta();
      if (!m.physical) rec.flags.emplace_back("nonphysical");
      break;
    }
    case Model::Dopo:
      rec.delta = control;
      dopo = DopoParams{p.j, control, p.d2};
      break;
  }

  if (std::find(ctx.critical_indices.begin(), ctx.critical_indices.end(),
                index) != ctx.critical_indices.end()) {
    rec.flags.emplace_back("critical");
  }

  if (out.e_g || out.m_z || out.chi) {
    const auto e0 = energy_at(cfg, control);
    if (!e0 && cfg.model != Model::Xy) rec.flags.emplace_back("unstable");
    if (out.e_g) rec.e_g = e0;
    if (out.m_z || out.chi) {
      const double dh = cfg.dh;
      const auto up = energy_at(cfg, control + dh);
      const auto down = energy_at(cfg, control - dh);
      if (up && down) {
        if (out.m_z) rec.m_z = -(*up - *down) / (2.0 * dh);
        if (out.chi && e0) rec.chi = -(*up - 2.0 * *e0 + *down) / (dh * dh);
      }
      const bool straddle = std::any_of(
          ctx.critical_controls.begin(), ctx.critical_controls.end(),
          [&](double c) { return c > control - dh && c < control + dh; });
      if (straddle) rec.flags.emplace_back("straddle");
    }
  }

  if (out.phase) {
    switch (cfg.model) {
      case Model::Xy:
        rec.phase = xy_phase(XYParams{p.jx, p.jy, control});
        break;
      case Model::Mapped: {
        // The sweep crosses the transition at the detuning transported from
        // h_c = jx + jy; larger detuning is the symmetry-broken side.
        const double dc = *ctx.mapped_critical_detuning;
        const double diff = *rec.delta - dc;
        if (std::abs(diff) <= kPhaseTol * std::max(1.0, std::abs(dc))) {
          rec.phase = Phase::Critical;
        } else {
          rec.phase = diff < 0.0 ? Phase::Normal : Phase::Superradiant;
        }
        break;
      }
      case Model::Dopo:
        rec.phase = dopo_classify_phase(*dopo);
        break;
    }
  }

  if (out.gap) {
    if (cfg.model == Model::Xy) {
      rec.gap = xy_gap(XYParams{p.jx, p.jy, control});
    } else {
      const double w2 = dopo_min_omega_squared(*dopo);
      if (w2 >= -1e-10) rec.gap = std::sqrt(std::max(0.0, w2));
    }
  }
  return rec;
}

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

}  // namespace

std::string_view to_string(Model m) noexcept {
  switch (m) {
    case Model::Xy:
      return "xy";
    case Model::Dopo:
      return "dopo";
    case Model::Mapped:
      return "mapped";
  }
  return "?";
}

std::optional<Model> parse_model(std::string_view s) noexcept {
  if (s == "xy") return Model::Xy;
  if (s == "dopo") return Model::Dopo;
  if (s == "mapped") return Model::Mapped;
  return std::nullopt;
}

std::string_view to_string(Format f) noexcept {
  return f == Format::Csv ? "csv" : "json";
}

std::optional<Format> parse_format(std::string_view s) noexcept {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  return std::nullopt;
}

std::optional<OutputSet> parse_outputs(std::string_view csv) {
  OutputSet o{false, false, false, false, false};
  std::stringstream ss{std::string(csv)};
  std::string item;
  bool any = false;
  while (std::getline(ss, item, ',')) {
    if (item == "e_g") {
      o.e_g = true;
    } else if (item == "m_z") {
      o.m_z = true;
    } else if (item == "chi") {
      o.chi = true;
    } else if (item == "phase") {
      o.phase = true;
    } else if (item == "gap") {
      o.gap = true;
    } else {
      return std::nullopt;
    }
    any = true;
  }
  if (!any) return std::nullopt;
  return o;
}

std::vector<std::string> output_names(const OutputSet& o) {
  std::vector<std::string> names;
  if (o.e_g) names.emplace_back("e_g");
  if (o.m_z) names.emplace_back("m_z");
  if (o.chi) names.emplace_back("chi");
  if (o.phase) names.emplace_back("phase");
  if (o.gap) names.emplace_back("gap");
  return names;
}

void validate(const SweepConfig& cfg) {
  const auto& r = cfg.range;
  const auto& p = cfg.params;
  if (!std::isfinite(r.start) || !std::isfinite(r.stop)) {
    throw ConfigError("range", "start and stop must be finite");
  }
  if (r.steps < 2) throw ConfigError("range.steps", "must be at least 2");
  if (!(r.start < r.stop)) throw ConfigError("range", "start must be < stop");
  if (!(cfg.dh > 0.0) || !std::isfinite(cfg.dh)) {
    throw ConfigError("dh", "must be a positive finite number");
  }
  if (!(cfg.quad.tol > 0.0)) throw ConfigError("quad.tol", "must be positive");
  if (cfg.quad.max_nodes < 16) {
    throw ConfigError("quad.max_nodes", "must be at least 16");
  }
  if (cfg.workers < 0) throw ConfigError("workers", "must be >= 0");
  if (cfg.outputs.chi && cfg.quad.tol > cfg.dh * cfg.dh * 1e-3) {
    throw ConfigError("quad.tol",
                      "chi needs quad.tol <= dh^2 * 1e-3 to stay above "
                      "quadrature noise");
  }
  for (double v : {p.jx, p.jy, p.j, p.d2}) {
    if (!std::isfinite(v)) throw ConfigError("params", "must be finite");
  }
  switch (cfg.model) {
    case Model::Xy:
      if (cfg.outputs.phase && (p.jx < 0.0 || p.jy < 0.0)) {
        throw ConfigError("params",
                          "phase output needs non-negative jx and jy");
      }
      break;
    case Model::Mapped:
      if (!(p.jx * p.jy > 0.0)) {
        throw ConfigError("params", "mapped model needs jx * jy > 0");
      }
      if (p.jx < 0.0 || p.jy < 0.0) {
        throw ConfigError("params", "mapped model needs positive jx and jy");
      }
      break;
    case Model::Dopo:
      if (p.j < 0.0) throw ConfigError("params.j", "must be >= 0");
      break;
  }
}

void run_sweep(const SweepConfig& cfg,
               const std::function<void(const SweepRecord&)>& sink) {
  validate(cfg);
  const SweepContext ctx = make_context(cfg);
  const int workers = resolve_workers(cfg.workers);
  const int steps = cfg.range.steps;
  const int chunk = std::max(1, workers * 8);

  std::vector<SweepRecord> results(static_cast<std::size_t>(chunk));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(chunk));
  for (int begin = 0; begin < steps; begin += chunk) {
    const int count = std::min(chunk, steps - begin);
    auto work = [&](int lane) {
      for (int i = lane; i < count; i += workers) {
        try {
          results[static_cast<std::size_t>(i)] =
              evaluate_point(cfg, ctx, begin + i);
        } catch (...) {
          errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      const int lanes = std::min(workers, count);
      for (int t = 0; t < lanes; ++t) pool.emplace_back(work, t);
    }
    for (int i = 0; i < count; ++i) {
      if (auto& e = errors[static_cast<std::size_t>(i)]) {
        std::rethrow_exception(e);
      }
      sink(results[static_cast<std::size_t>(i)]);
    }
  }
}

std::vector<SweepRecord> collect_sweep(const SweepConfig& cfg) {
  std::vector<SweepRecord> all;
  all.reserve(static_cast<std::size_t>(std::max(0, cfg.range.steps)));
  run_sweep(cfg, [&](const SweepRecord& r) { all.push_back(r); });
  return all;
}

}  // namespace xydopo
