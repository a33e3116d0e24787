// xydopo: sweeps, mapping queries, critical points, spectra and self-checks
// for the XY chain and its spectrally equivalent DOPO ring.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <numbers>
#include <optional>
#include <string>

#include "xydopo/dopo_solver.hpp"
#include "xydopo/errors.hpp"
#include "xydopo/mapping.hpp"
#include "xydopo/presets.hpp"
#include "xydopo/report.hpp"
#include "xydopo/sweep.hpp"
#include "xydopo/validate.hpp"
#include "xydopo/xy_solver.hpp"

using namespace xydopo;

namespace {

enum ExitCode { kOk = 0, kValidationFailed = 1, kBadConfig = 2, kNumerical = 3 };

// Options shared by every subcommand. Values only override the preset/config
// when the flag was actually given.
struct CommonOptions {
  std::string format;
  std::string out;
  std::string preset;
  std::string config;
  std::string model;
  double jx = 0, jy = 0, h = 0, j = 0, delta = 0, d2 = 0;
  CLI::Option* o_jx = nullptr;
  CLI::Option* o_jy = nullptr;
  CLI::Option* o_h = nullptr;
  CLI::Option* o_j = nullptr;
  CLI::Option* o_delta = nullptr;
  CLI::Option* o_d2 = nullptr;

  void attach(CLI::App* app) {
    app->add_option("--format", format, "Output format: csv or json");
    app->add_option("--out", out, "Output path (default stdout)");
    app->add_option("--preset", preset, "Built-in parameter preset");
    app->add_option("--config", config, "JSON config file");
    app->add_option("--model", model, "xy, dopo or mapped");
    o_jx = app->add_option("--jx", jx, "XY coupling along x");
    o_jy = app->add_option("--jy", jy, "XY coupling along y");
    o_h = app->add_option("--h", h, "Transverse field");
    o_j = app->add_option("--j", j, "DOPO hopping");
    o_delta = app->add_option("--delta", delta, "DOPO detuning");
    o_d2 = app->add_option("--d2", d2, "DOPO signed squared drive");
  }

  SweepConfig resolve() const {
    SweepConfig cfg;
    bool model_named = !preset.empty();
    if (!preset.empty()) {
      auto p = find_preset(preset);
      if (!p) throw ConfigError("preset", "unknown preset '" + preset + "'");
      cfg = *p;
    }
    if (!config.empty()) {
      std::ifstream in(config);
      if (!in) throw ConfigError("config", "cannot open '" + config + "'");
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(in);
      } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("config", e.what());
      }
      apply_config_json(doc, cfg);
      model_named = model_named || doc.contains("model");
    }
    // Only DOPO parameters on the command line imply the dopo model.
    if (!model_named && model.empty() && o_jx->count() == 0 &&
        o_jy->count() == 0 && (o_j->count() > 0 || o_d2->count() > 0)) {
      cfg.model = Model::Dopo;
    }
    if (!model.empty()) {
      auto m = parse_model(model);
      if (!m) throw ConfigError("model", "expected xy, dopo or mapped");
      cfg.model = *m;
    }
    if (!format.empty()) {
      auto f = parse_format(format);
      if (!f) throw ConfigError("format", "expected csv or json");
      cfg.format = *f;
    }
    auto over = [](CLI::Option* o, double v, double& target) {
      if (o->count() > 0) target = v;
    };
    over(o_jx, jx, cfg.params.jx);
    over(o_jy, jy, cfg.params.jy);
    over(o_h, h, cfg.params.h);
    over(o_j, j, cfg.params.j);
    over(o_delta, delta, cfg.params.delta);
    over(o_d2, d2, cfg.params.d2);
    return cfg;
  }
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw ConfigError("out", "cannot open '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

nlohmann::ordered_json meta_for(std::string_view model,
                                nlohmann::ordered_json params) {
  nlohmann::ordered_json meta;
  meta["model"] = std::string(model);
  meta["params"] = std::move(params);
  meta["version"] = std::string(kVersion);
  return meta;
}

int cmd_sweep(const CommonOptions& common, const SweepConfig& overrides_base,
              CLI::Option* o_start, CLI::Option* o_stop, CLI::Option* o_steps,
              CLI::Option* o_dh, CLI::Option* o_tol, CLI::Option* o_nodes,
              CLI::Option* o_workers, const std::string& outputs) {
  SweepConfig cfg = common.resolve();
  if (o_start->count()) cfg.range.start = overrides_base.range.start;
  if (o_stop->count()) cfg.range.stop = overrides_base.range.stop;
  if (o_steps->count()) cfg.range.steps = overrides_base.range.steps;
  if (o_dh->count()) cfg.dh = overrides_base.dh;
  if (o_tol->count()) cfg.quad.tol = overrides_base.quad.tol;
  if (o_nodes->count()) cfg.quad.max_nodes = overrides_base.quad.max_nodes;
  if (o_workers->count()) cfg.workers = overrides_base.workers;
  if (!outputs.empty()) {
    auto parsed = parse_outputs(outputs);
    if (!parsed) {
      throw ConfigError("outputs",
                        "expected a comma list from e_g,m_z,chi,phase,gap");
    }
    cfg.outputs = *parsed;
  }
  validate(cfg);

  Output out(common.out);
  TableWriter writer(cfg.format, out.stream(), sweep_columns(), sweep_meta(cfg));
  run_sweep(cfg, [&](const SweepRecord& r) { writer.row(sweep_cells(r)); });
  writer.finish();
  return kOk;
}

int cmd_map(const CommonOptions& common, bool inverse) {
  const SweepConfig cfg = common.resolve();
  const auto& p = cfg.params;
  Output out(common.out);
  const std::vector<std::string> cols{"jx", "jy", "h", "j", "delta", "d2",
                                      "physical"};
  if (!inverse) {
    const auto m = map_xy_to_dopo(XYParams{p.jx, p.jy, p.h});
    TableWriter w(cfg.format, out.stream(), cols,
                  meta_for("mapped", {{"jx", p.jx}, {"jy", p.jy}, {"h", p.h}}));
    w.row({p.jx, p.jy, p.h, m.dopo.j(), m.dopo.delta(), m.dopo.d2(),
           m.physical});
    return kOk;
  }
  const DopoParams d{p.j, p.delta, p.d2};
  const auto xy = map_dopo_to_xy(d, p.h);
  TableWriter w(cfg.format, out.stream(), cols,
                meta_for("dopo", {{"j", p.j}, {"delta", p.delta}, {"d2", p.d2},
                                  {"h", p.h}}));
  if (xy) {
    w.row({xy->jx(), xy->jy(), p.h, d.j(), d.delta(), d.d2(), d.physical()});
  }
  w.finish();
  if (!xy) std::cerr << "no XY chain reproduces these DOPO parameters\n";
  return kOk;
}

int cmd_critical(const CommonOptions& common) {
  const SweepConfig cfg = common.resolve();
  const auto& p = cfg.params;
  Output out(common.out);
  const std::vector<std::string> cols{"model", "kind", "value", "k_star"};

  if (cfg.model == Model::Dopo) {
    const DopoParams d{p.j, 0.0, p.d2};
    TableWriter w(cfg.format, out.stream(), cols,
                  meta_for("dopo", {{"j", p.j}, {"d2", p.d2}}));
    w.row({std::string("dopo"), std::string("delta_c"), dopo_critical_detuning(d),
           std::numbers::pi});
    for (double t : dopo_threshold_detunings(d)) {
      w.row({std::string("dopo"), std::string("threshold"), t, std::monostate{}});
    }
    return kOk;
  }

  const XYParams xy{p.jx, p.jy, 0.0};
  const auto set = xy_critical_fields(xy);
  TableWriter w(cfg.format, out.stream(), cols,
                meta_for("xy", {{"jx", p.jx}, {"jy", p.jy}}));
  for (const auto& c : set.values) {
    w.row({std::string("xy"), std::string("h_c"), c.field, c.k_star});
  }
  if (p.jx * p.jy > 0.0) {
    const double hc = p.jx + p.jy;
    const auto m = map_xy_to_dopo(xy.with_field(hc)).dopo;
    w.row({std::string("dopo"), std::string("delta_at_h_c"), m.delta(),
           std::numbers::pi});
    if (m.physical()) {
      w.row({std::string("dopo"), std::string("delta_c"),
             dopo_critical_detuning(m), std::numbers::pi});
    }
  }
  return kOk;
}

int cmd_spectrum(const CommonOptions& common, int n, const std::string& sector) {
  const SweepConfig cfg = common.resolve();
  const auto& p = cfg.params;
  const auto sec = parse_sector(sector);
  if (!sec) throw ConfigError("sector", "expected periodic or antiperiodic");
  const auto grid = MomentumGrid::discrete(n, *sec);

  Spectrum s;
  nlohmann::ordered_json params;
  switch (cfg.model) {
    case Model::Xy:
      s = xy_spectrum(XYParams{p.jx, p.jy, p.h}, grid);
      params = {{"jx", p.jx}, {"jy", p.jy}, {"h", p.h}};
      break;
    case Model::Mapped:
      s = dopo_spectrum(map_xy_to_dopo(XYParams{p.jx, p.jy, p.h}).dopo, grid);
      params = {{"jx", p.jx}, {"jy", p.jy}, {"h", p.h}};
      break;
    case Model::Dopo:
      s = dopo_spectrum(DopoParams{p.j, p.delta, p.d2}, grid);
      params = {{"j", p.j}, {"delta", p.delta}, {"d2", p.d2}};
      break;
  }
  params["n"] = n;
  params["sector"] = std::string(to_string(*sec));
  Output out(common.out);
  TableWriter w(cfg.format, out.stream(), {"k", "value"},
                meta_for(to_string(cfg.model), params));
  for (std::size_t i = 0; i < s.k.size(); ++i) w.row({s.k[i], s.value[i]});
  return kOk;
}

int cmd_validate(const CommonOptions& common, const std::string& level,
                 double perturbation) {
  ValidationOptions opts;
  if (level == "quick") {
    opts.level = ValidationLevel::Quick;
  } else if (level == "full") {
    opts.level = ValidationLevel::Full;
  } else {
    throw ConfigError("level", "expected quick or full");
  }
  opts.perturbation = perturbation;
  Format format = Format::Json;
  if (!common.format.empty()) {
    auto f = parse_format(common.format);
    if (!f) throw ConfigError("format", "expected csv or json");
    format = *f;
  }

  const auto report = run_validate(opts);
  for (const auto& c : report.checks) {
    std::cerr << (c.passed ? "PASS " : "FAIL ") << c.name << "  value="
              << format_number(c.value);
    if (c.threshold > 0.0) std::cerr << " bound=" << format_number(c.threshold);
    if (!c.detail.empty()) std::cerr << "  (" << c.detail << ")";
    std::cerr << '\n';
  }
  std::cerr << report.checks.size() - report.failures() << "/"
            << report.checks.size() << " checks passed\n";

  Output out(common.out);
  TableWriter w(format, out.stream(),
                {"check", "passed", "value", "threshold", "detail"},
                meta_for("validate", {{"level", level}}));
  for (const auto& c : report.checks) {
    Cell value = std::monostate{};
    if (std::isfinite(c.value)) value = c.value;
    w.row({c.name, c.passed, value, c.threshold, c.detail});
  }
  w.finish();
  return report.passed() ? kOk : kValidationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact XY-chain and DOPO-network solver"};
  app.require_subcommand(1);
  // --h is the transverse field, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");

  CommonOptions sweep_opts, map_opts, crit_opts, spec_opts, val_opts;

  auto* sweep = app.add_subcommand("sweep", "Sweep h (xy, mapped) or delta (dopo)");
  sweep_opts.attach(sweep);
  SweepConfig sweep_over;
  std::string outputs;
  auto* o_start = sweep->add_option("--start", sweep_over.range.start);
  auto* o_stop = sweep->add_option("--stop", sweep_over.range.stop);
  auto* o_steps = sweep->add_option("--steps", sweep_over.range.steps);
  auto* o_dh = sweep->add_option("--dh", sweep_over.dh, "Finite-difference step");
  auto* o_tol = sweep->add_option("--tol", sweep_over.quad.tol, "Quadrature tolerance");
  auto* o_nodes = sweep->add_option("--max-nodes", sweep_over.quad.max_nodes);
  auto* o_workers = sweep->add_option("--workers", sweep_over.workers,
                                      "Worker threads (0: all cores)");
  sweep->add_option("--outputs", outputs, "Subset of e_g,m_z,chi,phase,gap");

  auto* map = app.add_subcommand("map", "XY -> DOPO parameters (or inverse)");
  map_opts.attach(map);
  bool inverse = false;
  map->add_flag("--inverse", inverse, "DOPO (j, delta, d2) at field h -> XY");

  auto* critical = app.add_subcommand("critical", "Critical fields and detunings");
  crit_opts.attach(critical);

  auto* spectrum = app.add_subcommand("spectrum", "E_k or signed Omega_k^2 on a grid");
  spec_opts.attach(spectrum);
  int n = 64;
  std::string sector = "periodic";
  spectrum->add_option("--n", n, "Even number of sites");
  spectrum->add_option("--sector", sector, "periodic or antiperiodic");

  auto* validate_cmd = app.add_subcommand("validate", "Run the self-check suite");
  val_opts.attach(validate_cmd);
  std::string level = "quick";
  double perturbation = 0.0;
  validate_cmd->add_option("--level", level, "quick or full");
  validate_cmd->add_option("--perturb", perturbation)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kBadConfig;
  }

  try {
    if (*sweep) {
      return cmd_sweep(sweep_opts, sweep_over, o_start, o_stop, o_steps, o_dh,
                       o_tol, o_nodes, o_workers, outputs);
    }
    if (*map) return cmd_map(map_opts, inverse);
    if (*critical) return cmd_critical(crit_opts);
    if (*spectrum) return cmd_spectrum(spec_opts, n, sector);
    if (*validate_cmd) return cmd_validate(val_opts, level, perturbation);
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kNumerical;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadConfig;
  }
  return kOk;
}
