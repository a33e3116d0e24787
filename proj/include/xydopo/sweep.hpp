#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xydopo/core_types.hpp"
#include "xydopo/errors.hpp"

namespace xydopo {

enum class Model {
  Xy,      // control is h
  Dopo,    // control is delta
  Mapped,  // control is h; the DOPO ring is map_xy_to_dopo at each h
};

enum class Format { Csv, Json };

std::string_view to_string(Model m) noexcept;
std::optional<Model> parse_model(std::string_view s) noexcept;
std::string_view to_string(Format f) noexcept;
std::optional<Format> parse_format(std::string_view s) noexcept;

/// Raw model parameters. xy/mapped sweeps read jx, jy; dopo sweeps read j, d2.
/// h and delta are only used by single-point subcommands.
struct ModelParams {
  double jx = 0.0;
  double jy = 0.0;
  double h = 0.0;
  double j = 0.0;
  double delta = 0.0;
  double d2 = 0.0;
};

struct ControlRange {
  double start = 0.0;
  double stop = 1.0;
  int steps = 2;

  double at(int i) const {
    return start + (stop - start) * static_cast<double>(i) / (steps - 1);
  }
};

struct OutputSet {
  bool e_g = true;
  bool m_z = true;
  bool chi = true;
  bool phase = true;
  bool gap = true;
};

/// Parses a comma-separated subset of {e_g, m_z, chi, phase, gap}.
std::optional<OutputSet> parse_outputs(std::string_view csv);
std::vector<std::string> output_names(const OutputSet& o);

struct SweepConfig {
  Model model = Model::Xy;
  ModelParams params;
  ControlRange range;
  double dh = 1e-3;
  QuadratureSpec quad;
  OutputSet outputs;
  Format format = Format::Csv;
  int workers = 0;  // 0: hardware concurrency
};

/// Invalid sweep configuration; `field` names the offending setting.
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

void validate(const SweepConfig& cfg);

/// Evaluates every control point and hands records to `sink` in control
/// order. Points are computed by a pool of cfg.workers threads in bounded
/// chunks, so memory does not grow with the step count.
void run_sweep(const SweepConfig& cfg,
               const std::function<void(const SweepRecord&)>& sink);

/// Convenience wrapper collecting every record.
std::vector<SweepRecord> collect_sweep(const SweepConfig& cfg);

}  // namespace xydopo
