#include "xydopo/presets.hpp"

#include <array>

namespace xydopo {

namespace {

struct PresetEntry {
  const char* name;
  Model model;
  double jx;
  double jy;
  double stop;
  int steps;
};

constexpr std::array<PresetEntry, 6> kPresets{{
    {"fig2-aniso", Model::Xy, 2.0, 1.0, 6.0, 601},
    {"fig2-iso", Model::Xy, 1.0, 1.0, 4.0, 401},
    {"fig2-tfi", Model::Xy, 1.0, 0.0, 2.0, 401},
    {"fig3-left", Model::Mapped, 2.0, 1.0, 6.0, 601},
    {"fig3-middle", Model::Mapped, 1.0, 1.0, 4.0, 401},
    {"fig3-right", Model::Mapped, 1.0, 0.01, 2.0, 401},
}};

}  // namespace

std::optional<SweepConfig> find_preset(std::string_view name) {
  for (const auto& e : kPresets) {
    if (name != e.name) continue;
    SweepConfig cfg;
    cfg.model = e.model;
    cfg.params.jx = e.jx;
    cfg.params.jy = e.jy;
    cfg.range = {0.0, e.stop, e.steps};
    return cfg;
  }
  return std::nullopt;
}

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& e : kPresets) names.emplace_back(e.name);
  return names;
}

}  // namespace xydopo
