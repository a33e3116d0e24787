#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xydopo/sweep.hpp"

namespace xydopo {

/// Built-in sweeps with the figure parameters:
///   fig2-aniso  xy      jx = 2, jy = 1,     h in [0, 6]
///   fig2-iso    xy      jx = jy = 1,        h in [0, 4]
///   fig2-tfi    xy      jx = 1, jy = 0,     h in [0, 2]
///   fig3-left   mapped  jx = 2, jy = 1      (j = 2 sqrt 2, delta = -3h/sqrt 2)
///   fig3-middle mapped  jx = jy = 1         (j = 2, delta = -2h, D = 0)
///   fig3-right  mapped  jx = 1, jy = 0.01   (j = 0.2, delta = -10.1h)
/// The right column is often quoted as delta = -10h; -10.1h is the exact map.
std::optional<SweepConfig> find_preset(std::string_view name);
std::vector<std::string> preset_names();

}  // namespace xydopo
