#pragma once

#include <functional>
#include <span>

#include "xydopo/core_types.hpp"

namespace xydopo {

/// Composite 20-point Gauss-Legendre rule on [a, b], split at the given
/// interior breakpoints. The panel count per piece doubles until the estimate
/// changes by less than spec.tol; throws NumericalError (carrying the last
/// change) when the next doubling would exceed spec.max_nodes.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, std::span<const double> breakpoints,
                           const QuadratureSpec& spec);

/// Fixed composite rule with `panels` equal panels, no refinement.
double integrate_fixed(const std::function<double(double)>& f, double a,
                       double b, int panels);

}  // namespace xydopo
