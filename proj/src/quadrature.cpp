#include "xydopo/quadrature.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "xydopo/errors.hpp"

namespace xydopo {

namespace {

constexpr unsigned kOrder = 20;
using Rule = boost::math::quadrature::gauss<double, kOrder>;

double panel_sum(const std::function<double(double)>& f, double a, double b,
                 int panels) {
  const auto& x = Rule::abscissa();
  const auto& w = Rule::weights();
  const double width = (b - a) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * width;
    const double mid = lo + 0.5 * width;
    const double half = 0.5 * width;
    double s = 0.0;
    // kOrder is even, so the rule has no node at the panel centre.
    for (std::size_t i = 0; i < x.size(); ++i) {
      s += w[i] * (f(mid - half * x[i]) + f(mid + half * x[i]));
    }
    total += half * s;
  }
  return total;
}

}  // namespace

double integrate_fixed(const std::function<double(double)>& f, double a,
                       double b, int panels) {
  if (panels < 1) throw InvalidArgument("panel count must be positive");
  return panel_sum(f, a, b, panels);
}

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, std::span<const double> breakpoints,
                           const QuadratureSpec& spec) {
  if (!(b > a)) throw InvalidArgument("integration interval must be non-empty");
  if (!(spec.tol > 0.0)) throw InvalidArgument("quadrature tol must be positive");
  if (spec.max_nodes < 16) {
    throw InvalidArgument("quadrature node budget must be at least 16");
  }

  std::vector<double> edges{a};
  for (double c : breakpoints) {
    if (c > a && c < b) edges.push_back(c);
  }
  edges.push_back(b);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  const std::size_t pieces = edges.size() - 1;
  auto estimate = [&](int panels) {
    double s = 0.0;
    for (std::size_t i = 0; i < pieces; ++i) {
      s += panel_sum(f, edges[i], edges[i + 1], panels);
    }
    return s;
  };

  int panels = 1;
  double previous = estimate(panels);
  double change = std::numeric_limits<double>::infinity();
  while (true) {
    const std::size_t next_nodes = pieces * kOrder * 2u * panels;
    if (next_nodes > spec.max_nodes) {
      throw NumericalError("quadrature did not converge within " +
                               std::to_string(spec.max_nodes) +
                               " nodes; achieved change " +
                               std::to_string(change),
                           change);
    }
    panels *= 2;
    const double current = estimate(panels);
    change = std::abs(current - previous);
    if (change < spec.tol) return {current, change, next_nodes};
    previous = current;
  }
}

}  // namespace xydopo
