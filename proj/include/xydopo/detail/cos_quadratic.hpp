#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

namespace xydopo::detail {

/// q(c) = a c^2 + b c + c0 with c = cos k. Both squared spectra have this
/// form, which gives exact band minima and the momenta where they vanish.
struct CosQuadratic {
  double a;
  double b;
  double c0;

  double operator()(double c) const { return (a * c + b) * c + c0; }

  struct Minimum {
    double value;
    double cos_k;
  };

  /// Exact minimum over c in [-1, 1].
  Minimum min_on_unit() const {
    Minimum best{(*this)(-1.0), -1.0};
    if (const double v = (*this)(1.0); v < best.value) best = {v, 1.0};
    if (a > 0.0) {
      const double vertex = -b / (2.0 * a);
      if (vertex > -1.0 && vertex < 1.0) {
        if (const double v = (*this)(vertex); v < best.value) best = {v, vertex};
      }
    }
    return best;
  }

  /// Values of c in (-1, 1) where q is zero or has its vertex. These are the
  /// only places where sqrt(q(cos k)) can lose smoothness, so quadrature
  /// splits there.
  std::vector<double> singular_cos() const {
    std::vector<double> out;
    auto keep = [&](double c) {
      if (c > -1.0 && c < 1.0) out.push_back(c);
    };
    if (a != 0.0) {
      keep(-b / (2.0 * a));
      const double disc = b * b - 4.0 * a * c0;
      if (disc > 0.0) {
        const double s = std::sqrt(disc);
        // Stable root pair.
        const double qq = -0.5 * (b + std::copysign(s, b));
        if (qq != 0.0) {
          keep(qq / a);
          keep(c0 / qq);
        }
      }
    } else if (b != 0.0) {
      keep(-c0 / b);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<double> singular_momenta() const {
    std::vector<double> ks;
    for (double c : singular_cos()) ks.push_back(std::acos(c));
    std::sort(ks.begin(), ks.end());
    return ks;
  }
};

}  // namespace xydopo::detail
