#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "xydopo/dopo_solver.hpp"
#include "xydopo/errors.hpp"
#include "xydopo/mapping.hpp"
#include "xydopo/xy_solver.hpp"

using namespace xydopo;

namespace {
const QuadratureSpec kTight{1e-12, std::size_t{1} << 20};
}

TEST_CASE("forward map examples") {
  for (double h : {0.0, 1.0, 3.0, 5.5}) {
    CAPTURE(h);
    auto m = map_xy_to_dopo({2.0, 1.0, h});
    CHECK(m.dopo.j() == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-15));
    CHECK(m.dopo.delta() == doctest::Approx(-3.0 * h / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(m.dopo.d2() == doctest::Approx(h * h / 2.0 - 4.0).epsilon(1e-14));
    CHECK(m.physical == (h * h / 2.0 >= 4.0));
    CHECK(m.source == XYParams{2.0, 1.0, h});

    m = map_xy_to_dopo({1.0, 1.0, h});
    CHECK(m.dopo.j() == 2.0);
    CHECK(m.dopo.delta() == -2.0 * h);
    CHECK(m.dopo.d2() == 0.0);

    m = map_xy_to_dopo({1.0, 0.01, h});
    CHECK(m.dopo.j() == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(m.dopo.delta() == doctest::Approx(-10.1 * h).epsilon(1e-14));
    CHECK(m.dopo.d2() == doctest::Approx(0.9801 * (100 * h * h - 4)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(map_xy_to_dopo({1.0, 0.0, 1.0}), SingularMap);
  CHECK_THROWS_AS(map_xy_to_dopo({1.0, -1.0, 1.0}), InvalidArgument);
}

TEST_CASE("inverse map examples") {
  auto xy = map_dopo_to_xy({2.0, -2.0, 0.0}, 1.0);
  REQUIRE(xy);
  CHECK(xy->jx() == doctest::Approx(1.0));
  CHECK(xy->jy() == doctest::Approx(1.0));

  const double h = 3.0;
  xy = map_dopo_to_xy({2.0 * std::sqrt(2.0), -3.0 * h / std::sqrt(2.0), h * h / 2 - 4}, h);
  REQUIRE(xy);
  CHECK(xy->jx() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(xy->jy() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(xy->h() == h);

  CHECK(!map_dopo_to_xy({2.0, -5.0, -1.0}, 1.0));
  CHECK(!map_dopo_to_xy({2.0, -2.0, 0.0}, 0.0));
  CHECK_THROWS_AS(map_dopo_to_xy({0.0, -2.0, 0.0}, 1.0), InvalidArgument);
}

TEST_CASE("round trip") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> c(0.01, 4.0), f(-6.0, 6.0);
  for (int i = 0; i < 1000; ++i) {
    const double jx = c(rng), jy = c(rng), h = f(rng);
    if (std::abs(h) < 1e-3) continue;
    const auto back = map_dopo_to_xy(map_xy_to_dopo({jx, jy, h}).dopo, h);
    REQUIRE(back);
    CHECK(std::abs(back->jx() - std::max(jx, jy)) < 1e-9);
    CHECK(std::abs(back->jy() - std::min(jx, jy)) < 1e-9);
  }
}

TEST_CASE("spectral match examples") {
  const auto g = build_grid(128, Sector::Periodic);
  CHECK(verify_spectral_match({2.0, 1.0, 4.0}, g) < 1e-10);
  CHECK(verify_spectral_match({1.0, 1.0, 1.5}, g) < 1e-10);
  CHECK(verify_spectral_match({3.0, 0.5, 0.0}, g) < 1e-10);
  CHECK(map_xy_to_dopo({3.0, 0.5, 0.0}).dopo.d2() < 0.0);
  CHECK_THROWS_AS(verify_spectral_match({2.0, 1.0, 4.0}, MomentumGrid::continuum()),
                  InvalidArgument);
}

TEST_CASE("spectral match on 1000 random draws, checked by the polynomial forms") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> c(0.0, 4.0), f(-6.0, 6.0);
  const auto g = build_grid(128, Sector::Periodic);
  for (int i = 0; i < 1000; ++i) {
    const double jx = 4.0 - c(rng), jy = 4.0 - c(rng), h = f(rng);
    CHECK(verify_spectral_match({jx, jy, h}, g) < 1e-9);
    // Independent check straight from the map formulas.
    const double j = 2 * std::sqrt(jx * jy);
    const double delta = -h * (jx + jy) / std::sqrt(jx * jy);
    const double d2 = (jx - jy) * (jx - jy) * (h * h / (jx * jy) - 4);
    for (double k : {0.0, 0.9, 2.1, oracle::pi}) {
      CHECK(std::abs(oracle::xy_e2_poly(jx, jy, h, k) -
                     oracle::dopo_w2_poly(j, delta, d2, k)) < 1e-9);
    }
  }
}

TEST_CASE("critical point transport") {
  for (const auto& [jx, jy] : {std::pair{2.0, 1.0}, {1.0, 1.0}, {1.0, 0.01}, {3.0, 0.2}}) {
    const auto d = map_xy_to_dopo({jx, jy, jx + jy}).dopo;
    REQUIRE(d.physical());
    CHECK(std::abs(dopo_critical_detuning(d) - d.delta()) < 1e-9);
  }
}

TEST_CASE("isotropic map has d2 = 0 for every h") {
  for (double j : {0.1, 1.0, 2.5}) {
    for (double h = -6; h <= 6; h += 0.37) CHECK(map_xy_to_dopo({j, j, h}).dopo.d2() == 0.0);
  }
}

TEST_CASE("energy shift and map_energy_density") {
  CHECK(energy_shift({1.0, 1.0, 3.0}) == doctest::Approx(3.0));
  CHECK(energy_shift({2.0, 1.0, 4.0}) == doctest::Approx(4 * 3 / (2 * std::sqrt(2.0))));

  for (const auto& p : {XYParams{1.0, 1.0, 3.0}, XYParams{2.0, 1.0, 4.0}}) {
    const auto c = map_energy_density(p, kTight);
    REQUIRE(c.residual);
    CHECK(std::abs(*c.residual) < 1e-9);
    CHECK(!c.dopo_unstable);
  }
  // Reported either way, never thrown.
  const auto c = map_energy_density({2.0, 1.0, 1.0}, kTight);
  CHECK(c.residual.has_value() == c.e_dopo.has_value());
  CHECK(c.dopo_unstable.has_value() != c.e_dopo.has_value());
}

TEST_CASE("finite-n energy shift identity") {
  // sum_k cos k = 0, so the zero-point sum equals -E0_XY - n delta / 2 exactly.
  for (const auto& p : {XYParams{2.0, 1.0, 4.0}, XYParams{1.0, 0.01, 1.5}}) {
    for (int n : {8, 64}) {
      const auto g = build_grid(n, Sector::Periodic);
      const auto d = map_xy_to_dopo(p).dopo;
      const double lhs = dopo_zero_point_energy(d, g);
      const double rhs = -xy_ground_energy_finite(p, g) - n * d.delta() / 2;
      CHECK(std::abs(lhs - rhs) < 1e-9 * n);
    }
  }
}
