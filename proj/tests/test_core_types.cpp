#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "xydopo/core_types.hpp"
#include "xydopo/errors.hpp"

using namespace xydopo;
using std::numbers::pi;

namespace {

std::vector<double> points(int n, Sector s) {
  const auto g = build_grid(n, s);
  return {g.points().begin(), g.points().end()};
}

}  // namespace

TEST_CASE("periodic grid n=4") {
  const auto k = points(4, Sector::Periodic);
  REQUIRE(k.size() == 4);
  CHECK(k[0] == doctest::Approx(-pi / 2).epsilon(1e-15));
  CHECK(k[1] == 0.0);
  CHECK(k[2] == doctest::Approx(pi / 2).epsilon(1e-15));
  CHECK(k[3] == pi);
}

TEST_CASE("periodic grid n=2") {
  const auto k = points(2, Sector::Periodic);
  REQUIRE(k.size() == 2);
  CHECK(k[0] == 0.0);
  CHECK(k[1] == pi);
}

TEST_CASE("antiperiodic grid n=4") {
  const auto k = points(4, Sector::Antiperiodic);
  REQUIRE(k.size() == 4);
  const double want[] = {-3 * pi / 4, -pi / 4, pi / 4, 3 * pi / 4};
  for (int i = 0; i < 4; ++i) {
    CHECK(k[i] == doctest::Approx(want[i]).epsilon(1e-15));
  }
}

TEST_CASE("grid size errors") {
  for (int n : {-2, 0, 1, 3, 7}) {
    CHECK_THROWS_AS(build_grid(n, Sector::Periodic), InvalidArgument);
    CHECK_THROWS_AS(build_grid(n, Sector::Antiperiodic), InvalidArgument);
  }
  CHECK(MomentumGrid::continuum().is_continuum());
  CHECK(MomentumGrid::continuum().points().empty());
}

TEST_CASE("grids: strictly increasing, cos sum zero, k -> -k symmetry") {
  for (auto sector : {Sector::Periodic, Sector::Antiperiodic}) {
    for (int n = 2; n <= 512; n *= 2) {
      CAPTURE(n);
      const auto k = points(n, sector);
      REQUIRE(static_cast<int>(k.size()) == n);
      CHECK(std::is_sorted(k.begin(), k.end(),
                           [](double a, double b) { return a <= b; }));
      CHECK(k.front() > -pi);
      CHECK(k.back() <= pi);
      double cos_sum = 0.0;
      for (double x : k) cos_sum += std::cos(x);
      CHECK(std::abs(cos_sum) < 1e-12 * n);
      for (double x : k) {
        if (sector == Sector::Periodic && (x == 0.0 || x == pi)) continue;
        const bool mirrored = std::any_of(k.begin(), k.end(), [&](double y) {
          return std::abs(x + y) < 1e-12;
        });
        CHECK(mirrored);
      }
    }
  }
}

TEST_CASE("sector names round-trip") {
  for (auto s : {Sector::Periodic, Sector::Antiperiodic}) {
    CHECK(parse_sector(to_string(s)) == s);
  }
  CHECK(!parse_sector("bogus"));
}

TEST_CASE("parameter types") {
  CHECK_THROWS_AS(XYParams(NAN, 1.0, 0.0), InvalidArgument);
  CHECK_THROWS_AS(XYParams(1.0, 1.0, INFINITY), InvalidArgument);
  const XYParams p{2.0, 1.0, 3.0};
  CHECK(p.js() == 3.0);
  CHECK(p.jd() == 1.0);
  CHECK(p.with_field(-1.0).h() == -1.0);

  const DopoParams good{2.0, -4.0, 16.0};
  CHECK(good.physical());
  CHECK(good.drive() == 4.0);
  const DopoParams bad{2.0, -4.0, -1.0};
  CHECK(!bad.physical());
  CHECK_THROWS_AS(bad.drive(), NonphysicalDrive);
  CHECK(good.with_detuning(1.0).delta() == 1.0);
}

TEST_CASE("phase names") {
  CHECK(to_string(Phase::Ordered) == "ordered");
  CHECK(to_string(Phase::Superradiant) == "superradiant");
}
