#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "xydopo/ed_oracle.hpp"
#include "xydopo/errors.hpp"
#include "xydopo/xy_solver.hpp"

using namespace xydopo;

namespace {
const QuadratureSpec kTight{1e-12, std::size_t{1} << 20};
}

TEST_CASE("examples") {
  auto r = ed_ground_state({0.0, 0.0, 1.0}, 4);
  CHECK(r.ground_energy == doctest::Approx(-4.0));
  CHECK(r.ground_m_z == doctest::Approx(1.0));
  CHECK(r.parity == Parity::Even);
  CHECK(r.gap == doctest::Approx(2.0));

  r = ed_ground_state({1.0, 0.0, 0.0}, 4);
  CHECK(r.ground_energy == doctest::Approx(-4.0));
  CHECK(std::abs(r.ground_m_z) < 1e-12);
  CHECK(r.gap < 1e-9);  // the two x-ordered states

  const XYParams tfi{1.0, 0.0, 2.0};
  r = ed_ground_state(tfi, 10);
  const double e_inf = xy_energy_density(tfi, kTight).value;
  CHECK(std::abs(r.ground_energy / 10 - e_inf) < 1.0 / 10);
}

TEST_CASE("dense matrix agrees with the Kronecker-product oracle") {
  for (const auto& p : {XYParams{1.0, 0.0, 0.7}, XYParams{2.0, 1.0, 1.3},
                        XYParams{0.4, -0.9, -0.2}}) {
    for (int n : {2, 3, 5, 6}) {
      const Eigen::MatrixXd h = build_dense_hamiltonian(p, n);
      const Eigen::MatrixXcd want = oracle::spin_hamiltonian(p.jx(), p.jy(), p.h(), n);
      CHECK(want.imag().cwiseAbs().maxCoeff() < 1e-14);
      CHECK((h - want.real()).cwiseAbs().maxCoeff() < 1e-14);
    }
  }
}

TEST_CASE("hermiticity is exact") {
  const Eigen::MatrixXd h = build_dense_hamiltonian({2.0, 1.0, 0.3}, 8);
  CHECK(h == h.transpose());
}

TEST_CASE("apply_hamiltonian equals the dense product") {
  const XYParams p{1.5, 0.5, 0.8};
  const int n = 7;
  const Eigen::MatrixXd h = build_dense_hamiltonian(p, n);
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  Eigen::VectorXd x(1 << n), y(1 << n);
  for (auto& v : x) v = g(rng);
  apply_hamiltonian(p, n, {x.data(), static_cast<std::size_t>(x.size())},
                    {y.data(), static_cast<std::size_t>(y.size())});
  CHECK((y - h * x).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("ground energy agrees with brute force") {
  for (const auto& p : {XYParams{1.0, 0.0, 0.5}, XYParams{1.0, 1.0, 1.0},
                        XYParams{2.0, 1.0, 4.5}, XYParams{0.3, 1.7, -0.8}}) {
    for (int n : {2, 4, 6, 8}) {
      CAPTURE(n);
      const double want = oracle::brute_ground_energy(p.jx(), p.jy(), p.h(), n);
      CHECK(std::abs(ed_ground_state(p, n).ground_energy - want) <
            1e-9 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST_CASE("Lanczos agrees with dense") {
  for (const auto& p : {XYParams{1.0, 0.0, 1.0}, XYParams{2.0, 1.0, 1.5},
                        XYParams{1.0, 1.0, 0.5}, XYParams{1.0, 0.0, 0.0}}) {
    for (int n : {4, 8, 10}) {
      CAPTURE(n);
      const auto d = ed_ground_state(p, n, EdMethod::Dense);
      const auto l = ed_ground_state(p, n, EdMethod::Lanczos);
      const double scale = std::max(1.0, std::abs(d.ground_energy));
      CHECK(std::abs(d.ground_energy - l.ground_energy) < 1e-9 * scale);
      CHECK(std::abs(d.gap - l.gap) < 1e-6 * scale);
    }
  }
  // Beyond the dense limit.
  const auto l = ed_ground_state({1.0, 0.0, 2.0}, 14, EdMethod::Lanczos);
  const double anti = xy_ground_energy_finite({1.0, 0.0, 2.0},
                                              build_grid(14, Sector::Antiperiodic));
  CHECK(std::abs(l.ground_energy - anti) < 1e-9 * std::abs(anti));
}

TEST_CASE("size limits") {
  CHECK_THROWS_AS(ed_ground_state({1.0, 0.0, 1.0}, 13), InvalidArgument);
  CHECK_THROWS_AS(ed_ground_state({1.0, 0.0, 1.0}, 1), InvalidArgument);
  CHECK_THROWS_AS(ed_ground_state({1.0, 0.0, 1.0}, 21, EdMethod::Lanczos),
                  InvalidArgument);
  CHECK_THROWS_AS(build_dense_hamiltonian({1.0, 0.0, 1.0}, 13), InvalidArgument);
}

TEST_CASE("ed_vs_analytic") {
  const auto c = ed_vs_analytic({1.0, 0.0, 2.0}, 8);
  REQUIRE(c.matching_sector);
  CHECK(*c.matching_sector == Sector::Antiperiodic);
  CHECK(std::abs(c.antiperiodic_residual) < 1e-9);
  CHECK(std::abs(c.periodic_residual) > 1e-9);
  CHECK(std::abs(c.periodic_residual) < 1.0);

  // Report-only cases: both sums computed, residuals consistent.
  for (const auto& [p, n] : {std::pair{XYParams{1.0, 1.0, 0.5}, 8},
                             std::pair{XYParams{2.0, 1.0, 1.0}, 2}}) {
    const auto r = ed_vs_analytic(p, n);
    CHECK(r.periodic_residual == doctest::Approx(r.periodic_energy - r.ed.ground_energy));
    CHECK(r.antiperiodic_residual ==
          doctest::Approx(r.antiperiodic_energy - r.ed.ground_energy));
  }
}

TEST_CASE("variational check: the better sector sum never undercuts ED") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> c(0.0, 2.5), f(-4.0, 4.0);
  for (int i = 0; i < 60; ++i) {
    const XYParams p{c(rng), c(rng), f(rng)};
    for (int n : {4, 6, 8}) {
      const auto r = ed_vs_analytic(p, n);
      CHECK(std::min(r.periodic_energy, r.antiperiodic_energy) >=
            r.ed.ground_energy - 1e-9);
    }
  }
}

TEST_CASE("magnetization: bounded and non-decreasing in h") {
  for (const auto& [jx, jy] : {std::pair{1.0, 0.0}, {2.0, 1.0}, {1.0, 1.0}}) {
    double previous = -INFINITY;
    for (int i = 0; i < 20; ++i) {
      const double h = 0.05 + 0.3 * i;
      const auto r = ed_ground_state({jx, jy, h}, 8);
      CHECK(std::abs(r.ground_m_z) <= 1.0 + 1e-12);
      CHECK(r.ground_m_z >= previous - 1e-9);
      previous = r.ground_m_z;
    }
  }
}

TEST_CASE("TFI h=4 magnetization matches the finite-difference value") {
  const XYParams p{1.0, 0.0, 4.0};
  const auto r = ed_ground_state(p, 12);
  CHECK(std::abs(r.ground_m_z - xy_magnetization(p, kTight, 1e-4).value) < 2e-2);
}

TEST_CASE("finite-size error shrinks away from criticality") {
  for (const auto& p : {XYParams{1.0, 0.0, 0.5}, XYParams{1.0, 0.0, 1.5},
                        XYParams{2.0, 1.0, 1.5}, XYParams{2.0, 1.0, 4.5}}) {
    const double e_inf = xy_energy_density(p, kTight).value;
    double previous = INFINITY;
    for (int n : {6, 8, 10, 12}) {
      const double dev = std::abs(ed_ground_state(p, n).ground_energy / n - e_inf);
      CHECK(dev <= previous + 1e-12);
      previous = dev;
    }
  }
}

TEST_CASE("ground state energy is the minimum of the full spectrum") {
  const XYParams p{2.0, 1.0, 0.7};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(build_dense_hamiltonian(p, 6),
                                                    Eigen::EigenvaluesOnly);
  const auto r = ed_ground_state(p, 6);
  CHECK(std::abs(r.ground_energy - es.eigenvalues()[0]) < 1e-10);
  CHECK(std::abs(r.gap - (es.eigenvalues()[1] - es.eigenvalues()[0])) < 1e-10);
}
