// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The crtresca Authors

#include "crtresca/analysis.hpp"
#include "crtresca/errors.hpp"
#include "crtresca/solver.hpp"
#include "support.hpp"

#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>
#include <random>

using namespace crtresca;
using namespace crtresca::testing;

namespace {

const MaterialModel kSteel = MaterialModel::from_engineering(200.0, 0.3);

} // namespace

TEST_CASE("energy norm of simple fields")
{
  const auto space = example_space(2);
  CHECK(energy_norm(CRFunction(space), kSteel, 10.0).total() == 0.0);

  // a constant field is cut off on the clamped column
  const CRFunction c = interpolate_cr([](Point) { return Eigen::Vector2d(1.0, 0.0); }, space);
  const auto parts = energy_norm(c, kSteel, 10.0);
  CHECK(parts.element_part > 0.0);
  CHECK(parts.jump_part > 0.0);

  // uniaxial compression vanishing on the clamped side
  const CRFunction squeeze = interpolate_cr(
      [](Point p) { return Eigen::Vector2d(0.01 * (4.0 - p.x), 0.0); }, space);
  const auto sp = energy_norm(squeeze, kSteel, 10.0);
  // eps_xx = -0.01 everywhere on the domain
  const double expected = 16.0 * (kSteel.lambda() + 2.0 * kSteel.mu()) * 1e-4;
  CHECK(sp.element_part == doctest::Approx(expected));
  CHECK(sp.jump_part == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("energy norm is a norm")
{
  const auto space = example_space(4);
  std::mt19937 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const CRFunction a = random_function(space, rng);
    const CRFunction b = random_function(space, rng);
    const double s = std::uniform_real_distribution<double>(-4, 4)(rng);
    const double na = energy_norm(a, kSteel, 10.0).total();
    const double nb = energy_norm(b, kSteel, 10.0).total();
    CHECK(na > 0.0);
    CHECK(energy_norm(s * a, kSteel, 10.0).total() == doctest::Approx(std::abs(s) * na));
    CHECK(energy_norm(a + b, kSteel, 10.0).total() <= na + nb + 1e-12);
    CHECK(broken_h1_seminorm(s * a) == doctest::Approx(std::abs(s) * broken_h1_seminorm(a)));
  }
}

TEST_CASE("broken H1 of linear fields")
{
  const auto space = example_space(2);
  const CRFunction u
      = interpolate_cr([](Point p) { return Eigen::Vector2d(0.5 * (4.0 - p.x), 0.0); }, space);
  const GradientField grad = [](Point) {
    Eigen::Matrix2d g = Eigen::Matrix2d::Zero();
    g(0, 0) = -0.5;
    return g;
  };
  CHECK(broken_h1_error(u, grad) < 1e-13);
  CHECK(broken_h1_seminorm(u) == doctest::Approx(0.5 * 4.0));
  const CRFunction zero(space);
  CHECK(broken_h1_error(zero, [](Point) { return Eigen::Matrix2d::Zero().eval(); }) == 0.0);
}

TEST_CASE("eoc")
{
  const std::vector<double> halving{1.0, 0.5, 0.25};
  for (double o : eoc(halving))
    CHECK(o == doctest::Approx(1.0));
  const std::vector<double> quartering{1.0, 0.25};
  CHECK(eoc(quartering)[0] == doctest::Approx(2.0));
  const std::vector<double> table{2.512e-4, 1.431e-4};
  CHECK(eoc(table)[0] == doctest::Approx(0.8118).epsilon(1e-4));
  const std::vector<double> flat{3.0, 3.0, 3.0};
  for (double o : eoc(flat))
    CHECK(o == 0.0);

  CHECK_THROWS_AS(eoc(std::vector<double>{1.0}), InvalidInput);
  CHECK_THROWS_AS(eoc(std::vector<double>{1.0, 0.0}), InvalidInput);
  CHECK_THROWS_AS(eoc(std::vector<double>{-1.0, 0.5}), InvalidInput);
}

TEST_CASE("inter_mesh_error")
{
  auto coarse_mesh = example_mesh(2);
  auto fine_mesh = std::make_shared<const Mesh>(refine_uniform(*coarse_mesh));
  const auto cs = build_space(coarse_mesh);
  const auto fs = build_space(fine_mesh);

  const VectorField lin = [](Point p) { return Eigen::Vector2d(0.3 * (4.0 - p.x), 0.0); };
  CHECK(inter_mesh_error(interpolate_cr(lin, cs), interpolate_cr(lin, fs), kSteel, 10.0)
        < 1e-12);

  std::mt19937 rng(4);
  const CRFunction a = random_function(cs, rng);
  const CRFunction b = random_function(fs, rng);
  const double e = inter_mesh_error(a, b, kSteel, 10.0);
  CHECK(e > 0.0);
  CHECK(inter_mesh_error(-1.0 * a, -1.0 * b, kSteel, 10.0) == doctest::Approx(e));
}

TEST_CASE("variational inequality oracle")
{
  std::mt19937 rng(8);
  std::uniform_real_distribution<double> u(-1.0, 1.0);

  SUBCASE("without contact it solves the linear system")
  {
    Eigen::MatrixXd A(5, 5);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        A(i, j) = u(rng);
    const Eigen::MatrixXd K = A * A.transpose() + 5 * Eigen::MatrixXd::Identity(5, 5);
    const Eigen::VectorXd F = Eigen::VectorXd::Random(5);
    const auto r = brute_force_vi_oracle(K, F, {}, 1.0, Eigen::VectorXd::Zero(5), 0.1);
    CHECK((r.u - K.llt().solve(F)).norm() < 1e-8);
  }

  SUBCASE("one dimensional soft threshold")
  {
    // minimize 1/2 a x^2 - f x + g |x| -> x = sign(f) max(|f| - g, 0) / a
    Eigen::MatrixXd K(1, 1);
    K << 2.0;
    const std::vector<ContactCoupling> c{{0, 1.0}};
    const Eigen::VectorXd zero = Eigen::VectorXd::Zero(1);
    CHECK(brute_force_vi_oracle(K, Eigen::VectorXd::Constant(1, 3.0), c, 1.0, zero, 0.1).u(0)
          == doctest::Approx(1.0));
    CHECK(brute_force_vi_oracle(K, Eigen::VectorXd::Constant(1, 0.5), c, 1.0, zero, 0.1).u(0)
          == 0.0);
    CHECK(brute_force_vi_oracle(K, Eigen::VectorXd::Constant(1, -3.0), c, 0.5, zero, 0.1).u(0)
          == doctest::Approx(-1.25));
  }

  SUBCASE("matches Uzawa on random systems")
  {
    for (int trial = 0; trial < 5; ++trial) {
      const int n = 8;
      Eigen::MatrixXd A(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          A(i, j) = u(rng);
      const Eigen::MatrixXd K = A * A.transpose() + n * Eigen::MatrixXd::Identity(n, n);
      Eigen::VectorXd F(n), prev(n);
      for (int i = 0; i < n; ++i) {
        F(i) = u(rng);
        prev(i) = 0.1 * u(rng);
      }
      const std::vector<ContactCoupling> c{{1, 0.5}, {4, 1.0}, {6, 0.25}};
      const double g = 0.4, k = 0.05;
      const auto oracle = brute_force_vi_oracle(K, F, c, g, prev, k);
      UzawaConfig cfg;
      cfg.eps = 1e-12;
      cfg.max_iter = 100000;
      const UzawaSolver uz(SparseMatrix(K.sparseView()), c, g);
      const auto out = uz.solve(F, prev, k, {}, cfg);
      CHECK((out.u - oracle.u).lpNorm<Eigen::Infinity>() < 1e-8);
    }
  }

  SUBCASE("bad input")
  {
    Eigen::MatrixXd K = Eigen::MatrixXd::Identity(2, 2);
    CHECK_THROWS_AS(
        brute_force_vi_oracle(K, Eigen::VectorXd::Zero(3), {}, 1.0, Eigen::VectorXd::Zero(2), 0.1),
        InvalidInput);
    CHECK_THROWS_AS(
        brute_force_vi_oracle(K, Eigen::VectorXd::Zero(2), {}, 1.0, Eigen::VectorXd::Zero(2), 0.0),
        InvalidInput);
    K(1, 1) = -1.0;
    CHECK_THROWS_AS(
        brute_force_vi_oracle(K, Eigen::VectorXd::Zero(2), {}, 1.0, Eigen::VectorXd::Zero(2), 0.1),
        SolverError);
  }
}
