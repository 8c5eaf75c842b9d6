// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The crtresca Authors

#include "crtresca/errors.hpp"
#include "crtresca/material.hpp"

#include <doctest.h>

#include <random>

using namespace crtresca;

TEST_CASE("lame_from_engineering")
{
  // mu = 200 / 2.6, lambda = 60 / 0.52
  const auto steel = lame_from_engineering(200.0, 0.3);
  CHECK(steel.mu == doctest::Approx(76.92307692307692).epsilon(1e-14));
  CHECK(steel.lambda == doctest::Approx(115.38461538461539).epsilon(1e-14));

  const auto zero_nu = lame_from_engineering(1.0, 0.0);
  CHECK(zero_nu.mu == 0.5);
  CHECK(zero_nu.lambda == 0.0);

  for (double nu : {0.0, 0.1, 0.25, 0.49})
    CHECK(lame_from_engineering(2.0 * (1.0 + nu), nu).mu == doctest::Approx(1.0));

  // plane stress: 2 lambda mu / (lambda + 2 mu)
  const auto ps = lame_from_engineering(200.0, 0.3, PlaneAssumption::Stress);
  CHECK(ps.mu == doctest::Approx(steel.mu));
  CHECK(ps.lambda
        == doctest::Approx(2 * steel.lambda * steel.mu / (steel.lambda + 2 * steel.mu)));

  CHECK_THROWS_AS(lame_from_engineering(200.0, 0.5), InvalidInput);
  CHECK_THROWS_AS(lame_from_engineering(200.0, 0.6), InvalidInput);
  CHECK_THROWS_AS(lame_from_engineering(200.0, -0.1), InvalidInput);
  CHECK_THROWS_AS(lame_from_engineering(0.0, 0.3), InvalidInput);
  CHECK_THROWS_AS(MaterialModel::from_lame(1.0, 0.0), InvalidInput);
}

TEST_CASE("strain")
{
  Eigen::Matrix2d g;
  g << 1, 0, 0, 1;
  auto e = strain(g);
  CHECK(e.xx == 1.0);
  CHECK(e.yy == 1.0);
  CHECK(e.xy == 0.0);

  g << 0, 1, 0, 0;
  e = strain(g);
  CHECK(e.xx == 0.0);
  CHECK(e.yy == 0.0);
  CHECK(e.xy == 0.5);

  g << 0, 1, -1, 0;
  e = strain(g);
  CHECK(e.xx == 0.0);
  CHECK(e.yy == 0.0);
  CHECK(e.xy == 0.0);
}

TEST_CASE("stress")
{
  const auto unit = MaterialModel::from_lame(1.0, 1.0);
  auto s = stress({1, 1, 0}, unit);
  CHECK(s.xx == 4.0);
  CHECK(s.yy == 4.0);
  CHECK(s.xy == 0.0);

  s = stress({}, unit);
  CHECK(s.xx == 0.0);
  CHECK(s.yy == 0.0);
  CHECK(s.xy == 0.0);

  s = stress({0, 0, 1}, MaterialModel::from_lame(5.0, 3.0));
  CHECK(s.xx == 0.0);
  CHECK(s.yy == 0.0);
  CHECK(s.xy == 6.0);
}

TEST_CASE("stress properties on random input")
{
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> pos(0.1, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto mat = MaterialModel::from_lame(pos(rng), pos(rng));
    const SymTensor2 e1{u(rng), u(rng), u(rng)};
    const SymTensor2 e2{u(rng), u(rng), u(rng)};
    const double a = u(rng), b = u(rng);

    const auto lhs = stress(a * e1 + b * e2, mat);
    const auto rhs = a * stress(e1, mat) + b * stress(e2, mat);
    CHECK(lhs.xx == doctest::Approx(rhs.xx));
    CHECK(lhs.yy == doctest::Approx(rhs.yy));
    CHECK(lhs.xy == doctest::Approx(rhs.xy));

    // sigma:eps >= 2 mu eps:eps
    CHECK(contract(stress(e1, mat), e1) >= 2.0 * mat.mu() * contract(e1, e1) - 1e-12);
    CHECK(contract(stress(e1, mat), e1) > 0.0);

    // rigid motions carry no stress
    Eigen::Matrix2d rot;
    const double w = u(rng);
    rot << 0, w, -w, 0;
    const auto s = stress(strain(rot), mat);
    CHECK(s.xx == 0.0);
    CHECK(s.yy == 0.0);
    CHECK(s.xy == 0.0);
  }
}

TEST_CASE("voigt matrix agrees with the tensor formula")
{
  const auto mat = MaterialModel::from_engineering(200.0, 0.3);
  const SymTensor2 e{0.3, -0.2, 0.7};
  const Eigen::Vector3d voigt = mat.voigt() * Eigen::Vector3d(e.xx, e.yy, 2 * e.xy);
  const auto s = stress(e, mat);
  CHECK(voigt(0) == doctest::Approx(s.xx));
  CHECK(voigt(1) == doctest::Approx(s.yy));
  CHECK(voigt(2) == doctest::Approx(s.xy));
}
