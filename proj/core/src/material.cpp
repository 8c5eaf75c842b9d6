// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The crtresca Authors

#include "crtresca/material.hpp"

#include "crtresca/errors.hpp"

#include <cmath>

namespace crtresca {

LameParameters lame_from_engineering(double E, double nu, PlaneAssumption plane)
{
  if (!(E > 0.0) || !std::isfinite(E))
    throw InvalidInput("material: Young's modulus must be positive");
  if (!(nu >= 0.0 && nu < 0.5))
    throw InvalidInput("material: Poisson ratio must lie in [0, 0.5)");

  const double mu = E / (2.0 * (1.0 + nu));
  double lambda = E * nu / ((1.0 + nu) * (1.0 - 2.0 * nu));
  if (plane == PlaneAssumption::Stress)
    lambda = 2.0 * lambda * mu / (lambda + 2.0 * mu);
  return {lambda, mu};
}

MaterialModel MaterialModel::from_engineering(double E, double nu, PlaneAssumption plane)
{
  const auto lame = lame_from_engineering(E, nu, plane);
  MaterialModel m;
  m.E_ = E;
  m.nu_ = nu;
  m.lambda_ = lame.lambda;
  m.mu_ = lame.mu;
  m.plane_ = plane;
  return m;
}

MaterialModel MaterialModel::from_lame(double lambda, double mu)
{
  if (!(mu > 0.0) || !(lambda >= 0.0))
    throw InvalidInput("material: require mu > 0 and lambda >= 0");
  MaterialModel m;
  m.lambda_ = lambda;
  m.mu_ = mu;
  m.E_ = mu * (3.0 * lambda + 2.0 * mu) / (lambda + mu);
  m.nu_ = lambda / (2.0 * (lambda + mu));
  return m;
}

Eigen::Matrix3d MaterialModel::voigt() const
{
  Eigen::Matrix3d D;
  // clang-format off
  D << lambda_ + 2.0 * mu_, lambda_,             0.0,
       lambda_,             lambda_ + 2.0 * mu_, 0.0,
       0.0,                 0.0,                 mu_;
  // clang-format on
  return D;
}

SymTensor2 strain(const Eigen::Matrix2d& grad)
{
  return {grad(0, 0), grad(1, 1), 0.5 * (grad(0, 1) + grad(1, 0))};
}

SymTensor2 stress(const SymTensor2& eps, const MaterialModel& mat)
{
  const double tr = eps.trace();
  const double two_mu = 2.0 * mat.mu();
  return {mat.lambda() * tr + two_mu * eps.xx, mat.lambda() * tr + two_mu * eps.yy,
          two_mu * eps.xy};
}

} // namespace crtresca
