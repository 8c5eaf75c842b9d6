// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The crtresca Authors

#pragma once

#include <Eigen/Core>

namespace crtresca {

/// Symmetric 2x2 tensor stored by its three independent entries.
struct SymTensor2 {
  double xx = 0.0;
  double yy = 0.0;
  double xy = 0.0;

  double trace() const { return xx + yy; }

  friend SymTensor2 operator+(const SymTensor2& a, const SymTensor2& b)
  {
    return {a.xx + b.xx, a.yy + b.yy, a.xy + b.xy};
  }
  friend SymTensor2 operator-(const SymTensor2& a, const SymTensor2& b)
  {
    return {a.xx - b.xx, a.yy - b.yy, a.xy - b.xy};
  }
  friend SymTensor2 operator*(double s, const SymTensor2& a) { return {s * a.xx, s * a.yy, s * a.xy}; }
};

/// Full contraction a:b.
inline double contract(const SymTensor2& a, const SymTensor2& b)
{
  return a.xx * b.xx + a.yy * b.yy + 2.0 * a.xy * b.xy;
}

enum class PlaneAssumption { Strain, Stress };

struct LameParameters {
  double lambda = 0.0;
  double mu = 0.0;
};

/// Lame coefficients from Young's modulus and Poisson ratio. Plane strain
/// uses the 3D formulas; plane stress replaces lambda by 2*lambda*mu/(lambda+2*mu).
/// Throws InvalidInput unless E > 0 and 0 <= nu < 0.5.
LameParameters lame_from_engineering(double E, double nu,
                                     PlaneAssumption plane = PlaneAssumption::Strain);

/// Isotropic linear elastic material.
class MaterialModel {
public:
  static MaterialModel from_engineering(double E, double nu,
                                        PlaneAssumption plane = PlaneAssumption::Strain);
  /// Throws InvalidInput unless mu > 0 and lambda >= 0.
  static MaterialModel from_lame(double lambda, double mu);

  double youngs_modulus() const { return E_; }
  double poisson_ratio() const { return nu_; }
  double lambda() const { return lambda_; }
  double mu() const { return mu_; }
  PlaneAssumption plane() const { return plane_; }

  /// Voigt matrix acting on (eps_xx, eps_yy, 2 eps_xy).
  Eigen::Matrix3d voigt() const;

private:
  MaterialModel() = default;

  double E_ = 0.0;
  double nu_ = 0.0;
  double lambda_ = 0.0;
  double mu_ = 0.0;
  PlaneAssumption plane_ = PlaneAssumption::Strain;
};

/// Symmetric part of a displacement gradient, grad(i, j) = d u_i / d x_j.
SymTensor2 strain(const Eigen::Matrix2d& grad);

/// sigma = lambda tr(eps) Id + 2 mu eps
SymTensor2 stress(const SymTensor2& eps, const MaterialModel& mat);

} // namespace crtresca
