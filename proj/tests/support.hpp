// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The crtresca Authors

// Shared fixtures for the unit and acceptance suites.

#pragma once

#include "crtresca/assembly.hpp"
#include "crtresca/config.hpp"
#include "crtresca/cr_space.hpp"
#include "crtresca/mesh.hpp"

#include <Eigen/Core>

#include <memory>
#include <random>

namespace crtresca::testing {

/// (0,4)^2 clamped on the right, contact along the bottom, Neumann elsewhere.
inline Domain example_domain()
{
  return Domain::rectangle(0.0, 4.0, 0.0, 4.0, BoundaryLabel::Contact, BoundaryLabel::Dirichlet,
                           BoundaryLabel::Neumann, BoundaryLabel::Neumann);
}

inline std::shared_ptr<const Mesh> example_mesh(int n)
{
  return std::make_shared<const Mesh>(generate_structured(example_domain(), n));
}

inline std::shared_ptr<const CRSpace> example_space(int n) { return build_space(example_mesh(n)); }

inline CRFunction random_function(std::shared_ptr<const CRSpace> space, std::mt19937& rng,
                                  double scale = 1.0)
{
  std::uniform_real_distribution<double> dist(-scale, scale);
  Eigen::VectorXd c(space->n_dofs_free());
  for (Eigen::Index i = 0; i < c.size(); ++i)
    c(i) = dist(rng);
  return CRFunction(std::move(space), std::move(c));
}

/// Example problem data with a given level-0 grid.
inline ProblemConfig example_config(int n = 2, int steps = 40)
{
  auto cfg = preset("clamped-square");
  cfg.base_subdivisions = n;
  cfg.base_steps = steps;
  return cfg;
}

} // namespace crtresca::testing
