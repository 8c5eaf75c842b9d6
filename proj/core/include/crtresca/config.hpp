// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The crtresca Authors

#pragma once

#include "crtresca/assembly.hpp"
#include "crtresca/material.hpp"
#include "crtresca/mesh.hpp"
#include "crtresca/solver.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace crtresca {

/// How a study turns two trajectories into one error number.
enum class ErrorMeasure { FinalTime, MaxOverTime };

/// Everything needed to run a solve or a refinement study.
struct ProblemConfig {
  Domain domain;

  double youngs_modulus = 1.0;
  double poisson_ratio = 0.0;
  PlaneAssumption plane = PlaneAssumption::Strain;

  LoadSpec loads;

  double final_time = 1.0;
  /// Time steps on level 0; level L uses base_steps * 2^L.
  int base_steps = 1;
  /// Squares per side on level 0; level L is refined L times.
  int base_subdivisions = 1;
  int levels = 1;

  double rho = 10.0;
  UzawaConfig uzawa;
  ErrorMeasure error_measure = ErrorMeasure::FinalTime;

  std::string csv_path;
  std::string fields_path;

  /// Throws ConfigError naming the offending `section.key`.
  void validate() const;
  MaterialModel material() const;
};

/// INI-style text:
///
///   [domain]   x_min x_max y_min y_max, and per side (bottom/right/top/left)
///              either a label or segments like `dirichlet@0:2, contact@2:4`
///   [material] E nu plane(strain|stress)
///   [loads]    friction_bound; body_x body_y initial_x initial_y as `c cx cy`;
///              body_time; traction_<side>_x, traction_<side>_y, traction_<side>_time
///   [time]     T N
///   [mesh]     n
///   [study]    levels error(final|max)
///   [solver]   rho rho_tilde eps max_iter
///   [output]   csv fields
///
/// Time profiles are `constant` or `linear`. Unknown keys are rejected.
ProblemConfig parse_config(std::istream& in);
ProblemConfig load_config(const std::filesystem::path& path);

/// Built-in problems: "clamped-square" (2x2 grid, N = 40, five levels) and
/// "clamped-square-fine" (4x4 grid, N = 20, five levels).
ProblemConfig preset(std::string_view name);
std::vector<std::string> preset_names();

} // namespace crtresca
