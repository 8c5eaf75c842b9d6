// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The crtresca Authors

#include "crtresca/config.hpp"
#include "crtresca/errors.hpp"

#include <doctest.h>

#include <sstream>

using namespace crtresca;

namespace {

const char* const kBase = R"(
; comment line
[domain]
x_min = 0
x_max = 4
y_min = 0
y_max = 4
bottom = contact
right = dirichlet
top = neumann
left = neumann

[material]
E = 200
nu = 0.3
)";

ProblemConfig parse(const std::string& text)
{
  std::istringstream in(text);
  return parse_config(in);
}

std::string field_of(const std::string& text)
{
  try {
    parse(text);
  }
  catch (const ConfigError& e) {
    return e.field();
  }
  return "<none>";
}

} // namespace

TEST_CASE("minimal configuration uses defaults")
{
  const auto cfg = parse(kBase);
  CHECK(cfg.youngs_modulus == 200.0);
  CHECK(cfg.poisson_ratio == 0.3);
  CHECK(cfg.plane == PlaneAssumption::Strain);
  CHECK(cfg.domain.boundary.size() == 4);
  CHECK(cfg.loads.tractions.empty());
  CHECK(cfg.loads.friction_bound == 0.0);
  CHECK(cfg.rho == 10.0);
  CHECK(cfg.uzawa.eps == 1e-8);
  CHECK(cfg.uzawa.max_iter == 10000);
  CHECK(cfg.error_measure == ErrorMeasure::FinalTime);
  CHECK(cfg.csv_path.empty());
}

TEST_CASE("full configuration")
{
  const auto cfg = parse(std::string(kBase) + R"(
plane = stress
[loads]
friction_bound = 0.0012
body_y = -1 0 0.5
body_time = linear
initial_x = 0.001
traction_left_x = 0.1 0 -0.02
traction_left_y = -0.01
traction_left_time = linear
[time]
T = 2
N = 40
[mesh]
n = 3
[study]
levels = 4
error = max
[solver]
rho = 5
rho_tilde = 1.5
eps = 1e-9
max_iter = 500
[output]
csv = out.csv
fields = u.txt
)");
  CHECK(cfg.plane == PlaneAssumption::Stress);
  CHECK(cfg.loads.friction_bound == 0.0012);
  CHECK(cfg.loads.body_force.y.c == -1.0);
  CHECK(cfg.loads.body_force.y.cy == 0.5);
  CHECK(cfg.loads.body_profile == TimeProfile::Linear);
  CHECK(cfg.loads.initial_displacement.x.c == 0.001);
  REQUIRE(cfg.loads.tractions.size() == 1);
  const auto& t = cfg.loads.tractions[0];
  CHECK(t.side == Side::Left);
  CHECK(t.value.x.c == 0.1);
  CHECK(t.value.x.cy == -0.02);
  CHECK(t.value.y.c == -0.01);
  CHECK(t.profile == TimeProfile::Linear);
  CHECK(cfg.final_time == 2.0);
  CHECK(cfg.base_steps == 40);
  CHECK(cfg.base_subdivisions == 3);
  CHECK(cfg.levels == 4);
  CHECK(cfg.error_measure == ErrorMeasure::MaxOverTime);
  CHECK(cfg.rho == 5.0);
  CHECK(cfg.uzawa.rho_tilde == 1.5);
  CHECK(cfg.uzawa.eps == 1e-9);
  CHECK(cfg.uzawa.max_iter == 500);
  CHECK(cfg.csv_path == "out.csv");
  CHECK(cfg.fields_path == "u.txt");
}

TEST_CASE("segmented sides")
{
  std::string text(kBase);
  text.replace(text.find("bottom = contact"), 16, "bottom = dirichlet@0:1.5, contact@1.5:4");
  const auto cfg = parse(text);
  int bottom = 0;
  for (const auto& s : cfg.domain.boundary)
    if (s.side == Side::Bottom) {
      ++bottom;
      if (s.label == BoundaryLabel::Dirichlet) {
        CHECK(s.from == 0.0);
        CHECK(s.to == 1.5);
      }
    }
  CHECK(bottom == 2);
}

TEST_CASE("errors name the offending field")
{
  CHECK(field_of(std::string(kBase) + "\n[time]\nN = 0\n") == "time.N");
  CHECK(field_of(std::string(kBase) + "\n[time]\nN = 2.5\n") == "time.N");
  CHECK(field_of(std::string(kBase) + "\n[time]\nT = -1\n") == "time.T");
  CHECK(field_of(std::string(kBase) + "\n[solver]\nrho = 0\n") == "solver.rho");
  CHECK(field_of(std::string(kBase) + "\n[solver]\nwarp = 9\n") == "solver.warp");
  CHECK(field_of(std::string(kBase) + "\n[extra]\nx = 1\n") == "extra.x");
  CHECK(field_of(std::string(kBase) + "\n[loads]\nfriction_bound = abc\n")
        == "loads.friction_bound");
  CHECK(field_of(std::string(kBase) + "\n[loads]\nbody_x = 1 2\n") == "loads.body_x");
  CHECK(field_of(std::string(kBase) + "\n[loads]\ntraction_top_time = sometimes\n")
        == "loads.traction_top_time");
  CHECK(field_of(std::string(kBase) + "\n[study]\nerror = mean\n") == "study.error");

  std::string bad_nu(kBase);
  bad_nu.replace(bad_nu.find("nu = 0.3"), 8, "nu = 0.6");
  CHECK(field_of(bad_nu) == "material.nu");

  std::string no_left(kBase);
  no_left.erase(no_left.find("left = neumann"), 14);
  CHECK(field_of(no_left) == "domain.left");

  std::string bad_label(kBase);
  bad_label.replace(bad_label.find("top = neumann"), 13, "top = sticky");
  CHECK(field_of(bad_label) == "domain.top");

  std::string overlap(kBase);
  overlap.replace(overlap.find("bottom = contact"), 16, "bottom = contact@0:3, neumann@2:4");
  CHECK(field_of(overlap) == "domain");
}

TEST_CASE("presets")
{
  CHECK(preset_names().size() == 2);
  const auto a = preset("clamped-square");
  CHECK(a.base_subdivisions == 2);
  CHECK(a.base_steps == 40);
  CHECK(a.levels == 5);
  CHECK(a.loads.friction_bound == 0.0012);
  CHECK(a.material().mu() == doctest::Approx(200.0 / 2.6));
  REQUIRE(a.loads.tractions.size() == 1);
  CHECK(a.loads.tractions[0].value({0.0, 4.0}).x() == doctest::Approx(0.02));
  CHECK(a.loads.tractions[0].value({0.0, 0.0}).x() == doctest::Approx(0.1));

  const auto b = preset("clamped-square-fine");
  CHECK(b.base_subdivisions == 4);
  CHECK(b.base_steps == 20);

  CHECK_THROWS_AS(preset("nope"), ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/file.ini"), ConfigError);
}
