// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The crtresca Authors

#include "crtresca/errors.hpp"
#include "crtresca/study.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace crtresca;
using namespace crtresca::testing;

TEST_CASE("single level")
{
  const auto cfg = example_config(2, 8);
  const auto run = solve_level(cfg, 0);
  const auto s = summarize(run);
  CHECK(s.dof_reported == 28);
  CHECK(s.dof_free == 26);
  CHECK(s.steps == 8);
  CHECK(s.k == 0.125);
  CHECK(s.h == doctest::Approx(2.0 * std::sqrt(2.0)));
  // pushed towards the clamped side
  CHECK(s.u_max(0) > 0.0);

  std::ostringstream out;
  write_summary(out, s);
  CHECK(out.str().find("dof              28") != std::string::npos);

  std::ostringstream fields;
  write_fields(fields, run.trajectory.final().u);
  std::size_t lines = 0;
  for (char c : fields.str())
    lines += c == '\n';
  CHECK(lines == 14);

  const auto next = solve_level(cfg, 1, &run);
  const auto rebuilt = solve_level(cfg, 1);
  CHECK(next.space->n_dofs_reported() == 104);
  CHECK(next.trajectory.grid.steps == 16);
  CHECK(next.trajectory.final().u.coefficients() == rebuilt.trajectory.final().u.coefficients());
}

TEST_CASE("zero data gives a zero solution")
{
  auto cfg = example_config(2, 4);
  cfg.loads.tractions.clear();
  const auto s = summarize(solve_level(cfg, 0));
  CHECK(s.u_min.norm() == 0.0);
  CHECK(s.u_max.norm() == 0.0);
}

TEST_CASE("convergence study layout")
{
  auto cfg = example_config(2, 4);
  cfg.levels = 3;
  const auto rows = run_convergence_study(cfg);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].dof == 28);
  CHECK(rows[1].dof == 104);
  CHECK(rows[2].dof == 400);
  CHECK(rows[0].N == 4);
  CHECK(rows[2].N == 16);
  CHECK(rows[1].h == doctest::Approx(rows[0].h / 2));
  CHECK(rows[0].error.has_value());
  CHECK(rows[1].error.has_value());
  CHECK_FALSE(rows[2].error.has_value());
  CHECK_FALSE(rows[0].order.has_value());
  REQUIRE(rows[1].order.has_value());
  CHECK(*rows[1].order == doctest::Approx(std::log2(*rows[0].error / *rows[1].error)));

  SUBCASE("reruns are bitwise identical")
  {
    CHECK(run_convergence_study(cfg) == rows);
  }

  SUBCASE("csv round trip")
  {
    std::ostringstream out;
    write_csv(out, rows);
    CHECK(out.str().starts_with("N,h,k,dof,error,order\n"));
    std::istringstream in(out.str());
    CHECK(read_csv(in) == rows);
  }

  SUBCASE("max over time is at least the final-time error")
  {
    auto max_cfg = cfg;
    max_cfg.error_measure = ErrorMeasure::MaxOverTime;
    const auto max_rows = run_convergence_study(max_cfg);
    CHECK(*max_rows[0].error >= *rows[0].error);
  }

  cfg.levels = 1;
  CHECK_THROWS_AS(run_convergence_study(cfg), ConfigError);
}

TEST_CASE("read_csv rejects malformed input")
{
  std::istringstream no_header("1,2,3,4,5,6\n");
  CHECK_THROWS_AS(read_csv(no_header), InvalidInput);
  std::istringstream short_row("N,h,k,dof,error,order\n1,2,3\n");
  CHECK_THROWS_AS(read_csv(short_row), InvalidInput);
  std::istringstream junk("N,h,k,dof,error,order\n1,x,3,4,,\n");
  CHECK_THROWS_AS(read_csv(junk), InvalidInput);
}
