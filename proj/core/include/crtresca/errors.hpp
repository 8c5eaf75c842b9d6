// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The crtresca Authors

#pragma once

#include <stdexcept>
#include <string>

namespace crtresca {

/// Invalid geometry, mesh or space input.
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Configuration validation failure. `field()` names the offending key.
class ConfigError : public std::runtime_error {
public:
  ConfigError(std::string field, const std::string& what)
      : std::runtime_error(field.empty() ? what : field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

private:
  std::string field_;
};

/// Numerical failure (non-SPD factorization, iteration cap reached).
class SolverError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace crtresca
