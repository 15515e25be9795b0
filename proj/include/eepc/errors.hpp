// SPDX-License-Identifier: Apache-2.0
//
// eepc: energy-efficient power control simulator
// Copyright (C) 2026 eepc contributors

#pragma once

#include <stdexcept>
#include <string>

namespace eepc {

/// Thrown when an operation is asked of a model kind that has no pointwise
/// form (the Shannon mode is handled entirely by closed-form expressions).
struct unsupported_operation : std::logic_error {
  explicit unsupported_operation(const std::string& what) : std::logic_error(what) {}
};

/// Violated caller-side precondition (bad argument value).
struct precondition_error : std::invalid_argument {
  explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Root finder was handed an interval without a sign change.
struct bracket_error : std::runtime_error {
  explicit bracket_error(const std::string& what) : std::runtime_error(what) {}
};

/// Model lacks the structure the operation needs (e.g. no interior
/// second-derivative maximum).
struct degenerate_model_error : std::runtime_error {
  explicit degenerate_model_error(const std::string& what) : std::runtime_error(what) {}
};

/// Scenario file could not be parsed; carries the offending line number.
struct config_error : std::runtime_error {
  config_error(const std::string& what, int line_no)
      : std::runtime_error(what + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
  explicit config_error(const std::string& what) : std::runtime_error(what), line(0) {}
  int line;
};

}  // namespace eepc
