// Copyright (c) 2026 The tailmix Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace tailmix {

// Failure categories raised by the library.  The command-line tool maps
// usage-level kinds to exit code 2 and data-degeneracy kinds to exit code 3.
enum class ErrorKind {
  Schema,       // malformed input file or missing column
  Data,         // unusable row content (non-finite y, empty label, ...)
  EmptyInput,   // no data rows at all
  Partition,    // label sets empty, overlapping, unknown, or not covering
  Tuning,       // invalid tuning constants or infeasible cut counts
  SampleSize,   // a subsample is below the configured minimum
  Weight,       // weight function produced a non-finite value
  Design,       // invalid simulation design or distribution parameters
  Io,           // file could not be read or written

  DegenerateTail,         // empty upper tail at the cut, ratio undefined
  DegenerateDenominator,  // tail ratios too close for the mixing proportion
  DegenerateWeight,       // tail ratio within tolerance of one
  DegenerateVariance,     // non-positive plug-in variance in the test
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string &message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string &message) {
  throw Error(kind, message);
}

// Degenerate conditions are properties of the data at hand, not of how the
// caller posed the problem; the CLI reports them under a separate exit code.
inline bool is_degenerate(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DegenerateTail:
    case ErrorKind::DegenerateDenominator:
    case ErrorKind::DegenerateWeight:
    case ErrorKind::DegenerateVariance:
      return true;
    default:
      return false;
  }
}

inline const char *error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Schema: return "schema";
    case ErrorKind::Data: return "data";
    case ErrorKind::EmptyInput: return "empty-input";
    case ErrorKind::Partition: return "partition";
    case ErrorKind::Tuning: return "tuning";
    case ErrorKind::SampleSize: return "sample-size";
    case ErrorKind::Weight: return "weight";
    case ErrorKind::Design: return "design";
    case ErrorKind::Io: return "io";
    case ErrorKind::DegenerateTail: return "degenerate-tail";
    case ErrorKind::DegenerateDenominator: return "degenerate-denominator";
    case ErrorKind::DegenerateWeight: return "degenerate-weight";
    case ErrorKind::DegenerateVariance: return "degenerate-variance";
  }
  return "unknown";
}

}  // namespace tailmix
