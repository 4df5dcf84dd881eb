// Copyright (c) 2026 The tailmix Authors.
// SPDX-License-Identifier: Apache-2.0

#include "tailmix/tuning.hpp"

#include <cmath>
#include <string>

#include "tailmix/error.hpp"

namespace tailmix {

namespace {

std::size_t rule_count(std::size_t m, const TuningConstants &tuning) {
  const double x = static_cast<double>(m) * std::log(std::log(static_cast<double>(m)));
  const double raw = tuning.c * std::pow(x, tuning.exponent);
  const double floored = std::floor(raw);
  if (floored < 1.0) return 1;
  return static_cast<std::size_t>(floored);
}

bool feasible(std::size_t m, std::size_t count) {
  // iota = kappa = count must leave the lower cut at or before the upper one.
  return count <= m && count + 1 <= m - count;
}

}  // namespace

void validate(const TuningConstants &tuning) {
  if (!(tuning.c > 0.0) || !std::isfinite(tuning.c)) {
    fail(ErrorKind::Tuning, "tuning constant c must be positive and finite");
  }
  if (!(tuning.exponent > 0.0) || !(tuning.exponent < 1.0)) {
    fail(ErrorKind::Tuning, "tuning exponent must lie strictly in (0, 1)");
  }
}

CutSelection cut_counts(std::size_t m, const TuningConstants &tuning) {
  validate(tuning);
  if (m < kMinCutSampleSize) {
    fail(ErrorKind::Tuning, "subsample size " + std::to_string(m) +
                                " is below the minimum " +
                                std::to_string(kMinCutSampleSize));
  }

  const std::size_t count = rule_count(m, tuning);
  if (!feasible(m, count)) {
    // The rule grows sublinearly, so a workable size always exists above;
    // name the smallest one to make the error actionable.
    std::size_t needed = m + 1;
    while (!feasible(needed, rule_count(needed, tuning))) ++needed;
    fail(ErrorKind::Tuning,
         "cut counts " + std::to_string(count) + " overlap in a subsample of size " +
             std::to_string(m) + "; smallest workable size is " +
             std::to_string(needed));
  }

  CutSelection out;
  out.iota = count;
  out.kappa = count;
  out.q_ell = static_cast<double>(count) / static_cast<double>(m);
  out.q_r = static_cast<double>(m - count) / static_cast<double>(m);
  return out;
}

ParetoRateAdvisory pareto_rate_exponent(double alpha_g, double alpha_h) {
  if (!(alpha_g > 0.0) || !(alpha_h > alpha_g) || !std::isfinite(alpha_h)) {
    fail(ErrorKind::Design,
         "tail exponents must satisfy alpha_h > alpha_g > 0");
  }
  ParetoRateAdvisory out;
  out.gamma_plus = (alpha_h - alpha_g) / (alpha_h - alpha_g / 2.0);
  const double c = alpha_h / alpha_g;
  out.beta_plus = 2.0 * (c - 1.0) / (2.0 * c - 1.0);
  return out;
}

}  // namespace tailmix
