// Copyright (c) 2026 The tailmix Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>

namespace tailmix {

// Constants of the cut-count rule  iota = kappa = max(1, floor(c * (m ln ln m)^exponent)).
// The exponent stays strictly inside (0, 1); c scales how deep into the
// tails the ratio estimators look.
struct TuningConstants {
  double c = 0.5;
  double exponent = 0.6;
};

void validate(const TuningConstants &tuning);

// Cut counts plus the tail quantile levels they correspond to:
// q_ell = iota / m and q_r = (m - kappa) / m.
struct CutSelection {
  std::size_t iota = 1;
  std::size_t kappa = 1;
  double q_ell = 0.0;
  double q_r = 1.0;
};

// Smallest subsample the rule accepts (ln ln m must be comfortably positive).
inline constexpr std::size_t kMinCutSampleSize = 16;

// Default floor on subsample sizes for the estimation entry points.
inline constexpr std::size_t kDefaultMinSubsetSize = 50;

// Applies the rule to a subsample of size m.  Raises Tuning when the
// constants are invalid, when m < kMinCutSampleSize, or when the resulting
// cuts overlap (the message then names the smallest workable m).
CutSelection cut_counts(std::size_t m, const TuningConstants &tuning = {});

// Rate guidance for heavy-tailed components.  With right-tail survival
// exponents alpha_g < alpha_h (the identified component has the fatter
// upper tail), the optimal growth exponent for kappa is
//   gamma = (alpha_h - alpha_g) / (alpha_h - alpha_g / 2),
// and expressed through the tail-index ratio c = alpha_h / alpha_g,
//   beta = 2 (c - 1) / (2 c - 1).
struct ParetoRateAdvisory {
  double gamma_plus = 0.0;
  double beta_plus = 0.0;
};

// Requires alpha_h > alpha_g > 0; Design error otherwise.
ParetoRateAdvisory pareto_rate_exponent(double alpha_g, double alpha_h);

}  // namespace tailmix
