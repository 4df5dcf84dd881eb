// Copyright (c) 2026 The tailmix Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "tailmix/rng.hpp"

namespace tailmix {

// Location-scale skew-normal law with density
//   f(x) = (2/sigma) phi(z) Phi(beta z),  z = (x - mu) / sigma.
// beta = 0 recovers the normal distribution; the sign of beta flips the
// direction of skew.
struct SkewNormalParams {
  double mu = 0.0;
  double sigma = 1.0;
  double beta = 0.0;
};

// mu, beta finite and sigma positive finite; Design error otherwise.
void validate(const SkewNormalParams &params);

double skew_normal_pdf(const SkewNormalParams &params, double y);

// CDF via Phi(z) - 2 T(z, beta) with Owen's T function.
double skew_normal_cdf(const SkewNormalParams &params, double y);

struct SkewNormalMoments {
  double mean = 0.0;
  double variance = 1.0;
};

// mean = mu + sigma delta sqrt(2/pi), variance = sigma^2 (1 - 2 delta^2/pi),
// delta = beta / sqrt(1 + beta^2).
SkewNormalMoments skew_normal_moments(const SkewNormalParams &params);

// Exact draw from the two-normal representation
//   X = mu + sigma (delta |U0| + sqrt(1 - delta^2) U1),  U0, U1 iid N(0,1).
double skew_normal_draw(const SkewNormalParams &params, RngStream &rng);

std::vector<double> skew_normal_sample(const SkewNormalParams &params,
                                       RngStream &rng, std::size_t count);

}  // namespace tailmix
