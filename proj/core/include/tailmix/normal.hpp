// Copyright (c) 2026 The tailmix Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace tailmix {

double norm_pdf(double z);

// Standard normal CDF via erfc, accurate in both tails.
double norm_cdf(double z);

// Inverse standard normal CDF (Wichura's AS 241, double precision).
// p must lie in (0, 1); Design error otherwise.
double norm_quantile(double p);

}  // namespace tailmix
