// Copyright (c) 2026 The tailmix Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace tailmix {

// Owen's T function,
//   T(h, a) = (1/2pi) * Int_0^a exp(-h^2 (1+x^2) / 2) / (1+x^2) dx.
// Evaluated by fixed-order Gauss-Legendre quadrature after reducing |a| to
// [0, 1] with T(h, a) + T(ah, 1/a) = (Phi(h) + Phi(ah))/2 - Phi(h) Phi(ah),
// using T(0, a) = arctan(a) / 2pi and oddness in a, evenness in h.
// Absolute accuracy is well below 1e-10 over the parameter ranges used here.
double owens_t(double h, double a);

}  // namespace tailmix
