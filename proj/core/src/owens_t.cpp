// Copyright (c) 2026 The tailmix Authors.
// SPDX-License-Identifier: Apache-2.0

#include "tailmix/owens_t.hpp"

#include <array>
#include <cmath>

#include "tailmix/normal.hpp"

namespace tailmix {

namespace {

constexpr int kGaussOrder = 64;
constexpr double kTwoPi = 6.2831853071795864769;

struct GaussRule {
  std::array<double, kGaussOrder> node;    // on (0, 1)
  std::array<double, kGaussOrder> weight;
};

// Gauss-Legendre nodes by Newton iteration on P_n; computed once, exactly
// reproducible, accurate to machine precision.
GaussRule build_gauss_rule() {
  GaussRule rule;
  const int n = kGaussOrder;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Chebyshev-like initial guess for the i-th root of P_n on (-1, 1).
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // Recurrence for P_n(x) and derivative.
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    // Map from (-1, 1) to (0, 1); fill the symmetric pair.
    rule.node[i] = 0.5 * (1.0 - x);
    rule.weight[i] = 0.5 * w;
    rule.node[n - 1 - i] = 0.5 * (1.0 + x);
    rule.weight[n - 1 - i] = 0.5 * w;
  }
  return rule;
}

const GaussRule &gauss_rule() {
  static const GaussRule rule = build_gauss_rule();
  return rule;
}

// Core integral for h >= 0 and 0 <= a <= 1.
double owens_t_core(double h, double a) {
  if (a == 0.0) return 0.0;
  if (h == 0.0) return std::atan(a) / kTwoPi;

  const GaussRule &rule = gauss_rule();
  const double hh = -0.5 * h * h;
  double sum = 0.0;
  for (int i = 0; i < kGaussOrder; ++i) {
    const double x = a * rule.node[i];
    const double x2 = x * x;
    sum += rule.weight[i] * std::exp(hh * (1.0 + x2)) / (1.0 + x2);
  }
  return a * sum / kTwoPi;
}

}  // namespace

double owens_t(double h, double a) {
  h = std::fabs(h);  // T is even in h
  double sign = 1.0;
  if (a < 0.0) {     // and odd in a
    a = -a;
    sign = -1.0;
  }
  if (a <= 1.0) return sign * owens_t_core(h, a);

  // Reduce a > 1 with T(h,a) = Phi(h)/2 + Phi(ah)/2 - Phi(h) Phi(ah) - T(ah, 1/a).
  const double ah = a * h;
  const double ph = norm_cdf(h);
  const double pah = norm_cdf(ah);
  const double reduced = 0.5 * (ph + pah) - ph * pah - owens_t_core(ah, 1.0 / a);
  return sign * reduced;
}

}  // namespace tailmix
