// Copyright (c) 2026 The tailmix Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Shared test fixtures.  `reference` holds deliberately naive estimators
// that repeat the library's floating-point expressions verbatim over plain
// unsorted arrays; the fast paths must match them bit for bit.  `quad` is
// an adaptive Simpson integrator used as the independent oracle for the
// distribution kernels.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <limits>
#include <string>
#include <vector>

#include "tailmix/rng.hpp"
#include "tailmix/sample.hpp"

namespace testsupport {

inline bool same_bits(double a, double b) {
  std::uint64_t ua = 0, ub = 0;
  std::memcpy(&ua, &a, sizeof a);
  std::memcpy(&ub, &b, sizeof b);
  return ua == ub;
}

inline tailmix::Sample make_sample(const std::vector<double> &y,
                                   const std::vector<std::string> &x) {
  std::vector<tailmix::Observation> obs;
  obs.reserve(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    obs.push_back(tailmix::Observation{y[i], x[i % x.size()]});
  }
  return tailmix::Sample::from_observations(std::move(obs));
}

// Random grouped dataset with the given per-label sizes; outcomes are a
// lumpy mix of two normal bumps so ties and tail shapes vary across cases.
inline tailmix::Sample random_sample(tailmix::RngStream &rng,
                                     const std::vector<std::string> &labels,
                                     const std::vector<std::size_t> &sizes,
                                     bool with_ties = false) {
  std::vector<tailmix::Observation> obs;
  for (std::size_t g = 0; g < labels.size(); ++g) {
    for (std::size_t i = 0; i < sizes[g]; ++i) {
      double y = rng.next_bernoulli(0.5) ? rng.next_normal()
                                         : 2.0 + 1.5 * rng.next_normal();
      if (with_ties && rng.next_bernoulli(0.3)) {
        y = std::floor(y * 4.0) / 4.0;  // quarter-unit rounding forces ties
      }
      obs.push_back(tailmix::Observation{y, labels[g]});
    }
  }
  return tailmix::Sample::from_observations(std::move(obs));
}

namespace reference {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

inline std::size_t count_leq(const std::vector<double> &v, double y) {
  std::size_t c = 0;
  for (double value : v) {
    if (value <= y) ++c;
  }
  return c;
}

inline double order_stat(std::vector<double> v, std::size_t k) {
  std::sort(v.begin(), v.end());
  return v[k - 1];
}

inline double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

// Cut-count rule, repeated arithmetic of the production rule.
inline std::size_t cut_count(std::size_t m, double c, double exponent) {
  const double x =
      static_cast<double>(m) * std::log(std::log(static_cast<double>(m)));
  const double raw = c * std::pow(x, exponent);
  const double floored = std::floor(raw);
  if (floored < 1.0) return 1;
  return static_cast<std::size_t>(floored);
}

struct Ratio {
  double value = 0.0;
  double cut_point = 0.0;
  double rho_hat = 1.0;
  double sigma2 = 0.0;
  double se = 0.0;
  bool zero_tail = false;
  bool degenerate = false;  // right tail only: no B-mass above the cut
};

// F_n(ell | a) / F_n(ell | b), ell the (iota+1)-th smallest b-outcome.
inline Ratio zeta_minus(const std::vector<double> &ya,
                        const std::vector<double> &yb, std::size_t iota) {
  Ratio out;
  out.cut_point = order_stat(yb, iota + 1);
  const std::size_t na = ya.size();
  const std::size_t nb = yb.size();
  const std::size_t ca = count_leq(ya, out.cut_point);
  const std::size_t cb = count_leq(yb, out.cut_point);
  out.zero_tail = ca == 0;
  const double fa = static_cast<double>(ca) / static_cast<double>(na);
  const double fb = static_cast<double>(cb) / static_cast<double>(nb);
  out.value = fa / fb;
  out.rho_hat = static_cast<double>(nb) / static_cast<double>(na);
  out.sigma2 = out.value * out.value + out.rho_hat * out.value;
  out.se = iota >= 1 ? std::sqrt(out.sigma2 / static_cast<double>(iota)) : kNaN;
  return out;
}

// (1 - F_n(r | a)) / (1 - F_n(r | b)), r the (m-kappa)-th smallest b-outcome.
inline Ratio zeta_plus(const std::vector<double> &ya,
                       const std::vector<double> &yb, std::size_t kappa) {
  Ratio out;
  const std::size_t na = ya.size();
  const std::size_t nb = yb.size();
  out.cut_point = order_stat(yb, nb - kappa);
  const std::size_t ca = count_leq(ya, out.cut_point);
  const std::size_t cb = count_leq(yb, out.cut_point);
  if (cb == nb) {
    out.degenerate = true;
    return out;
  }
  out.zero_tail = ca == na;
  const double sa = static_cast<double>(na - ca) / static_cast<double>(na);
  const double sb = static_cast<double>(nb - cb) / static_cast<double>(nb);
  out.value = sa / sb;
  out.rho_hat = static_cast<double>(nb) / static_cast<double>(na);
  out.sigma2 = out.value * out.value + out.rho_hat * out.value;
  out.se = std::sqrt(out.sigma2 / static_cast<double>(kappa));
  return out;
}

struct Lambda {
  bool ok = false;  // false when the ratio denominator degenerates
  double lambda = 0.0;
  double lambda_clipped = 0.0;
  double se = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::size_t iota = 0;
  std::size_t kappa = 0;
};

// Mixing proportion of the `own` group against `rest`, cuts on `own`.
inline Lambda lambda_from(const std::vector<double> &rest,
                          const std::vector<double> &own, double c,
                          double exponent) {
  Lambda out;
  const std::size_t count = cut_count(own.size(), c, exponent);
  out.iota = count;
  out.kappa = count;
  const Ratio zm = zeta_minus(rest, own, count);
  const Ratio zp = zeta_plus(rest, own, count);
  if (zp.degenerate) return out;
  const double denom = zp.value - zm.value;
  if (std::fabs(denom) < 1e-10) return out;
  out.ok = true;
  out.lambda = (1.0 - zm.value) / denom;
  out.lambda_clipped = clamp01(out.lambda);
  const double d2 = denom * denom;
  const double d_minus = (1.0 - zp.value) / d2;
  const double d_plus = (zm.value - 1.0) / d2;
  const double var = d_minus * d_minus * zm.sigma2 / static_cast<double>(count) +
                     d_plus * d_plus * zp.sigma2 / static_cast<double>(count);
  out.se = std::sqrt(var);
  out.ci_low = clamp01(out.lambda - 1.96 * out.se);
  out.ci_high = clamp01(out.lambda + 1.96 * out.se);
  return out;
}

struct Curves {
  bool ok = false;  // false when a needed ratio sits at one or degenerates
  std::vector<double> g, h;
  std::vector<double> g_se, h_se;
  std::vector<double> g_lo, g_hi, h_lo, h_hi;
  std::vector<double> g_jacobian, h_jacobian;
};

// Component curves from the pair (a, b) on an explicit grid, cuts on a.
inline Curves component_curves(const std::vector<double> &ya,
                               const std::vector<double> &yb,
                               const std::vector<double> &grid, double c,
                               double exponent) {
  Curves out;
  const std::size_t count = cut_count(ya.size(), c, exponent);
  const Ratio zm = zeta_minus(yb, ya, count);
  const Ratio zp = zeta_plus(yb, ya, count);
  if (zp.degenerate || std::fabs(zm.value - 1.0) < 1e-10 ||
      std::fabs(zp.value - 1.0) < 1e-10) {
    return out;
  }
  out.ok = true;
  const double na = static_cast<double>(ya.size());
  const double nb = static_cast<double>(yb.size());
  const double one_minus_zm = 1.0 - zm.value;
  const double one_minus_zp = 1.0 - zp.value;
  for (double y : grid) {
    const double fa = static_cast<double>(count_leq(ya, y)) / na;
    const double fb = static_cast<double>(count_leq(yb, y)) / nb;
    const double diff = fa - fb;

    double value = fa - diff / one_minus_zm;
    double jac = diff / (one_minus_zm * one_minus_zm);
    double se = std::fabs(jac) * zm.se;
    out.g.push_back(value);
    out.g_jacobian.push_back(jac);
    out.g_se.push_back(se);
    out.g_lo.push_back(clamp01(value - 1.96 * se));
    out.g_hi.push_back(clamp01(value + 1.96 * se));

    value = fa - diff / one_minus_zp;
    jac = diff / (one_minus_zp * one_minus_zp);
    se = std::fabs(jac) * zp.se;
    out.h.push_back(value);
    out.h_jacobian.push_back(jac);
    out.h_se.push_back(se);
    out.h_lo.push_back(clamp01(value - 1.96 * se));
    out.h_hi.push_back(clamp01(value + 1.96 * se));
  }
  return out;
}

}  // namespace reference

namespace quad {

template <class F>
double adaptive_step(F &f, double a, double b, double fa, double fm, double fb,
                     double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <class F>
double integrate(F f, double a, double b, double tol = 1e-12) {
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_step(f, a, b, fa, fm, fb, whole, tol, 48);
}

}  // namespace quad

// One-sample Kolmogorov-Smirnov statistic against a cdf functor.
template <class Cdf>
double ks_statistic(std::vector<double> draws, Cdf cdf) {
  std::sort(draws.begin(), draws.end());
  const double n = static_cast<double>(draws.size());
  double d = 0.0;
  for (std::size_t i = 0; i < draws.size(); ++i) {
    const double f = cdf(draws[i]);
    const double hi = static_cast<double>(i + 1) / n - f;
    const double lo = f - static_cast<double>(i) / n;
    d = std::max(d, std::max(hi, lo));
  }
  return d;
}

}  // namespace testsupport
