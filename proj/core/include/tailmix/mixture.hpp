// Copyright (c) 2026 The tailmix Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tailmix/empirical.hpp"
#include "tailmix/sample.hpp"
#include "tailmix/tail_ratio.hpp"
#include "tailmix/tuning.hpp"

namespace tailmix {

inline constexpr double kDegenerateRatioTol = 1e-10;
inline constexpr double kBandZ = 1.96;

// Sensitivities of lambda = (1 - zm) / (zp - zm) to the two tail ratios:
//   d_minus = (1 - zp) / (zp - zm)^2,  d_plus = (zm - 1) / (zp - zm)^2.
struct MixingJacobians {
  double d_minus = 0.0;
  double d_plus = 0.0;
};

// zp == zm raises DegenerateDenominator.
MixingJacobians jacobians(double zeta_minus, double zeta_plus);

// Mixing proportion attached to one label value x, estimated from the tail
// ratios of (everything else, {x}).
struct MixingProportionEstimate {
  std::string x;

  double lambda = 0.0;          // raw point estimate, may leave [0, 1]
  double lambda_clipped = 0.0;  // clamped to [0, 1]
  double se = 0.0;
  double ci_low = 0.0;   // lambda -/+ 1.96 se, clipped to [0, 1]
  double ci_high = 0.0;

  std::size_t iota = 0;
  std::size_t kappa = 0;
  double q_ell = 0.0;
  double q_r = 1.0;

  TailRatioEstimate zeta_minus;
  TailRatioEstimate zeta_plus;
  MixingJacobians sensitivities;
};

// lambda_n(x) = (1 - zeta_minus(A, x)) / (zeta_plus(A, x) - zeta_minus(A, x))
// with A = all other labels and cut counts from `tuning` applied to n_x.
// Errors: unknown x or no other labels (Partition); n_x or n_A below
// min_subset (SampleSize); |zeta_plus - zeta_minus| < 1e-10
// (DegenerateDenominator).
MixingProportionEstimate lambda_hat(
    const SubsetTable &table, const std::string &x, const TuningConstants &tuning = {},
    std::size_t min_subset = kDefaultMinSubsetSize);

MixingProportionEstimate lambda_hat(
    const Sample &sample, const std::string &x, const TuningConstants &tuning = {},
    std::size_t min_subset = kDefaultMinSubsetSize);

enum class ComponentKind { G, H };

// Component CDF estimates over a grid, from the pair of groups (A, B):
//   G_n(y) = F_n(y|A) - (F_n(y|A) - F_n(y|B)) / (1 - zeta_minus(B, A)),
//   H_n(y) = F_n(y|A) - (F_n(y|A) - F_n(y|B)) / (1 - zeta_plus(B, A)),
// with both tail ratios cut on the A-subsample.  Values are reported raw
// (antitone overshoots are informative); bands are value +- 1.96 se clipped
// to [0, 1].
struct ComponentCdfEstimate {
  LabelSet a;
  LabelSet b;
  std::vector<double> grid;

  bool has_g = false;
  bool has_h = false;

  std::vector<double> g;
  std::vector<double> h;
  std::vector<double> g_se;
  std::vector<double> h_se;
  std::vector<double> g_lo, g_hi;
  std::vector<double> h_lo, h_hi;

  // Signed per-point sensitivities to the respective tail ratio,
  //   d(y) = (F_n(y|A) - F_n(y|B)) / (1 - zeta)^2.
  std::vector<double> g_jacobian;
  std::vector<double> h_jacobian;

  std::size_t iota = 0;   // cut counts on the A-subsample
  std::size_t kappa = 0;
  std::optional<TailRatioEstimate> zeta_minus;  // zeta_minus(B, A)
  std::optional<TailRatioEstimate> zeta_plus;   // zeta_plus(B, A)
};

// Two-sided estimate; A and B must partition the sample's labels.  The
// default grid is the sorted unique pooled outcomes of A and B.  Errors:
// Partition, SampleSize (subsets below min_subset), DegenerateWeight when a
// needed tail ratio is within 1e-10 of one, Data for a non-ascending grid.
ComponentCdfEstimate component_cdfs(
    const SubsetTable &table, const LabelSet &a, const LabelSet &b,
    const TuningConstants &tuning = {},
    const std::optional<std::vector<double>> &grid = std::nullopt,
    std::size_t min_subset = kDefaultMinSubsetSize);

// One-sided variant for when only one tail-dominance direction is credible:
// side == Right estimates H only (upper-tail ratio), side == Left estimates
// G only.  Shares the two-sided code path, so the side it fills is
// bit-identical to the corresponding half of component_cdfs.
ComponentCdfEstimate component_cdf_one_sided(
    const SubsetTable &table, const LabelSet &a, const LabelSet &b,
    TailSide side, const TuningConstants &tuning = {},
    const std::optional<std::vector<double>> &grid = std::nullopt,
    std::size_t min_subset = kDefaultMinSubsetSize);

// Same estimator for disjoint groups that need not cover every label; used
// by the over-identification test, where (A, B) and (A, C) each leave the
// third group out.
ComponentCdfEstimate component_cdfs_disjoint(
    const SubsetTable &table, const LabelSet &a, const LabelSet &b,
    const TuningConstants &tuning = {},
    const std::optional<std::vector<double>> &grid = std::nullopt,
    std::size_t min_subset = kDefaultMinSubsetSize, bool want_g = true,
    bool want_h = true);

// Step-function evaluation of a stored component curve at arbitrary y
// (value at the largest grid point <= y, 0 before the grid starts).
double step_eval(const ComponentCdfEstimate &estimate, ComponentKind which,
                 double y);

// Mixing proportions of the two groups implied by a component estimate:
//   lambda(A) = (1 - zm) / (zp - zm),  lambda(B) = lambda(A) * zp.
// Requires a two-sided estimate.
std::pair<double, double> implied_group_lambdas(
    const ComponentCdfEstimate &estimate);

}  // namespace tailmix
