// Copyright (c) 2026 The tailmix Authors.
// SPDX-License-Identifier: Apache-2.0

#include "tailmix/mixture.hpp"

#include <algorithm>
#include <cmath>

#include "group_checks.hpp"
#include "tailmix/error.hpp"

namespace tailmix {

namespace {

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

void require_min_size(const char *name, std::size_t size, std::size_t min_subset) {
  if (size < min_subset) {
    fail(ErrorKind::SampleSize, std::string(name) + "-group has " +
                                    std::to_string(size) + " observations, need at least " +
                                    std::to_string(min_subset));
  }
}

std::vector<double> pooled_unique_grid(const SortedSubset &va, const SortedSubset &vb) {
  std::vector<double> grid;
  grid.reserve(va.size() + vb.size());
  std::merge(va.values().begin(), va.values().end(), vb.values().begin(),
             vb.values().end(), std::back_inserter(grid));
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

}  // namespace

MixingJacobians jacobians(double zeta_minus, double zeta_plus) {
  const double d = zeta_plus - zeta_minus;
  if (d == 0.0) {
    fail(ErrorKind::DegenerateDenominator, "tail ratios coincide");
  }
  const double d2 = d * d;
  MixingJacobians out;
  out.d_minus = (1.0 - zeta_plus) / d2;
  out.d_plus = (zeta_minus - 1.0) / d2;
  return out;
}

MixingProportionEstimate lambda_hat(const SubsetTable &table, const std::string &x,
                                    const TuningConstants &tuning,
                                    std::size_t min_subset) {
  const Sample &sample = table.sample();
  if (!sample.has_label(x)) {
    fail(ErrorKind::Partition, "label '" + x + "' not present in sample");
  }
  const LabelSet own{x};
  const LabelSet rest = sample.complement(own);
  if (rest.empty()) {
    fail(ErrorKind::Partition,
         "sample has a single label; the mixing proportion is not identified");
  }

  const std::size_t n_x = sample.subset_count(own);
  const std::size_t n_rest = sample.subset_count(rest);
  require_min_size("x", n_x, min_subset);
  require_min_size("complement", n_rest, min_subset);

  // Both ratios cut on the {x} subsample.
  const CutSelection cuts = cut_counts(n_x, tuning);
  const TailRatioEstimate zm = zeta_minus_hat(table, rest, own, cuts.iota);
  const TailRatioEstimate zp = zeta_plus_hat(table, rest, own, cuts.kappa);

  const double denom = zp.value - zm.value;
  if (std::fabs(denom) < kDegenerateRatioTol) {
    fail(ErrorKind::DegenerateDenominator,
         "tail ratios nearly coincide (" + std::to_string(zm.value) + " vs " +
             std::to_string(zp.value) +
         "); the grouping variable may not move the mixture");
  }

  MixingProportionEstimate out;
  out.x = x;
  out.lambda = (1.0 - zm.value) / denom;
  out.lambda_clipped = clamp01(out.lambda);
  out.sensitivities = jacobians(zm.value, zp.value);

  const double var =
      out.sensitivities.d_minus * out.sensitivities.d_minus * zm.sigma2 /
          static_cast<double>(cuts.iota) +
      out.sensitivities.d_plus * out.sensitivities.d_plus * zp.sigma2 /
          static_cast<double>(cuts.kappa);
  out.se = std::sqrt(var);
  out.ci_low = clamp01(out.lambda - kBandZ * out.se);
  out.ci_high = clamp01(out.lambda + kBandZ * out.se);

  out.iota = cuts.iota;
  out.kappa = cuts.kappa;
  out.q_ell = cuts.q_ell;
  out.q_r = cuts.q_r;
  out.zeta_minus = zm;
  out.zeta_plus = zp;
  return out;
}

MixingProportionEstimate lambda_hat(const Sample &sample, const std::string &x,
                                    const TuningConstants &tuning,
                                    std::size_t min_subset) {
  SubsetTable table(sample);
  return lambda_hat(table, x, tuning, min_subset);
}

ComponentCdfEstimate component_cdfs_disjoint(
    const SubsetTable &table, const LabelSet &a, const LabelSet &b,
    const TuningConstants &tuning, const std::optional<std::vector<double>> &grid,
    std::size_t min_subset, bool want_g, bool want_h) {
  const Sample &sample = table.sample();
  detail::require_disjoint_groups(sample, a, b);

  auto va = table.view(a);
  auto vb = table.view(b);
  require_min_size("a", va->size(), min_subset);
  require_min_size("b", vb->size(), min_subset);

  ComponentCdfEstimate out;
  out.a = a;
  out.b = b;
  out.has_g = want_g;
  out.has_h = want_h;

  // Cuts always sit on the A-subsample: the ratios feeding this estimator
  // are zeta(B, A), whose reference group is A.
  const CutSelection cuts = cut_counts(va->size(), tuning);
  out.iota = cuts.iota;
  out.kappa = cuts.kappa;

  if (want_g) {
    out.zeta_minus = zeta_minus_hat(table, b, a, cuts.iota);
    if (std::fabs(out.zeta_minus->value - 1.0) < kDegenerateRatioTol) {
      fail(ErrorKind::DegenerateWeight,
           "left tail ratio is within tolerance of one; the groups' lower "
           "tails are indistinguishable");
    }
  }
  if (want_h) {
    out.zeta_plus = zeta_plus_hat(table, b, a, cuts.kappa);
    if (std::fabs(out.zeta_plus->value - 1.0) < kDegenerateRatioTol) {
      fail(ErrorKind::DegenerateWeight,
           "right tail ratio is within tolerance of one; the groups' upper "
           "tails are indistinguishable");
    }
  }

  if (grid) {
    for (std::size_t i = 1; i < grid->size(); ++i) {
      if (!((*grid)[i] > (*grid)[i - 1])) {
        fail(ErrorKind::Data, "evaluation grid must be strictly ascending");
      }
    }
    out.grid = *grid;
  } else {
    out.grid = pooled_unique_grid(*va, *vb);
  }

  const std::size_t points = out.grid.size();
  const double na = static_cast<double>(va->size());
  const double nb = static_cast<double>(vb->size());
  if (want_g) {
    out.g.resize(points);
    out.g_se.resize(points);
    out.g_lo.resize(points);
    out.g_hi.resize(points);
    out.g_jacobian.resize(points);
  }
  if (want_h) {
    out.h.resize(points);
    out.h_se.resize(points);
    out.h_lo.resize(points);
    out.h_hi.resize(points);
    out.h_jacobian.resize(points);
  }

  const double one_minus_zm = want_g ? 1.0 - out.zeta_minus->value : 0.0;
  const double one_minus_zp = want_h ? 1.0 - out.zeta_plus->value : 0.0;

  for (std::size_t i = 0; i < points; ++i) {
    const double y = out.grid[i];
    const double fa = static_cast<double>(va->count_leq(y)) / na;
    const double fb = static_cast<double>(vb->count_leq(y)) / nb;
    const double diff = fa - fb;

    if (want_g) {
      const double value = fa - diff / one_minus_zm;
      const double jac = diff / (one_minus_zm * one_minus_zm);
      const double se = std::fabs(jac) * out.zeta_minus->se;
      out.g[i] = value;
      out.g_jacobian[i] = jac;
      out.g_se[i] = se;
      out.g_lo[i] = clamp01(value - kBandZ * se);
      out.g_hi[i] = clamp01(value + kBandZ * se);
    }
    if (want_h) {
      const double value = fa - diff / one_minus_zp;
      const double jac = diff / (one_minus_zp * one_minus_zp);
      const double se = std::fabs(jac) * out.zeta_plus->se;
      out.h[i] = value;
      out.h_jacobian[i] = jac;
      out.h_se[i] = se;
      out.h_lo[i] = clamp01(value - kBandZ * se);
      out.h_hi[i] = clamp01(value + kBandZ * se);
    }
  }
  return out;
}

ComponentCdfEstimate component_cdfs(const SubsetTable &table, const LabelSet &a,
                                    const LabelSet &b, const TuningConstants &tuning,
                                    const std::optional<std::vector<double>> &grid,
                                    std::size_t min_subset) {
  Partition partition{a, b, std::nullopt};
  validate_partition(table.sample(), partition, /*require_cover=*/true);
  return component_cdfs_disjoint(table, a, b, tuning, grid, min_subset, true, true);
}

ComponentCdfEstimate component_cdf_one_sided(
    const SubsetTable &table, const LabelSet &a, const LabelSet &b, TailSide side,
    const TuningConstants &tuning, const std::optional<std::vector<double>> &grid,
    std::size_t min_subset) {
  Partition partition{a, b, std::nullopt};
  validate_partition(table.sample(), partition, /*require_cover=*/true);
  const bool want_g = side == TailSide::Left;
  return component_cdfs_disjoint(table, a, b, tuning, grid, min_subset, want_g,
                                 !want_g);
}

double step_eval(const ComponentCdfEstimate &estimate, ComponentKind which,
                 double y) {
  const std::vector<double> &values =
      which == ComponentKind::G ? estimate.g : estimate.h;
  if ((which == ComponentKind::G && !estimate.has_g) ||
      (which == ComponentKind::H && !estimate.has_h)) {
    fail(ErrorKind::Data, "estimate does not carry the requested component");
  }
  const auto it =
      std::upper_bound(estimate.grid.begin(), estimate.grid.end(), y);
  if (it == estimate.grid.begin()) return 0.0;
  return values[static_cast<std::size_t>(it - estimate.grid.begin()) - 1];
}

std::pair<double, double> implied_group_lambdas(const ComponentCdfEstimate &estimate) {
  if (!estimate.zeta_minus || !estimate.zeta_plus) {
    fail(ErrorKind::Data, "implied mixing proportions need a two-sided estimate");
  }
  const double zm = estimate.zeta_minus->value;
  const double zp = estimate.zeta_plus->value;
  const double denom = zp - zm;
  if (std::fabs(denom) < kDegenerateRatioTol) {
    fail(ErrorKind::DegenerateDenominator, "tail ratios nearly coincide");
  }
  const double lambda_a = (1.0 - zm) / denom;
  return {lambda_a, lambda_a * zp};
}

}  // namespace tailmix
