// Copyright (c) 2026 The tailmix Authors.
// SPDX-License-Identifier: Apache-2.0

#include "tailmix/tail_ratio.hpp"

#include <cmath>
#include <limits>

#include "group_checks.hpp"
#include "tailmix/error.hpp"

namespace tailmix {

// Floating-point evaluation order in both estimators is fixed as
// (count/size) / (count/size); tests hold an independent implementation to
// exactly these expressions.

TailRatioEstimate zeta_minus_hat(const SubsetTable &table, const LabelSet &a,
                                 const LabelSet &b, std::size_t iota) {
  detail::require_disjoint_groups(table.sample(), a, b);
  auto va = table.view(a);
  auto vb = table.view(b);

  // kappa = 1 is the weakest upper-cut partner; it just enforces that the
  // lower cut leaves room at the top.
  const OrderStatCuts cuts = vb->cuts(iota, 1);

  const std::size_t na = va->size();
  const std::size_t nb = vb->size();
  const std::size_t ca = va->count_leq(cuts.ell);
  const std::size_t cb = vb->count_leq(cuts.ell);

  TailRatioEstimate out;
  out.side = TailSide::Left;
  out.cut_count = iota;
  out.cut_point = cuts.ell;
  out.tie_at_cut = cuts.tie_at_ell;
  out.zero_tail = ca == 0;

  const double fa = static_cast<double>(ca) / static_cast<double>(na);
  const double fb = static_cast<double>(cb) / static_cast<double>(nb);
  out.value = fa / fb;  // fb >= (iota+1)/nb > 0

  out.rho_hat = static_cast<double>(nb) / static_cast<double>(na);
  out.sigma2 = out.value * out.value + out.rho_hat * out.value;
  out.se = iota >= 1
               ? std::sqrt(out.sigma2 / static_cast<double>(iota))
               : std::numeric_limits<double>::quiet_NaN();
  return out;
}

TailRatioEstimate zeta_plus_hat(const SubsetTable &table, const LabelSet &a,
                                const LabelSet &b, std::size_t kappa) {
  detail::require_disjoint_groups(table.sample(), a, b);
  auto va = table.view(a);
  auto vb = table.view(b);

  const OrderStatCuts cuts = vb->cuts(0, kappa);

  const std::size_t na = va->size();
  const std::size_t nb = vb->size();
  const std::size_t ca = va->count_leq(cuts.r);
  const std::size_t cb = vb->count_leq(cuts.r);

  if (cb == nb) {
    fail(ErrorKind::DegenerateTail,
         "no mass above the upper cut in the reference group; the top " +
             std::to_string(kappa) + " order statistics are all tied");
  }

  TailRatioEstimate out;
  out.side = TailSide::Right;
  out.cut_count = kappa;
  out.cut_point = cuts.r;
  out.tie_at_cut = cuts.tie_at_r;
  out.zero_tail = ca == na;

  const double sa = static_cast<double>(na - ca) / static_cast<double>(na);
  const double sb = static_cast<double>(nb - cb) / static_cast<double>(nb);
  out.value = sa / sb;

  out.rho_hat = static_cast<double>(nb) / static_cast<double>(na);
  out.sigma2 = out.value * out.value + out.rho_hat * out.value;
  out.se = std::sqrt(out.sigma2 / static_cast<double>(kappa));
  return out;
}

TailRatioEstimate zeta_minus_hat(const Sample &sample, const LabelSet &a,
                                 const LabelSet &b, std::size_t iota) {
  SubsetTable table(sample);
  return zeta_minus_hat(table, a, b, iota);
}

TailRatioEstimate zeta_plus_hat(const Sample &sample, const LabelSet &a,
                                const LabelSet &b, std::size_t kappa) {
  SubsetTable table(sample);
  return zeta_plus_hat(table, a, b, kappa);
}

}  // namespace tailmix
