// Copyright (c) 2026 The tailmix Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>

#include "tailmix/empirical.hpp"
#include "tailmix/sample.hpp"

namespace tailmix {

enum class TailSide { Left, Right };

// One tail-ratio estimate between two disjoint label groups (A, B).
//
// Left:   zeta = F_n(ell | A) / F_n(ell | B),  ell the (iota+1)-th smallest
//         outcome in B.
// Right:  zeta = (1 - F_n(r | A)) / (1 - F_n(r | B)),  r the (m-kappa)-th
//         smallest outcome in B.
//
// The cut point always comes from the second group, whose ECDF is thereby
// pinned to (iota+1)/m resp. kappa/m at the cut (up to ties).
struct TailRatioEstimate {
  TailSide side = TailSide::Left;
  double value = 0.0;

  std::size_t cut_count = 0;  // iota (left) or kappa (right)
  double cut_point = 0.0;     // ell or r

  // Plug-in pieces of the asymptotic variance: rho_hat = n_B / n_A,
  // sigma2 = zeta^2 + rho_hat * zeta, se = sqrt(sigma2 / cut_count).
  double rho_hat = 1.0;
  double sigma2 = 0.0;
  double se = 0.0;  // NaN when cut_count == 0

  bool zero_tail = false;   // no A-outcomes beyond the cut; zeta is exactly 0
  bool tie_at_cut = false;  // the cut order statistic repeats above it
};

// Left-tail ratio with iota lower order statistics of the B-subsample cut
// off.  A and B must be nonempty, disjoint, and drawn from the sample's
// labels (Partition error).  Cut feasibility follows the empirical module's
// rules (Tuning error).
TailRatioEstimate zeta_minus_hat(const SubsetTable &table, const LabelSet &a,
                                 const LabelSet &b, std::size_t iota);

// Right-tail analogue with kappa upper order statistics cut off.  Raises
// DegenerateTail if every B-outcome above the cut is tied down to it so the
// denominator 1 - F_n(r | B) vanishes.
TailRatioEstimate zeta_plus_hat(const SubsetTable &table, const LabelSet &a,
                                const LabelSet &b, std::size_t kappa);

TailRatioEstimate zeta_minus_hat(const Sample &sample, const LabelSet &a,
                                 const LabelSet &b, std::size_t iota);
TailRatioEstimate zeta_plus_hat(const Sample &sample, const LabelSet &a,
                                const LabelSet &b, std::size_t kappa);

}  // namespace tailmix
