// Copyright (c) 2026 The tailmix Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "tailmix/sample.hpp"

namespace tailmix {

// Lower and upper order-statistic cut points of a subsample.
//   ell = (iota+1)-th smallest value, r = (m-kappa)-th smallest value.
// The tie flags record whether the cut value repeats immediately above it,
// in which case the usual identities F_n(ell) = (iota+1)/m and
// 1 - F_n(r) = kappa/m pick up the extra tied mass.
struct OrderStatCuts {
  std::size_t iota = 0;
  std::size_t kappa = 1;
  double ell = 0.0;
  double r = 0.0;
  bool tie_at_ell = false;
  bool tie_at_r = false;
};

// Sorted copy of the outcomes carrying a given set of labels.  All empirical
// quantities (ECDF values, order statistics) are answered from this array.
class SortedSubset {
 public:
  SortedSubset(const Sample &sample, const LabelSet &labels);

  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<double> &values() const noexcept { return values_; }
  const LabelSet &labels() const noexcept { return labels_; }

  // Number of subset outcomes <= y.
  std::size_t count_leq(double y) const;

  // Right-continuous empirical CDF, count_leq(y) / size.
  double ecdf(double y) const;

  // k-th smallest value, 1-indexed; k must be in [1, size].
  double order_stat(std::size_t k) const;

  OrderStatCuts cuts(std::size_t iota, std::size_t kappa) const;

 private:
  LabelSet labels_;
  std::vector<double> values_;
};

// Shared, lazily-filled cache of SortedSubset instances over one sample.
// Estimators working on the same data reuse each other's sorts.  The view
// pointers stay valid for as long as the caller holds them.  Thread-safe.
class SubsetTable {
 public:
  explicit SubsetTable(const Sample &sample) : sample_(&sample) {}

  const Sample &sample() const noexcept { return *sample_; }

  std::shared_ptr<const SortedSubset> view(const LabelSet &labels) const;

 private:
  const Sample *sample_;
  mutable std::mutex mutex_;
  mutable std::map<LabelSet, std::shared_ptr<const SortedSubset>> cache_;
};

// One-shot conveniences over a plain sample.
double ecdf(const Sample &sample, const LabelSet &labels, double y);

// Validates the cut counts against the subsample size m: iota >= 0,
// kappa >= 1, and iota + 1 <= m - kappa so that ell precedes r.  Raises a
// Tuning error otherwise (signed parameters so negative inputs are caught).
OrderStatCuts order_stats(const Sample &sample, const LabelSet &labels,
                          long long iota, long long kappa);

}  // namespace tailmix
