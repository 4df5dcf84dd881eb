// Copyright (c) 2026 The tailmix Authors.
// SPDX-License-Identifier: Apache-2.0

#include "tailmix/empirical.hpp"

#include <algorithm>
#include <string>

#include "tailmix/error.hpp"

namespace tailmix {

SortedSubset::SortedSubset(const Sample &sample, const LabelSet &labels)
    : labels_(labels), values_(subset_view(sample, labels)) {
  std::sort(values_.begin(), values_.end());
}

std::size_t SortedSubset::count_leq(double y) const {
  return static_cast<std::size_t>(
      std::upper_bound(values_.begin(), values_.end(), y) - values_.begin());
}

double SortedSubset::ecdf(double y) const {
  return static_cast<double>(count_leq(y)) / static_cast<double>(values_.size());
}

double SortedSubset::order_stat(std::size_t k) const {
  if (k < 1 || k > values_.size()) {
    fail(ErrorKind::Tuning, "order statistic index " + std::to_string(k) +
                                " outside [1, " + std::to_string(values_.size()) + "]");
  }
  return values_[k - 1];
}

OrderStatCuts SortedSubset::cuts(std::size_t iota, std::size_t kappa) const {
  const std::size_t m = values_.size();
  if (kappa < 1) {
    fail(ErrorKind::Tuning, "kappa must be at least 1");
  }
  if (iota + 1 > m || kappa > m || iota + 1 > m - kappa) {
    fail(ErrorKind::Tuning,
         "cuts iota=" + std::to_string(iota) + ", kappa=" + std::to_string(kappa) +
             " overlap in a subsample of size " + std::to_string(m));
  }

  OrderStatCuts out;
  out.iota = iota;
  out.kappa = kappa;
  out.ell = values_[iota];          // (iota+1)-th smallest
  out.r = values_[m - kappa - 1];   // (m-kappa)-th smallest
  // iota + 1 <= m - kappa < m guarantees both neighbors below exist.
  out.tie_at_ell = values_[iota] == values_[iota + 1];
  out.tie_at_r = values_[m - kappa - 1] == values_[m - kappa];
  return out;
}

std::shared_ptr<const SortedSubset> SubsetTable::view(const LabelSet &labels) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(labels);
    if (it != cache_.end()) return it->second;
  }
  // Built outside the lock; a racing duplicate is discarded.
  auto built = std::make_shared<const SortedSubset>(*sample_, labels);
  std::lock_guard<std::mutex> lock(mutex_);
  auto [it, inserted] = cache_.emplace(labels, std::move(built));
  return it->second;
}

double ecdf(const Sample &sample, const LabelSet &labels, double y) {
  return SortedSubset(sample, labels).ecdf(y);
}

OrderStatCuts order_stats(const Sample &sample, const LabelSet &labels,
                          long long iota, long long kappa) {
  if (iota < 0) {
    fail(ErrorKind::Tuning, "iota must be nonnegative");
  }
  if (kappa < 1) {
    fail(ErrorKind::Tuning, "kappa must be at least 1");
  }
  SortedSubset subset(sample, labels);
  return subset.cuts(static_cast<std::size_t>(iota), static_cast<std::size_t>(kappa));
}

}  // namespace tailmix
