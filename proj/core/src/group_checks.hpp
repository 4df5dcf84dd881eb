// Copyright (c) 2026 The tailmix Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "tailmix/error.hpp"
#include "tailmix/sample.hpp"

namespace tailmix::detail {

// Shared precondition for every two-group estimator: both groups nonempty,
// known to the sample, and disjoint.
inline void require_disjoint_groups(const Sample &sample, const LabelSet &a,
                                    const LabelSet &b) {
  if (a.empty() || b.empty()) {
    fail(ErrorKind::Partition, "label groups must be nonempty");
  }
  for (const auto &label : a) {
    if (!sample.has_label(label)) {
      fail(ErrorKind::Partition, "label '" + label + "' not present in sample");
    }
    if (b.count(label) > 0) {
      fail(ErrorKind::Partition, "label '" + label + "' appears in both groups");
    }
  }
  for (const auto &label : b) {
    if (!sample.has_label(label)) {
      fail(ErrorKind::Partition, "label '" + label + "' not present in sample");
    }
  }
}

}  // namespace tailmix::detail
