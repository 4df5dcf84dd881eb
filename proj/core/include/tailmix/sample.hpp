// Copyright (c) 2026 The tailmix Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace tailmix {

// Labels are opaque strings.  Integer-looking tokens are normalized to their
// canonical decimal form so that "01", " 1" and "1" name the same group.
using LabelSet = std::set<std::string>;

struct Observation {
  double y = 0.0;
  std::string x;
};

// An outcome sample with a discrete grouping variable.  Observations keep
// their input order; per-label counts are materialized once at construction.
class Sample {
 public:
  Sample() = default;

  // Validates that every y is finite and every label is nonempty.
  static Sample from_observations(std::vector<Observation> observations);

  const std::vector<Observation> &observations() const noexcept {
    return observations_;
  }
  std::size_t size() const noexcept { return observations_.size(); }

  const std::map<std::string, std::size_t> &label_counts() const noexcept {
    return label_counts_;
  }
  bool has_label(const std::string &label) const {
    return label_counts_.count(label) > 0;
  }

  // Number of observations whose label lies in the given set.
  std::size_t subset_count(const LabelSet &subset) const;

  std::vector<std::string> labels() const;  // sorted
  LabelSet label_set() const;
  LabelSet complement(const LabelSet &subset) const;

 private:
  std::vector<Observation> observations_;
  std::map<std::string, std::size_t> label_counts_;
};

// Reads a delimited text file with a header row.  Column values are split on
// commas; the decimal separator is '.'.  Raises Schema for a missing column,
// EmptyInput when there are no data rows, Data (with the offending 1-based
// data row) for an unparseable, non-finite, or empty field.
Sample ingest_csv(const std::string &path, const std::string &y_column,
                  const std::string &x_column);

// Same parser over an already-open stream; `origin` names the source in
// error messages.
Sample ingest_csv(std::istream &in, const std::string &y_column,
                  const std::string &x_column, const std::string &origin);

// Outcomes whose label lies in `subset`, in observation order.
std::vector<double> subset_view(const Sample &sample, const LabelSet &subset);

// Canonical form of a label token: surrounding whitespace is removed and
// integer literals lose their sign/zero padding ("007" -> "7", "-0" -> "0").
std::string normalize_label(std::string_view token);

// Disjoint label groups used to pose an estimation or testing problem.
// `c` is only present for the over-identification test.
struct Partition {
  LabelSet a;
  LabelSet b;
  std::optional<LabelSet> c;
};

// Parses "a,b|c|d" into two or three label groups.
Partition parse_partition_spec(const std::string &spec);

// Checks that the groups are nonempty, pairwise disjoint, and drawn from the
// sample's labels.  With `require_cover`, their union must be every label.
void validate_partition(const Sample &sample, const Partition &partition,
                        bool require_cover);

}  // namespace tailmix
