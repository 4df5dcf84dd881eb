// Copyright (c) 2026 The tailmix Authors.
// SPDX-License-Identifier: Apache-2.0

#include "tailmix/sample.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <utility>

#include "tailmix/error.hpp"

namespace tailmix {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

void split_line(const std::string &line, std::vector<std::string_view> *out) {
  out->clear();
  std::string_view rest(line);
  if (!rest.empty() && rest.back() == '\r') rest.remove_suffix(1);
  while (true) {
    auto pos = rest.find(',');
    if (pos == std::string_view::npos) {
      out->push_back(rest);
      return;
    }
    out->push_back(rest.substr(0, pos));
    rest.remove_prefix(pos + 1);
  }
}

std::string describe_set(const LabelSet &labels) {
  std::string out = "{";
  bool first = true;
  for (const auto &l : labels) {
    if (!first) out += ",";
    out += l;
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace

Sample Sample::from_observations(std::vector<Observation> observations) {
  Sample sample;
  sample.observations_ = std::move(observations);
  for (std::size_t i = 0; i < sample.observations_.size(); ++i) {
    const Observation &obs = sample.observations_[i];
    if (!std::isfinite(obs.y)) {
      fail(ErrorKind::Data,
           "non-finite outcome at observation " + std::to_string(i + 1));
    }
    if (obs.x.empty()) {
      fail(ErrorKind::Data,
           "empty label at observation " + std::to_string(i + 1));
    }
    ++sample.label_counts_[obs.x];
  }
  return sample;
}

std::size_t Sample::subset_count(const LabelSet &subset) const {
  std::size_t n = 0;
  for (const auto &label : subset) {
    auto it = label_counts_.find(label);
    if (it != label_counts_.end()) n += it->second;
  }
  return n;
}

std::vector<std::string> Sample::labels() const {
  std::vector<std::string> out;
  out.reserve(label_counts_.size());
  for (const auto &[label, count] : label_counts_) out.push_back(label);
  return out;
}

LabelSet Sample::label_set() const {
  LabelSet out;
  for (const auto &[label, count] : label_counts_) out.insert(label);
  return out;
}

LabelSet Sample::complement(const LabelSet &subset) const {
  LabelSet out;
  for (const auto &[label, count] : label_counts_) {
    if (subset.count(label) == 0) out.insert(label);
  }
  return out;
}

std::string normalize_label(std::string_view token) {
  std::string_view t = trim(token);
  if (t.empty()) return std::string();

  // Integer literals of any length are canonicalized without overflow:
  // drop the sign of zero and any leading zeros.
  std::string_view digits = t;
  bool negative = false;
  if (digits.front() == '+' || digits.front() == '-') {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  bool all_digits = !digits.empty() &&
      std::all_of(digits.begin(), digits.end(), [](unsigned char ch) {
        return std::isdigit(ch) != 0;
      });
  if (!all_digits) return std::string(t);

  std::size_t first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return "0";
  std::string out;
  if (negative) out += '-';
  out += std::string(digits.substr(first));
  return out;
}

Sample ingest_csv(std::istream &in, const std::string &y_column,
                  const std::string &x_column, const std::string &origin) {
  std::string line;
  if (!std::getline(in, line)) {
    fail(ErrorKind::EmptyInput, origin + ": no rows");
  }

  std::vector<std::string_view> fields;
  split_line(line, &fields);
  std::size_t y_idx = fields.size();
  std::size_t x_idx = fields.size();
  for (std::size_t i = 0; i < fields.size(); ++i) {
    std::string name(trim(fields[i]));
    if (name == y_column) y_idx = i;
    if (name == x_column) x_idx = i;
  }
  if (y_idx == fields.size()) {
    fail(ErrorKind::Schema, origin + ": missing column '" + y_column + "'");
  }
  if (x_idx == fields.size()) {
    fail(ErrorKind::Schema, origin + ": missing column '" + x_column + "'");
  }
  const std::size_t n_columns = fields.size();

  std::vector<Observation> observations;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    split_line(line, &fields);
    if (fields.size() == 1 && trim(fields[0]).empty()) {
      // A trailing blank line is not data.
      if (in.peek() == std::char_traits<char>::eof()) break;
      fail(ErrorKind::Data, origin + ": blank row " + std::to_string(row));
    }
    if (fields.size() != n_columns) {
      fail(ErrorKind::Data, origin + ": row " + std::to_string(row) + " has " +
                                std::to_string(fields.size()) + " fields, expected " +
                                std::to_string(n_columns));
    }

    std::string_view y_field = trim(fields[y_idx]);
    double y = 0.0;
    auto [ptr, ec] = std::from_chars(y_field.data(), y_field.data() + y_field.size(), y);
    if (ec != std::errc{} || ptr != y_field.data() + y_field.size()) {
      fail(ErrorKind::Data, origin + ": row " + std::to_string(row) +
                                ": cannot parse outcome '" + std::string(y_field) + "'");
    }
    if (!std::isfinite(y)) {
      fail(ErrorKind::Data,
           origin + ": row " + std::to_string(row) + ": non-finite outcome");
    }

    std::string label = normalize_label(fields[x_idx]);
    if (label.empty()) {
      fail(ErrorKind::Data,
           origin + ": row " + std::to_string(row) + ": empty label");
    }
    observations.push_back(Observation{y, std::move(label)});
  }

  if (observations.empty()) {
    fail(ErrorKind::EmptyInput, origin + ": no data rows");
  }
  return Sample::from_observations(std::move(observations));
}

Sample ingest_csv(const std::string &path, const std::string &y_column,
                  const std::string &x_column) {
  std::ifstream in(path);
  if (!in) {
    fail(ErrorKind::Io, "cannot open '" + path + "'");
  }
  return ingest_csv(in, y_column, x_column, path);
}

std::vector<double> subset_view(const Sample &sample, const LabelSet &subset) {
  if (subset.empty()) {
    fail(ErrorKind::Partition, "empty label set");
  }
  for (const auto &label : subset) {
    if (!sample.has_label(label)) {
      fail(ErrorKind::Partition, "label '" + label + "' not present in sample");
    }
  }
  std::vector<double> out;
  out.reserve(sample.subset_count(subset));
  for (const auto &obs : sample.observations()) {
    if (subset.count(obs.x) > 0) out.push_back(obs.y);
  }
  return out;
}

Partition parse_partition_spec(const std::string &spec) {
  std::vector<LabelSet> groups;
  std::stringstream ss(spec);
  std::string group;
  while (std::getline(ss, group, '|')) {
    LabelSet labels;
    std::stringstream gs(group);
    std::string token;
    while (std::getline(gs, token, ',')) {
      std::string label = normalize_label(token);
      if (label.empty()) {
        fail(ErrorKind::Partition, "empty label in partition spec '" + spec + "'");
      }
      if (!labels.insert(label).second) {
        fail(ErrorKind::Partition,
             "label '" + label + "' repeated within a group in '" + spec + "'");
      }
    }
    if (labels.empty()) {
      fail(ErrorKind::Partition, "empty group in partition spec '" + spec + "'");
    }
    groups.push_back(std::move(labels));
  }
  if (groups.size() != 2 && groups.size() != 3) {
    fail(ErrorKind::Partition,
         "partition spec '" + spec + "' must have 2 or 3 groups, found " +
             std::to_string(groups.size()));
  }
  Partition out;
  out.a = std::move(groups[0]);
  out.b = std::move(groups[1]);
  if (groups.size() == 3) out.c = std::move(groups[2]);
  return out;
}

void validate_partition(const Sample &sample, const Partition &partition,
                        bool require_cover) {
  std::vector<const LabelSet *> groups{&partition.a, &partition.b};
  if (partition.c) groups.push_back(&*partition.c);

  LabelSet seen;
  for (const LabelSet *group : groups) {
    if (group->empty()) {
      fail(ErrorKind::Partition, "empty partition group");
    }
    for (const auto &label : *group) {
      if (!sample.has_label(label)) {
        fail(ErrorKind::Partition, "label '" + label + "' not present in sample");
      }
      if (!seen.insert(label).second) {
        fail(ErrorKind::Partition,
             "label '" + label + "' appears in more than one group");
      }
    }
  }
  if (require_cover && seen != sample.label_set()) {
    fail(ErrorKind::Partition,
         "groups " + describe_set(seen) + " do not cover the sample labels " +
             describe_set(sample.label_set()));
  }
}

}  // namespace tailmix
