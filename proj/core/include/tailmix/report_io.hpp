// Copyright (c) 2026 The tailmix Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "tailmix/mixture.hpp"
#include "tailmix/monte_carlo.hpp"
#include "tailmix/spec_test.hpp"

namespace tailmix {

// Shortest decimal form that round-trips to the same double (17 significant
// digits at most).  Not locale dependent.
std::string format_double(double value);

// Machine outputs.  All numbers are emitted in round-trip form; absent
// optional statistics become JSON null / empty CSV cells.
std::string study_report_csv(const StudyReport &report);
std::string study_report_json(const StudyReport &report);

struct EstimateReport {
  std::string input;
  TuningConstants tuning;
  std::size_t n = 0;
  std::vector<MixingProportionEstimate> lambdas;
  std::vector<ComponentCdfEstimate> components;
};
std::string estimate_report_json(const EstimateReport &report);

std::string spec_test_report_json(const std::vector<SpecTestResult> &results,
                                  const std::string &input,
                                  const TuningConstants &tuning);

// Human-readable summaries for standard output.
std::string study_report_table(const StudyReport &report);
std::string lambda_table(const std::vector<MixingProportionEstimate> &lambdas);
std::string spec_test_table(const std::vector<SpecTestResult> &results);

}  // namespace tailmix
