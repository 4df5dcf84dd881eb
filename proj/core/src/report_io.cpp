// Copyright (c) 2026 The tailmix Authors.
// SPDX-License-Identifier: Apache-2.0

#include "tailmix/report_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <system_error>

#include <nlohmann/json.hpp>

namespace tailmix {

using nlohmann::json;

std::string format_double(double value) {
  char buffer[40];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

namespace {

json optional_to_json(const std::optional<double> &v) {
  if (!v) return nullptr;
  return *v;
}

const char *side_name(TailSide side) {
  return side == TailSide::Left ? "left" : "right";
}

const char *component_name(ComponentKind kind) {
  return kind == ComponentKind::G ? "g" : "h";
}

json ratio_to_json(const TailRatioEstimate &ratio) {
  return json{{"side", side_name(ratio.side)},
              {"value", ratio.value},
              {"cut_count", ratio.cut_count},
              {"cut_point", ratio.cut_point},
              {"rho_hat", ratio.rho_hat},
              {"sigma2", ratio.sigma2},
              {"se", ratio.se},
              {"zero_tail", ratio.zero_tail},
              {"tie_at_cut", ratio.tie_at_cut}};
}

json labels_to_json(const LabelSet &labels) {
  json out = json::array();
  for (const auto &label : labels) out.push_back(label);
  return out;
}

json lambda_to_json(const MixingProportionEstimate &est) {
  return json{{"x", est.x},
              {"lambda", est.lambda},
              {"lambda_clipped", est.lambda_clipped},
              {"se", est.se},
              {"ci_low", est.ci_low},
              {"ci_high", est.ci_high},
              {"iota", est.iota},
              {"kappa", est.kappa},
              {"q_ell", est.q_ell},
              {"q_r", est.q_r},
              {"d_minus", est.sensitivities.d_minus},
              {"d_plus", est.sensitivities.d_plus},
              {"zeta_minus", ratio_to_json(est.zeta_minus)},
              {"zeta_plus", ratio_to_json(est.zeta_plus)}};
}

json component_to_json(const ComponentCdfEstimate &est) {
  json out{{"a", labels_to_json(est.a)},
           {"b", labels_to_json(est.b)},
           {"iota", est.iota},
           {"kappa", est.kappa},
           {"grid", est.grid}};
  if (est.zeta_minus) out["zeta_minus"] = ratio_to_json(*est.zeta_minus);
  if (est.zeta_plus) out["zeta_plus"] = ratio_to_json(*est.zeta_plus);
  if (est.has_g) {
    out["g"] = est.g;
    out["g_se"] = est.g_se;
    out["g_lo"] = est.g_lo;
    out["g_hi"] = est.g_hi;
  }
  if (est.has_h) {
    out["h"] = est.h;
    out["h_se"] = est.h_se;
    out["h_lo"] = est.h_lo;
    out["h_hi"] = est.h_hi;
  }
  if (est.zeta_minus && est.zeta_plus) {
    const auto [la, lb] = implied_group_lambdas(est);
    out["lambda_a"] = la;
    out["lambda_b"] = lb;
  }
  return out;
}

json design_to_json(const DesignSpec &design) {
  return json{{"mu", design.mu},
              {"beta", design.beta},
              {"sigma", design.sigma},
              {"p_x1", design.p_x1},
              {"lambda0", design.lambda0},
              {"lambda1", design.lambda1},
              {"n", design.n},
              {"reps", design.reps},
              {"seed", design.seed},
              {"c", design.tuning.c},
              {"exponent", design.tuning.exponent},
              {"min_subset", design.min_subset},
              {"figure_grids", design.figure_grids},
              {"grid_points", design.grid_points}};
}

json target_to_json(const TargetSummary &target) {
  return json{{"target", target.target},
              {"true_value", target.true_value},
              {"bias", target.bias},
              {"sd", optional_to_json(target.sd)},
              {"mean_se", target.mean_se},
              {"se_over_sd", optional_to_json(target.se_over_sd)},
              {"ci95", target.ci95},
              {"mean_q_ell", target.mean_q_ell},
              {"mean_q_r", target.mean_q_r}};
}

json curve_to_json(const std::vector<FigurePoint> &curve) {
  json out = json::array();
  for (const FigurePoint &pt : curve) {
    out.push_back(json{{"y", pt.y},
                       {"truth", pt.truth},
                       {"mean", pt.mean_value},
                       {"band_lo", pt.mean_band_lo},
                       {"band_hi", pt.mean_band_hi},
                       {"mc_lo", pt.mc_lo},
                       {"mc_hi", pt.mc_hi},
                       {"band_coverage", pt.band_coverage}});
  }
  return out;
}

json partition_to_json(const Partition &partition) {
  json out{{"a", labels_to_json(partition.a)}, {"b", labels_to_json(partition.b)}};
  if (partition.c) out["c"] = labels_to_json(*partition.c);
  return out;
}

json spec_result_to_json(const SpecTestResult &result) {
  json reject = json::object();
  for (const auto &[tau, rejected] : result.reject_at) {
    char key[16];
    std::snprintf(key, sizeof(key), "%.2f", tau);
    reject[key] = rejected;
  }
  return json{{"component", component_name(result.component)},
              {"statistic", result.statistic},
              {"p_value", result.p_value},
              {"weighted_diff", result.weighted_diff},
              {"variance", result.variance},
              {"scale_count", result.scale_count},
              {"reject_at", reject},
              {"partition", partition_to_json(result.partition)}};
}

std::string format_fixed(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.4f", v);
  return std::string(buffer);
}

void append_csv_number(std::string *out, double v) { *out += format_double(v); }

void append_csv_optional(std::string *out, const std::optional<double> &v) {
  if (v) *out += format_double(*v);
}

}  // namespace

std::string study_report_csv(const StudyReport &report) {
  std::string out =
      "mu,beta,sigma,p_x1,lambda0,lambda1,seed,reps,n,c,q_ell,q_r,target,"
      "bias,sd,se_over_sd,ci95,excluded_reps\n";
  const DesignSpec &d = report.design;
  for (const TargetSummary &t : report.targets) {
    append_csv_number(&out, d.mu);
    out += ',';
    append_csv_number(&out, d.beta);
    out += ',';
    append_csv_number(&out, d.sigma);
    out += ',';
    append_csv_number(&out, d.p_x1);
    out += ',';
    append_csv_number(&out, d.lambda0);
    out += ',';
    append_csv_number(&out, d.lambda1);
    out += ',';
    out += std::to_string(d.seed);
    out += ',';
    out += std::to_string(d.reps);
    out += ',';
    out += std::to_string(d.n);
    out += ',';
    append_csv_number(&out, d.tuning.c);
    out += ',';
    append_csv_number(&out, t.mean_q_ell);
    out += ',';
    append_csv_number(&out, t.mean_q_r);
    out += ',';
    out += t.target;
    out += ',';
    append_csv_number(&out, t.bias);
    out += ',';
    append_csv_optional(&out, t.sd);
    out += ',';
    append_csv_optional(&out, t.se_over_sd);
    out += ',';
    append_csv_number(&out, t.ci95);
    out += ',';
    out += std::to_string(report.excluded_reps);
    out += '\n';
  }
  return out;
}

std::string study_report_json(const StudyReport &report) {
  json out{{"design", design_to_json(report.design)},
           {"included_reps", report.included_reps},
           {"excluded_reps", report.excluded_reps}};
  json targets = json::array();
  for (const TargetSummary &t : report.targets) targets.push_back(target_to_json(t));
  out["targets"] = targets;
  if (report.design.figure_grids) {
    out["g_curve"] = curve_to_json(report.g_curve);
    out["h_curve"] = curve_to_json(report.h_curve);
  }
  return out.dump(2) + "\n";
}

std::string estimate_report_json(const EstimateReport &report) {
  json out{{"input", report.input},
           {"n", report.n},
           {"tuning", json{{"c", report.tuning.c}, {"exponent", report.tuning.exponent}}}};
  json lambdas = json::array();
  for (const auto &est : report.lambdas) lambdas.push_back(lambda_to_json(est));
  out["lambdas"] = lambdas;
  json components = json::array();
  for (const auto &est : report.components) components.push_back(component_to_json(est));
  out["components"] = components;
  return out.dump(2) + "\n";
}

std::string spec_test_report_json(const std::vector<SpecTestResult> &results,
                                  const std::string &input,
                                  const TuningConstants &tuning) {
  json out{{"input", input},
           {"tuning", json{{"c", tuning.c}, {"exponent", tuning.exponent}}}};
  json tests = json::array();
  for (const auto &result : results) tests.push_back(spec_result_to_json(result));
  out["tests"] = tests;
  return out.dump(2) + "\n";
}

std::string study_report_table(const StudyReport &report) {
  char line[256];
  std::string out;
  const DesignSpec &d = report.design;
  std::snprintf(line, sizeof(line),
                "design: mu=%g beta=%g sigma=%g  n=%zu reps=%zu  C=%g  seed=%llu\n",
                d.mu, d.beta, d.sigma, d.n, d.reps, d.tuning.c,
                static_cast<unsigned long long>(d.seed));
  out += line;
  std::snprintf(line, sizeof(line),
                "replications: %zu included, %zu excluded  (%.2fs)\n",
                report.included_reps, report.excluded_reps, report.elapsed_seconds);
  out += line;
  std::snprintf(line, sizeof(line), "%-10s %8s %8s %9s %9s %8s %8s %8s\n", "target",
                "truth", "bias", "sd", "se/sd", "ci95", "q_ell", "q_r");
  out += line;
  for (const TargetSummary &t : report.targets) {
    const std::string sd = t.sd ? format_fixed(*t.sd) : "-";
    const std::string ratio = t.se_over_sd ? format_fixed(*t.se_over_sd) : "-";
    std::snprintf(line, sizeof(line),
                  "%-10s %8.4f %8.4f %9s %9s %8.4f %8.4f %8.4f\n", t.target.c_str(),
                  t.true_value, t.bias, sd.c_str(), ratio.c_str(), t.ci95,
                  t.mean_q_ell, t.mean_q_r);
    out += line;
  }
  return out;
}

std::string lambda_table(const std::vector<MixingProportionEstimate> &lambdas) {
  char line[256];
  std::string out;
  std::snprintf(line, sizeof(line), "%-12s %9s %9s %9s %19s %6s %6s\n", "x", "lambda",
                "clipped", "se", "ci95", "iota", "kappa");
  out += line;
  for (const auto &est : lambdas) {
    std::snprintf(line, sizeof(line),
                  "%-12s %9.4f %9.4f %9.4f [%8.4f,%8.4f] %6zu %6zu\n",
                  est.x.c_str(), est.lambda, est.lambda_clipped, est.se, est.ci_low,
                  est.ci_high, est.iota, est.kappa);
    out += line;
  }
  return out;
}

std::string spec_test_table(const std::vector<SpecTestResult> &results) {
  char line[256];
  std::string out;
  std::snprintf(line, sizeof(line), "%-9s %10s %10s %12s %6s\n", "component",
                "statistic", "p_value", "scale_count", "rej05");
  out += line;
  for (const auto &result : results) {
    const auto it = result.reject_at.find(0.05);
    const bool rej = it != result.reject_at.end() && it->second;
    std::snprintf(line, sizeof(line), "%-9s %10.4f %10.4f %12zu %6s\n",
                  component_name(result.component), result.statistic, result.p_value,
                  result.scale_count, rej ? "yes" : "no");
    out += line;
  }
  return out;
}

}  // namespace tailmix
