// Copyright (c) 2026 The tailmix Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: mixture estimation from grouped samples
// (estimate), the over-identification test (spectest), simulation studies
// (simulate), and skew-normal reference values (dist).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tailmix/error.hpp"
#include "tailmix/monte_carlo.hpp"
#include "tailmix/normal.hpp"
#include "tailmix/report_io.hpp"
#include "tailmix/spec_test.hpp"

namespace {

using namespace tailmix;

struct CommonOptions {
  std::string input;
  std::string y_col = "y";
  std::string x_col = "x";
  double c = 0.5;
  double exponent = 0.6;
  std::size_t min_subset = kDefaultMinSubsetSize;
  std::string partitions;
  std::string out;
  std::string format = "json";
};

void add_input_options(CLI::App *cmd, CommonOptions *opts) {
  cmd->add_option("--input", opts->input, "input CSV file")->required();
  cmd->add_option("--y-col", opts->y_col, "outcome column name");
  cmd->add_option("--x-col", opts->x_col, "group column name");
}

void add_tuning_options(CLI::App *cmd, CommonOptions *opts) {
  cmd->add_option("--c", opts->c, "cut-count constant C");
  cmd->add_option("--exponent", opts->exponent, "cut-count exponent");
  cmd->add_option("--min-subset", opts->min_subset, "minimum group size");
}

void add_output_options(CLI::App *cmd, CommonOptions *opts) {
  cmd->add_option("--out", opts->out, "write the machine-readable report here");
  cmd->add_option("--format", opts->format, "report format")
      ->check(CLI::IsMember({"json", "csv"}));
}

void write_file(const std::string &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    fail(ErrorKind::Io, "cannot open '" + path + "' for writing");
  }
  out << content;
  if (!out) {
    fail(ErrorKind::Io, "failed writing '" + path + "'");
  }
}

WeightKind parse_weight(const std::string &name) {
  if (name == "uniform") return WeightKind::Uniform;
  if (name == "central") return WeightKind::CentralQuantiles;
  return WeightKind::GaussianBump;
}

int run_estimate(const CommonOptions &opts, const std::string &one_sided) {
  if (!opts.out.empty() && opts.format != "json") {
    fail(ErrorKind::Design, "estimate reports are JSON only");
  }
  const Sample sample = ingest_csv(opts.input, opts.y_col, opts.x_col);
  const TuningConstants tuning{opts.c, opts.exponent};
  SubsetTable table(sample);

  Partition partition;
  if (!opts.partitions.empty()) {
    partition = parse_partition_spec(opts.partitions);
    if (partition.c) {
      fail(ErrorKind::Partition, "estimate expects two groups in --partitions");
    }
  } else {
    const auto labels = sample.labels();
    if (labels.size() < 2) {
      fail(ErrorKind::Partition,
           "sample has a single label; the mixture is not identified");
    }
    partition.a = LabelSet{labels.front()};
    partition.b = sample.complement(partition.a);
  }

  EstimateReport report;
  report.input = opts.input;
  report.tuning = tuning;
  report.n = sample.size();

  if (one_sided.empty()) {
    for (const auto &label : sample.labels()) {
      report.lambdas.push_back(lambda_hat(table, label, tuning, opts.min_subset));
    }
    report.components.push_back(component_cdfs(
        table, partition.a, partition.b, tuning, std::nullopt, opts.min_subset));
  } else {
    const TailSide side =
        one_sided == "left" ? TailSide::Left : TailSide::Right;
    report.components.push_back(component_cdf_one_sided(
        table, partition.a, partition.b, side, tuning, std::nullopt,
        opts.min_subset));
  }

  if (!report.lambdas.empty()) {
    std::cout << lambda_table(report.lambdas);
  }
  for (const auto &est : report.components) {
    std::printf("components on %zu grid points (iota=%zu kappa=%zu)%s%s\n",
                est.grid.size(), est.iota, est.kappa,
                est.has_g ? " g" : "", est.has_h ? " h" : "");
  }
  if (!opts.out.empty()) {
    write_file(opts.out, estimate_report_json(report));
  }
  return 0;
}

int run_spectest(const CommonOptions &opts, const std::string &weight_name,
                 const std::string &component) {
  if (!opts.out.empty() && opts.format != "json") {
    fail(ErrorKind::Design, "spectest reports are JSON only");
  }
  if (opts.partitions.empty()) {
    fail(ErrorKind::Partition,
         "spectest needs --partitions with three groups, e.g. \"a|b|c\"");
  }
  const Sample sample = ingest_csv(opts.input, opts.y_col, opts.x_col);
  const TuningConstants tuning{opts.c, opts.exponent};
  const Partition partition = parse_partition_spec(opts.partitions);
  if (!partition.c) {
    fail(ErrorKind::Partition, "spectest expects three groups in --partitions");
  }

  SubsetTable table(sample);
  const WeightFn weight = make_weight(parse_weight(weight_name), sample);

  std::vector<SpecTestResult> results;
  if (component == "g" || component == "both") {
    results.push_back(run_spec_test(table, partition.a, partition.b, *partition.c,
                                    tuning, weight, ComponentKind::G,
                                    opts.min_subset));
  }
  if (component == "h" || component == "both") {
    results.push_back(run_spec_test(table, partition.a, partition.b, *partition.c,
                                    tuning, weight, ComponentKind::H,
                                    opts.min_subset));
  }

  std::cout << spec_test_table(results);
  if (!opts.out.empty()) {
    write_file(opts.out, spec_test_report_json(results, opts.input, tuning));
  }
  return 0;
}

int run_simulate(const CommonOptions &opts, DesignSpec design, bool full_study) {
  std::vector<std::size_t> sizes{design.n};
  if (full_study) {
    sizes = {1000, 10000, 25000};
  }

  std::vector<StudyReport> reports;
  for (std::size_t n : sizes) {
    DesignSpec d = design;
    d.n = n;
    reports.push_back(run_study(d));
    std::cout << study_report_table(reports.back()) << "\n";
  }

  if (opts.out.empty()) return 0;
  if (opts.format == "csv") {
    std::string csv;
    for (std::size_t i = 0; i < reports.size(); ++i) {
      std::string chunk = study_report_csv(reports[i]);
      if (i > 0) chunk.erase(0, chunk.find('\n') + 1);  // keep one header
      csv += chunk;
    }
    write_file(opts.out, csv);
  } else {
    if (reports.size() == 1) {
      write_file(opts.out, study_report_json(reports.front()));
    } else {
      std::string joined = "[\n";
      for (std::size_t i = 0; i < reports.size(); ++i) {
        std::string chunk = study_report_json(reports[i]);
        if (!chunk.empty() && chunk.back() == '\n') chunk.pop_back();
        joined += chunk;
        joined += i + 1 < reports.size() ? ",\n" : "\n";
      }
      joined += "]\n";
      write_file(opts.out, joined);
    }
  }
  return 0;
}

int run_dist(const CommonOptions &opts, const SkewNormalParams &params,
             const std::vector<double> &at, const std::string &grid_spec) {
  validate(params);
  std::vector<double> points = at;
  if (!grid_spec.empty()) {
    double lo = 0.0, hi = 0.0;
    int count = 0;
    if (std::sscanf(grid_spec.c_str(), "%lf:%lf:%d", &lo, &hi, &count) != 3 ||
        count < 2 || !(hi > lo)) {
      fail(ErrorKind::Design, "grid spec must be lo:hi:count with count >= 2");
    }
    for (int i = 0; i < count; ++i) {
      points.push_back(lo + (hi - lo) * i / (count - 1));
    }
  }

  const SkewNormalMoments moments = skew_normal_moments(params);
  std::printf("skew-normal mu=%g sigma=%g beta=%g\n", params.mu, params.sigma,
              params.beta);
  std::printf("mean = %.10g  variance = %.10g\n", moments.mean, moments.variance);
  if (!points.empty()) {
    std::printf("%14s %14s %14s\n", "y", "pdf", "cdf");
    for (double y : points) {
      std::printf("%14.6g %14.10g %14.10g\n", y, skew_normal_pdf(params, y),
                  skew_normal_cdf(params, y));
    }
  }

  if (opts.out.empty()) return 0;
  if (opts.format == "csv") {
    std::string csv = "y,pdf,cdf\n";
    for (double y : points) {
      csv += format_double(y) + "," + format_double(skew_normal_pdf(params, y)) +
             "," + format_double(skew_normal_cdf(params, y)) + "\n";
    }
    write_file(opts.out, csv);
  } else {
    std::string json = "{\n  \"mu\": " + format_double(params.mu) +
                       ",\n  \"sigma\": " + format_double(params.sigma) +
                       ",\n  \"beta\": " + format_double(params.beta) +
                       ",\n  \"mean\": " + format_double(moments.mean) +
                       ",\n  \"variance\": " + format_double(moments.variance) +
                       ",\n  \"points\": [";
    for (std::size_t i = 0; i < points.size(); ++i) {
      json += i == 0 ? "\n" : ",\n";
      json += "    {\"y\": " + format_double(points[i]) +
              ", \"pdf\": " + format_double(skew_normal_pdf(params, points[i])) +
              ", \"cdf\": " + format_double(skew_normal_cdf(params, points[i])) +
              "}";
    }
    json += points.empty() ? "]\n}\n" : "\n  ]\n}\n";
    write_file(opts.out, json);
  }
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Nonparametric two-component mixture estimation from tail ratios"};
  app.require_subcommand(1);

  CommonOptions est_opts;
  std::string one_sided;
  CLI::App *estimate = app.add_subcommand(
      "estimate", "Estimate mixing proportions and component CDFs");
  add_input_options(estimate, &est_opts);
  add_tuning_options(estimate, &est_opts);
  add_output_options(estimate, &est_opts);
  estimate->add_option("--partitions", est_opts.partitions,
                       "two label groups \"a,b|c\" for the component pair");
  estimate->add_option("--one-sided", one_sided,
                       "estimate a single component from one tail")
      ->check(CLI::IsMember({"left", "right"}));

  CommonOptions spec_opts;
  std::string weight_name = "uniform";
  std::string component = "both";
  CLI::App *spectest =
      app.add_subcommand("spectest", "Over-identification test across groups");
  add_input_options(spectest, &spec_opts);
  add_tuning_options(spectest, &spec_opts);
  add_output_options(spectest, &spec_opts);
  spectest->add_option("--partitions", spec_opts.partitions,
                       "three label groups \"a|b|c\"");
  spectest->add_option("--weight", weight_name, "weight function")
      ->check(CLI::IsMember({"uniform", "central", "gauss"}));
  spectest->add_option("--component", component, "which component to test")
      ->check(CLI::IsMember({"g", "h", "both"}));

  CommonOptions sim_opts;
  DesignSpec design;
  bool full_study = false;
  CLI::App *simulate = app.add_subcommand("simulate", "Monte Carlo study");
  simulate->add_option("--mu", design.mu, "component location split");
  simulate->add_option("--beta", design.beta, "component skew");
  simulate->add_option("--sigma", design.sigma, "component scale");
  simulate->add_option("--p-x1", design.p_x1, "P(X = 1)");
  simulate->add_option("--lambda0", design.lambda0, "P(T = 1 | X = 0)");
  simulate->add_option("--lambda1", design.lambda1, "P(T = 1 | X = 1)");
  simulate->add_option("--n", design.n, "observations per replication");
  simulate->add_option("--reps", design.reps, "number of replications");
  simulate->add_option("--seed", design.seed, "master seed");
  simulate->add_option("--c", sim_opts.c, "cut-count constant C");
  simulate->add_option("--exponent", sim_opts.exponent, "cut-count exponent");
  simulate->add_option("--min-subset", sim_opts.min_subset, "minimum group size");
  simulate->add_flag("--figure-grids", design.figure_grids,
                     "also summarize component curves on a fixed lattice");
  simulate->add_option("--grid-points", design.grid_points,
                       "lattice size for --figure-grids");
  simulate->add_flag("--full-study", full_study,
                     "run the n in {1000, 10000, 25000} sweep");
  add_output_options(simulate, &sim_opts);

  CommonOptions dist_opts;
  SkewNormalParams dist_params;
  std::vector<double> dist_at;
  std::string dist_grid;
  CLI::App *dist =
      app.add_subcommand("dist", "Skew-normal pdf/cdf/moment reference values");
  dist->add_option("--mu", dist_params.mu, "location");
  dist->add_option("--sigma", dist_params.sigma, "scale");
  dist->add_option("--beta", dist_params.beta, "shape");
  dist->add_option("--at", dist_at, "evaluation points (repeatable)");
  dist->add_option("--grid", dist_grid, "evaluation lattice lo:hi:count");
  add_output_options(dist, &dist_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (estimate->parsed()) return run_estimate(est_opts, one_sided);
    if (spectest->parsed()) return run_spectest(spec_opts, weight_name, component);
    if (simulate->parsed()) {
      design.tuning = TuningConstants{sim_opts.c, sim_opts.exponent};
      design.min_subset = sim_opts.min_subset;
      return run_simulate(sim_opts, design, full_study);
    }
    if (dist->parsed()) return run_dist(dist_opts, dist_params, dist_at, dist_grid);
  } catch (const Error &e) {
    std::cerr << "error (" << error_kind_name(e.kind()) << "): " << e.what()
              << "\n";
    return is_degenerate(e.kind()) ? 3 : 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
