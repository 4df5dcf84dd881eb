// Copyright (c) 2026 The tailmix Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tailmix/mixture.hpp"
#include "tailmix/rng.hpp"
#include "tailmix/sample.hpp"
#include "tailmix/skew_normal.hpp"
#include "tailmix/tuning.hpp"

namespace tailmix {

// Two-group simulation design.  Outcomes follow
//   Y = T V_g + (1 - T) V_h,
//   V_g ~ SkewNormal(mu, sigma, beta),  V_h ~ SkewNormal(-mu, sigma, -beta),
// with X Bernoulli(p_x1) labelled "0"/"1" and T | X = x Bernoulli(lambda_x).
// beta = 0 collapses the outcome to a two-location Gaussian model.
struct DesignSpec {
  double mu = 0.0;
  double beta = 5.0;
  double sigma = 1.0;

  double p_x1 = 0.5;
  double lambda0 = 0.25;  // P(T = 1 | X = 0)
  double lambda1 = 0.75;  // P(T = 1 | X = 1)

  std::size_t n = 1000;
  std::size_t reps = 1000;
  std::uint64_t seed = 20260823;

  TuningConstants tuning;
  std::size_t min_subset = kDefaultMinSubsetSize;

  // When set, each replication also evaluates the component CDFs on a fixed
  // lattice and the report carries pointwise summaries for plotting.
  bool figure_grids = false;
  std::size_t grid_points = 201;
};

// Probabilities in [0, 1], n >= 100, reps >= 1, valid component parameters;
// Design error otherwise.
void validate(const DesignSpec &design);

SkewNormalParams g_params(const DesignSpec &design);
SkewNormalParams h_params(const DesignSpec &design);
double true_lambda(const DesignSpec &design, const std::string &label);

// One synthetic dataset; consumes the stream in observation order
// (x draw, t draw, then the outcome's normals).
Sample generate_dataset(const DesignSpec &design, RngStream &rng);

// General mixture sampler used for multi-group test designs: label i is
// drawn with probability label_probs[i] and carries mixing weight
// lambdas[i].
Sample generate_mixture_sample(const std::vector<std::string> &labels,
                               const std::vector<double> &label_probs,
                               const std::vector<double> &lambdas,
                               const SkewNormalParams &g,
                               const SkewNormalParams &h, std::size_t n,
                               RngStream &rng);

// Monte Carlo summary for one estimation target (lambda of one label).
struct TargetSummary {
  std::string target;
  double true_value = 0.0;

  double bias = 0.0;
  std::optional<double> sd;          // absent when only one rep survives
  double mean_se = 0.0;
  std::optional<double> se_over_sd;
  double ci95 = 0.0;                 // coverage of lambda +- 1.96 se

  double mean_q_ell = 0.0;
  double mean_q_r = 1.0;
};

struct FigurePoint {
  double y = 0.0;
  double truth = 0.0;
  double mean_value = 0.0;     // Monte Carlo mean of the estimate
  double mean_band_lo = 0.0;   // mean of the plug-in band edges
  double mean_band_hi = 0.0;
  double mc_lo = 0.0;          // empirical 2.5% / 97.5% quantiles of the
  double mc_hi = 0.0;          //   estimate across replications
  double band_coverage = 0.0;  // share of replications whose band covers
                               //   the true value
};

struct StudyReport {
  DesignSpec design;
  std::size_t included_reps = 0;
  std::size_t excluded_reps = 0;  // replications that raised an Error
  std::vector<TargetSummary> targets;

  // Present when design.figure_grids is set; the lattice spans the 0.1% to
  // 99.9% quantile range of the true pooled mixture.
  std::vector<FigurePoint> g_curve;
  std::vector<FigurePoint> h_curve;

  double elapsed_seconds = 0.0;
};

// Runs the full study.  Replications are deterministic functions of
// (seed, rep index); failing replications are excluded and counted, and
// aggregation folds in replication order, so the report is byte-identical
// for any worker count.  Worker threads are capped by the TAILMIX_THREADS
// environment variable when it is set.
StudyReport run_study(const DesignSpec &design);

// True component/group CDFs of the design on a grid.
struct TrueCurves {
  std::vector<double> g;
  std::vector<double> h;
  std::vector<double> f_x0;
  std::vector<double> f_x1;
};
TrueCurves true_curves(const DesignSpec &design, const std::vector<double> &grid);

// Equally spaced lattice spanning the [0.1%, 99.9%] quantile range of the
// pooled outcome mixture.
std::vector<double> figure_grid(const DesignSpec &design, std::size_t points);

// CDF and quantile of the pooled outcome law implied by the design.
double pooled_mixture_cdf(const DesignSpec &design, double y);
double pooled_mixture_quantile(const DesignSpec &design, double p);

// Effective worker count: TAILMIX_THREADS if set (at least 1), otherwise
// hardware concurrency, never more than `jobs`.
unsigned resolve_worker_count(std::size_t jobs);

}  // namespace tailmix
