// Copyright (c) 2026 The tailmix Authors.
// SPDX-License-Identifier: Apache-2.0

#include "tailmix/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "tailmix/error.hpp"

namespace tailmix {

namespace {

void require_probability(const char *name, double p) {
  if (!(p >= 0.0) || !(p <= 1.0)) {
    fail(ErrorKind::Design, std::string(name) + " must lie in [0, 1]");
  }
}

// Everything one replication contributes to the aggregates.
struct RepOutcome {
  bool ok = false;
  double lambda0 = 0.0, se0 = 0.0, q_ell0 = 0.0, q_r0 = 0.0;
  double lambda1 = 0.0, se1 = 0.0, q_ell1 = 0.0, q_r1 = 0.0;
  std::vector<double> g, g_lo, g_hi;
  std::vector<double> h, h_lo, h_hi;
};

RepOutcome run_one_rep(const DesignSpec &design,
                       const std::vector<double> &lattice, std::uint64_t rep) {
  RepOutcome out;
  RngStream rng = RngStream::substream(design.seed, rep);
  try {
    const Sample sample = generate_dataset(design, rng);
    SubsetTable table(sample);
    const MixingProportionEstimate e0 =
        lambda_hat(table, "0", design.tuning, design.min_subset);
    const MixingProportionEstimate e1 =
        lambda_hat(table, "1", design.tuning, design.min_subset);
    out.lambda0 = e0.lambda;
    out.se0 = e0.se;
    out.q_ell0 = e0.q_ell;
    out.q_r0 = e0.q_r;
    out.lambda1 = e1.lambda;
    out.se1 = e1.se;
    out.q_ell1 = e1.q_ell;
    out.q_r1 = e1.q_r;

    if (design.figure_grids) {
      const ComponentCdfEstimate est = component_cdfs(
          table, LabelSet{"0"}, LabelSet{"1"}, design.tuning, lattice,
          design.min_subset);
      out.g = est.g;
      out.g_lo = est.g_lo;
      out.g_hi = est.g_hi;
      out.h = est.h;
      out.h_lo = est.h_lo;
      out.h_hi = est.h_hi;
    }
    out.ok = true;
  } catch (const Error &) {
    out.ok = false;
  }
  return out;
}

// Empirical quantile across replications, ceil rule, 1-indexed.
double rep_quantile(std::vector<double> &scratch, double p) {
  std::sort(scratch.begin(), scratch.end());
  const std::size_t k = std::max<std::size_t>(
      1, static_cast<std::size_t>(
             std::ceil(p * static_cast<double>(scratch.size()))));
  return scratch[std::min(k, scratch.size()) - 1];
}

TargetSummary summarize_target(const std::string &name, double truth,
                               const std::vector<const RepOutcome *> &included,
                               bool first_target) {
  TargetSummary out;
  out.target = name;
  out.true_value = truth;

  const std::size_t k = included.size();
  double sum_lambda = 0.0, sum_se = 0.0, sum_q_ell = 0.0, sum_q_r = 0.0;
  std::size_t covered = 0;
  for (const RepOutcome *rep : included) {
    const double lam = first_target ? rep->lambda0 : rep->lambda1;
    const double se = first_target ? rep->se0 : rep->se1;
    sum_lambda += lam;
    sum_se += se;
    sum_q_ell += first_target ? rep->q_ell0 : rep->q_ell1;
    sum_q_r += first_target ? rep->q_r0 : rep->q_r1;
    if (std::fabs(lam - truth) <= kBandZ * se) ++covered;
  }
  const double kd = static_cast<double>(k);
  const double mean_lambda = sum_lambda / kd;
  out.bias = mean_lambda - truth;
  out.mean_se = sum_se / kd;
  out.ci95 = static_cast<double>(covered) / kd;
  out.mean_q_ell = sum_q_ell / kd;
  out.mean_q_r = sum_q_r / kd;

  if (k >= 2) {
    double ss = 0.0;
    for (const RepOutcome *rep : included) {
      const double lam = first_target ? rep->lambda0 : rep->lambda1;
      ss += (lam - mean_lambda) * (lam - mean_lambda);
    }
    const double sd = std::sqrt(ss / (kd - 1.0));
    out.sd = sd;
    if (sd > 0.0) out.se_over_sd = out.mean_se / sd;
  }
  return out;
}

std::vector<FigurePoint> summarize_curve(
    const std::vector<double> &lattice, const std::vector<double> &truth,
    const std::vector<const RepOutcome *> &included, bool is_g) {
  const std::size_t points = lattice.size();
  const std::size_t k = included.size();
  std::vector<FigurePoint> out(points);
  std::vector<double> scratch(k);
  for (std::size_t i = 0; i < points; ++i) {
    double sum_v = 0.0, sum_lo = 0.0, sum_hi = 0.0;
    std::size_t covered = 0;
    for (std::size_t r = 0; r < k; ++r) {
      const RepOutcome *rep = included[r];
      const double v = is_g ? rep->g[i] : rep->h[i];
      const double lo = is_g ? rep->g_lo[i] : rep->h_lo[i];
      const double hi = is_g ? rep->g_hi[i] : rep->h_hi[i];
      sum_v += v;
      sum_lo += lo;
      sum_hi += hi;
      if (truth[i] >= lo && truth[i] <= hi) ++covered;
      scratch[r] = v;
    }
    FigurePoint &pt = out[i];
    pt.y = lattice[i];
    pt.truth = truth[i];
    const double kd = static_cast<double>(k);
    pt.mean_value = sum_v / kd;
    pt.mean_band_lo = sum_lo / kd;
    pt.mean_band_hi = sum_hi / kd;
    pt.mc_lo = rep_quantile(scratch, 0.025);
    pt.mc_hi = rep_quantile(scratch, 0.975);
    pt.band_coverage = static_cast<double>(covered) / kd;
  }
  return out;
}

}  // namespace

void validate(const DesignSpec &design) {
  validate(SkewNormalParams{design.mu, design.sigma, design.beta});
  require_probability("p_x1", design.p_x1);
  require_probability("lambda0", design.lambda0);
  require_probability("lambda1", design.lambda1);
  if (design.n < 100) {
    fail(ErrorKind::Design, "design needs n >= 100");
  }
  if (design.reps < 1) {
    fail(ErrorKind::Design, "design needs at least one replication");
  }
  validate(design.tuning);
  if (design.figure_grids && design.grid_points < 2) {
    fail(ErrorKind::Design, "figure lattice needs at least two points");
  }
}

SkewNormalParams g_params(const DesignSpec &design) {
  return SkewNormalParams{design.mu, design.sigma, design.beta};
}

SkewNormalParams h_params(const DesignSpec &design) {
  return SkewNormalParams{-design.mu, design.sigma, -design.beta};
}

double true_lambda(const DesignSpec &design, const std::string &label) {
  if (label == "0") return design.lambda0;
  if (label == "1") return design.lambda1;
  fail(ErrorKind::Design, "design has labels \"0\" and \"1\" only");
}

Sample generate_dataset(const DesignSpec &design, RngStream &rng) {
  const SkewNormalParams gp = g_params(design);
  const SkewNormalParams hp = h_params(design);
  std::vector<Observation> observations;
  observations.reserve(design.n);
  for (std::size_t i = 0; i < design.n; ++i) {
    const bool x1 = rng.next_bernoulli(design.p_x1);
    const double lambda = x1 ? design.lambda1 : design.lambda0;
    const bool t = rng.next_bernoulli(lambda);
    const double y = skew_normal_draw(t ? gp : hp, rng);
    observations.push_back(Observation{y, x1 ? "1" : "0"});
  }
  return Sample::from_observations(std::move(observations));
}

Sample generate_mixture_sample(const std::vector<std::string> &labels,
                               const std::vector<double> &label_probs,
                               const std::vector<double> &lambdas,
                               const SkewNormalParams &g, const SkewNormalParams &h,
                               std::size_t n, RngStream &rng) {
  if (labels.empty() || labels.size() != label_probs.size() ||
      labels.size() != lambdas.size()) {
    fail(ErrorKind::Design, "labels, probabilities and lambdas must align");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    require_probability("label probability", label_probs[i]);
    require_probability("lambda", lambdas[i]);
    total += label_probs[i];
  }
  if (std::fabs(total - 1.0) > 1e-9) {
    fail(ErrorKind::Design, "label probabilities must sum to one");
  }
  validate(g);
  validate(h);

  std::vector<Observation> observations;
  observations.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = rng.next_unit();
    std::size_t idx = 0;
    double cum = label_probs[0];
    while (u >= cum && idx + 1 < labels.size()) {
      ++idx;
      cum += label_probs[idx];
    }
    const bool t = rng.next_bernoulli(lambdas[idx]);
    const double y = skew_normal_draw(t ? g : h, rng);
    observations.push_back(Observation{y, labels[idx]});
  }
  return Sample::from_observations(std::move(observations));
}

double pooled_mixture_cdf(const DesignSpec &design, double y) {
  const double mean_lambda =
      (1.0 - design.p_x1) * design.lambda0 + design.p_x1 * design.lambda1;
  return mean_lambda * skew_normal_cdf(g_params(design), y) +
         (1.0 - mean_lambda) * skew_normal_cdf(h_params(design), y);
}

double pooled_mixture_quantile(const DesignSpec &design, double p) {
  if (!(p > 0.0) || !(p < 1.0)) {
    fail(ErrorKind::Design, "quantile level must lie strictly in (0, 1)");
  }
  const double span = 8.0 * design.sigma + std::fabs(design.mu) + 1.0;
  double lo = -span, hi = span;
  for (int i = 0; i < 200 && pooled_mixture_cdf(design, lo) >= p; ++i) lo *= 2.0;
  for (int i = 0; i < 200 && pooled_mixture_cdf(design, hi) <= p; ++i) hi *= 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (pooled_mixture_cdf(design, mid) < p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> figure_grid(const DesignSpec &design, std::size_t points) {
  const double lo = pooled_mixture_quantile(design, 0.001);
  const double hi = pooled_mixture_quantile(design, 0.999);
  std::vector<double> grid(points);
  for (std::size_t i = 0; i < points; ++i) {
    grid[i] = lo + (hi - lo) * static_cast<double>(i) /
                       static_cast<double>(points - 1);
  }
  return grid;
}

TrueCurves true_curves(const DesignSpec &design, const std::vector<double> &grid) {
  const SkewNormalParams gp = g_params(design);
  const SkewNormalParams hp = h_params(design);
  TrueCurves out;
  out.g.reserve(grid.size());
  out.h.reserve(grid.size());
  out.f_x0.reserve(grid.size());
  out.f_x1.reserve(grid.size());
  for (double y : grid) {
    const double g = skew_normal_cdf(gp, y);
    const double h = skew_normal_cdf(hp, y);
    out.g.push_back(g);
    out.h.push_back(h);
    out.f_x0.push_back(design.lambda0 * g + (1.0 - design.lambda0) * h);
    out.f_x1.push_back(design.lambda1 * g + (1.0 - design.lambda1) * h);
  }
  return out;
}

unsigned resolve_worker_count(std::size_t jobs) {
  unsigned workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (const char *env = std::getenv("TAILMIX_THREADS")) {
    char *end = nullptr;
    const unsigned long parsed = std::strtoul(env, &end, 10);
    if (end != env && parsed >= 1) {
      workers = static_cast<unsigned>(std::min<unsigned long>(parsed, 1024));
    }
  }
  if (jobs < workers) workers = static_cast<unsigned>(jobs);
  if (workers == 0) workers = 1;
  return workers;
}

StudyReport run_study(const DesignSpec &design) {
  validate(design);
  const auto started = std::chrono::steady_clock::now();

  std::vector<double> lattice;
  if (design.figure_grids) {
    lattice = figure_grid(design, design.grid_points);
  }

  std::vector<RepOutcome> outcomes(design.reps);
  const unsigned workers = resolve_worker_count(design.reps);
  if (workers <= 1) {
    for (std::size_t r = 0; r < design.reps; ++r) {
      outcomes[r] = run_one_rep(design, lattice, r);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        while (true) {
          const std::size_t r = next.fetch_add(1);
          if (r >= design.reps) return;
          outcomes[r] = run_one_rep(design, lattice, r);
        }
      });
    }
    for (auto &t : pool) t.join();
  }

  // Aggregation folds in replication order, so the report does not depend
  // on how replications were scheduled.
  std::vector<const RepOutcome *> included;
  included.reserve(design.reps);
  for (const RepOutcome &rep : outcomes) {
    if (rep.ok) included.push_back(&rep);
  }

  StudyReport report;
  report.design = design;
  report.included_reps = included.size();
  report.excluded_reps = design.reps - included.size();
  if (included.empty()) {
    fail(ErrorKind::DegenerateDenominator,
         "every replication failed; the design appears degenerate");
  }

  report.targets.push_back(
      summarize_target("lambda0", design.lambda0, included, true));
  report.targets.push_back(
      summarize_target("lambda1", design.lambda1, included, false));

  if (design.figure_grids) {
    const TrueCurves truth = true_curves(design, lattice);
    report.g_curve = summarize_curve(lattice, truth.g, included, true);
    report.h_curve = summarize_curve(lattice, truth.h, included, false);
  }

  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  return report;
}

}  // namespace tailmix
