// Copyright (c) 2026 The tailmix Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <vector>

#include "doctest.h"
#include "support.hpp"
#include "tailmix/error.hpp"
#include "tailmix/mixture.hpp"
#include "tailmix/monte_carlo.hpp"

using namespace tailmix;
namespace ref = testsupport::reference;

namespace {

// A dataset the estimators genuinely like: two well-separated skewed
// components, both groups comfortably sized.
Sample friendly_sample(std::uint64_t seed, std::size_t n = 600) {
  DesignSpec design;
  design.n = n;
  design.seed = seed;
  RngStream rng = RngStream::substream(seed, 0);
  return generate_dataset(design, rng);
}

}  // namespace

TEST_SUITE("mixture") {

TEST_CASE("jacobians against finite differences") {
  RngStream rng(11);
  for (int i = 0; i < 40; ++i) {
    const double zm = 0.05 + 0.85 * rng.next_unit();   // below one
    const double zp = 1.1 + 3.0 * rng.next_unit();     // above one
    const MixingJacobians j = jacobians(zm, zp);
    auto lambda = [](double m, double p) { return (1.0 - m) / (p - m); };
    const double h = 1e-6;
    const double fd_minus = (lambda(zm + h, zp) - lambda(zm - h, zp)) / (2.0 * h);
    const double fd_plus = (lambda(zm, zp + h) - lambda(zm, zp - h)) / (2.0 * h);
    CHECK(j.d_minus == doctest::Approx(fd_minus).epsilon(1e-5));
    CHECK(j.d_plus == doctest::Approx(fd_plus).epsilon(1e-5));
  }
  CHECK_THROWS_AS(jacobians(1.3, 1.3), Error);
}

TEST_CASE("lambda on a friendly design lands near truth") {
  const Sample s = friendly_sample(71, 4000);
  const SubsetTable table(s);
  const MixingProportionEstimate e0 = lambda_hat(table, "0");
  const MixingProportionEstimate e1 = lambda_hat(table, "1");
  CHECK(std::fabs(e0.lambda - 0.25) < 0.2);
  CHECK(std::fabs(e1.lambda - 0.75) < 0.2);
  CHECK(e0.se > 0.0);
  CHECK(e0.ci_low <= e0.lambda_clipped);
  CHECK(e0.ci_high >= e0.lambda_clipped);
  CHECK(e0.ci_low >= 0.0);
  CHECK(e0.ci_high <= 1.0);
  CHECK(e0.q_ell == doctest::Approx(static_cast<double>(e0.iota) /
                                    static_cast<double>(s.subset_count({"0"}))));
  // the two ratios sit on the expected sides of one
  CHECK(e0.zeta_minus.value != e0.zeta_plus.value);
}

TEST_CASE("lambda equals the brute-force reference bitwise") {
  RngStream rng(555);
  int compared = 0;
  for (int rep = 0; rep < 120; ++rep) {
    const std::size_t n0 = 60 + rng.next_u64() % 80;
    const std::size_t n1 = 60 + rng.next_u64() % 80;
    const Sample s = testsupport::random_sample(rng, {"0", "1"}, {n0, n1},
                                                rng.next_bernoulli(0.4));
    const std::vector<double> own = subset_view(s, {"0"});
    const std::vector<double> rest = subset_view(s, {"1"});
    const ref::Lambda want = ref::lambda_from(rest, own, 0.5, 0.6);
    if (!want.ok) {
      CHECK_THROWS_AS(lambda_hat(s, "0", {}, 50), Error);
      continue;
    }
    const MixingProportionEstimate got = lambda_hat(s, "0", {}, 50);
    CHECK(testsupport::same_bits(got.lambda, want.lambda));
    CHECK(testsupport::same_bits(got.lambda_clipped, want.lambda_clipped));
    CHECK(testsupport::same_bits(got.se, want.se));
    CHECK(testsupport::same_bits(got.ci_low, want.ci_low));
    CHECK(testsupport::same_bits(got.ci_high, want.ci_high));
    CHECK(got.iota == want.iota);
    ++compared;
  }
  CHECK(compared > 60);  // most random cases must be estimable
}

TEST_CASE("lambda is invariant under strictly increasing outcome maps") {
  const Sample s = friendly_sample(3, 800);
  const MixingProportionEstimate base = lambda_hat(s, "0");

  std::vector<Observation> warped;
  for (const Observation &obs : s.observations()) {
    warped.push_back(Observation{std::atan(obs.y * 0.4) * 3.0, obs.x});
  }
  const MixingProportionEstimate mapped =
      lambda_hat(Sample::from_observations(std::move(warped)), "0");

  // counts at the mapped cuts are identical, so everything but the cut
  // point itself is bit-identical
  CHECK(testsupport::same_bits(base.lambda, mapped.lambda));
  CHECK(testsupport::same_bits(base.se, mapped.se));
  CHECK(base.iota == mapped.iota);
  CHECK(base.zeta_minus.cut_point != mapped.zeta_minus.cut_point);
}

TEST_CASE("lambda error taxonomy") {
  const Sample s = friendly_sample(9, 300);
  CHECK_THROWS_AS(lambda_hat(s, "7"), Error);           // unknown label
  CHECK_THROWS_AS(lambda_hat(s, "0", {}, 10000), Error);  // min size

  // single label: no complement group
  const Sample lone = testsupport::make_sample({1, 2, 3, 4}, {"z"});
  try {
    lambda_hat(lone, "z");
    FAIL("expected a Partition error");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::Partition);
  }

  // identical groups: both ratios collapse to one
  std::vector<Observation> twin;
  for (int i = 0; i < 120; ++i) {
    const double y = static_cast<double>(i % 60);
    twin.push_back(Observation{y, "0"});
    twin.push_back(Observation{y, "1"});
  }
  try {
    lambda_hat(Sample::from_observations(std::move(twin)), "0");
    FAIL("expected a DegenerateDenominator error");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::DegenerateDenominator);
  }
}

TEST_CASE("component curves reconstruct both group CDFs exactly") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    const Sample s = friendly_sample(seed, 900);
    const SubsetTable table(s);
    const ComponentCdfEstimate est = component_cdfs(table, {"0"}, {"1"});
    const auto [la, lb] = implied_group_lambdas(est);
    auto va = table.view({"0"});
    auto vb = table.view({"1"});
    double worst = 0.0;
    for (std::size_t i = 0; i < est.grid.size(); ++i) {
      const double y = est.grid[i];
      const double fa = va->ecdf(y);
      const double fb = vb->ecdf(y);
      worst = std::max(worst, std::fabs(la * est.g[i] + (1.0 - la) * est.h[i] - fa));
      worst = std::max(worst, std::fabs(lb * est.g[i] + (1.0 - lb) * est.h[i] - fb));
    }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("component curves equal the brute-force reference bitwise") {
  RngStream rng(808);
  int compared = 0;
  for (int rep = 0; rep < 60; ++rep) {
    const std::size_t na = 60 + rng.next_u64() % 100;
    const std::size_t nb = 60 + rng.next_u64() % 100;
    const Sample s = testsupport::random_sample(rng, {"a", "b"}, {na, nb},
                                                rng.next_bernoulli(0.4));
    const SubsetTable table(s);
    const std::vector<double> ya = subset_view(s, {"a"});
    const std::vector<double> yb = subset_view(s, {"b"});

    ComponentCdfEstimate est;
    try {
      est = component_cdfs(table, {"a"}, {"b"});
    } catch (const Error &) {
      const ref::Curves want = ref::component_curves(ya, yb, {}, 0.5, 0.6);
      CHECK_FALSE(want.ok);
      continue;
    }
    const ref::Curves want = ref::component_curves(ya, yb, est.grid, 0.5, 0.6);
    REQUIRE(want.ok);
    for (std::size_t i = 0; i < est.grid.size(); ++i) {
      CHECK(testsupport::same_bits(est.g[i], want.g[i]));
      CHECK(testsupport::same_bits(est.h[i], want.h[i]));
      CHECK(testsupport::same_bits(est.g_se[i], want.g_se[i]));
      CHECK(testsupport::same_bits(est.h_se[i], want.h_se[i]));
      CHECK(testsupport::same_bits(est.g_lo[i], want.g_lo[i]));
      CHECK(testsupport::same_bits(est.h_hi[i], want.h_hi[i]));
      CHECK(testsupport::same_bits(est.g_jacobian[i], want.g_jacobian[i]));
      CHECK(testsupport::same_bits(est.h_jacobian[i], want.h_jacobian[i]));
    }
    ++compared;
  }
  CHECK(compared > 30);
}

TEST_CASE("default grid is the sorted unique pooled outcomes") {
  const Sample big = [] {
    std::vector<Observation> obs;
    RngStream rng(1);
    for (int i = 0; i < 120; ++i) {
      // distinct group laws keep both tail ratios away from one; eighth-unit
      // rounding plants duplicate outcomes for the grid to deduplicate
      const double shift = i % 2 == 0 ? 0.0 : 1.75;
      obs.push_back(
          Observation{std::floor((shift + rng.next_normal()) * 8.0) / 8.0,
                      i % 2 == 0 ? "a" : "b"});
    }
    return Sample::from_observations(std::move(obs));
  }();
  const ComponentCdfEstimate est = component_cdfs(SubsetTable(big), {"a"}, {"b"},
                                                  {}, std::nullopt, 30);
  CHECK(est.grid.size() < big.size());  // duplicates removed
  for (std::size_t i = 1; i < est.grid.size(); ++i) {
    CHECK(est.grid[i] > est.grid[i - 1]);
  }
  const std::vector<double> pooled = subset_view(big, {"a", "b"});
  CHECK(est.grid.front() == *std::min_element(pooled.begin(), pooled.end()));
  CHECK(est.grid.back() == *std::max_element(pooled.begin(), pooled.end()));
}

TEST_CASE("explicit grids are validated and honored") {
  const Sample s = friendly_sample(5, 400);
  const SubsetTable table(s);
  const std::vector<double> grid{-2.0, -1.0, 0.5, 2.0};
  const ComponentCdfEstimate est =
      component_cdfs(table, {"0"}, {"1"}, {}, grid);
  CHECK(est.grid == grid);
  CHECK(est.g.size() == 4);
  CHECK_THROWS_AS(
      component_cdfs(table, {"0"}, {"1"}, {}, std::vector<double>{1.0, 1.0}),
      Error);
  CHECK_THROWS_AS(
      component_cdfs(table, {"0"}, {"1"}, {}, std::vector<double>{2.0, 1.0}),
      Error);
}

TEST_CASE("one-sided estimates are bit-identical halves of the two-sided") {
  const Sample s = friendly_sample(13, 500);
  const SubsetTable table(s);
  const ComponentCdfEstimate both = component_cdfs(table, {"0"}, {"1"});
  const ComponentCdfEstimate left =
      component_cdf_one_sided(table, {"0"}, {"1"}, TailSide::Left);
  const ComponentCdfEstimate right =
      component_cdf_one_sided(table, {"0"}, {"1"}, TailSide::Right);

  CHECK(left.has_g);
  CHECK_FALSE(left.has_h);
  CHECK(left.h.empty());
  CHECK_FALSE(left.zeta_plus.has_value());
  CHECK(right.has_h);
  CHECK_FALSE(right.has_g);

  REQUIRE(left.g.size() == both.g.size());
  REQUIRE(right.h.size() == both.h.size());
  for (std::size_t i = 0; i < both.grid.size(); ++i) {
    CHECK(testsupport::same_bits(left.g[i], both.g[i]));
    CHECK(testsupport::same_bits(left.g_se[i], both.g_se[i]));
    CHECK(testsupport::same_bits(right.h[i], both.h[i]));
    CHECK(testsupport::same_bits(right.h_se[i], both.h_se[i]));
  }
}

TEST_CASE("step evaluation of stored curves") {
  ComponentCdfEstimate est;
  est.grid = {0.0, 1.0, 2.0};
  est.has_g = true;
  est.g = {0.2, 0.5, 1.0};
  CHECK(step_eval(est, ComponentKind::G, -0.5) == 0.0);
  CHECK(step_eval(est, ComponentKind::G, 0.0) == 0.2);
  CHECK(step_eval(est, ComponentKind::G, 0.99) == 0.2);
  CHECK(step_eval(est, ComponentKind::G, 1.0) == 0.5);
  CHECK(step_eval(est, ComponentKind::G, 7.0) == 1.0);
  CHECK_THROWS_AS(step_eval(est, ComponentKind::H, 1.0), Error);
}

TEST_CASE("implied group lambdas require a two-sided estimate") {
  const Sample s = friendly_sample(21, 500);
  const SubsetTable table(s);
  const ComponentCdfEstimate left =
      component_cdf_one_sided(table, {"0"}, {"1"}, TailSide::Left);
  CHECK_THROWS_AS(implied_group_lambdas(left), Error);

  const ComponentCdfEstimate both = component_cdfs(table, {"0"}, {"1"});
  const auto [la, lb] = implied_group_lambdas(both);
  // group 0 leans H, group 1 leans G in this design
  CHECK(la < lb);
}

TEST_CASE("degenerate weight raised when tails are indistinguishable") {
  std::vector<Observation> twin;
  for (int i = 0; i < 200; ++i) {
    const double y = static_cast<double>(i % 100) / 10.0;
    twin.push_back(Observation{y, "a"});
    twin.push_back(Observation{y, "b"});
  }
  const Sample s = Sample::from_observations(std::move(twin));
  try {
    component_cdfs(SubsetTable(s), {"a"}, {"b"});
    FAIL("expected a DegenerateWeight error");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::DegenerateWeight);
  }
}

}  // TEST_SUITE
