// Copyright 2026 The mexico Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include <doctest.h>

#include "mexico/sim.hpp"
#include "mexico/tail.hpp"
#include "oracles.hpp"

using namespace mexico;

namespace {

/// For a bivariate max-stable pair with unit Frechet margins the joint c.d.f.
/// at (t, t) is exp(-theta/t); invert it at t = 1.
double extremal_coefficient(const Matrix& data, std::size_t a, std::size_t b) {
  std::size_t below = 0;
  for (std::size_t i = 0; i < data.rows(); ++i)
    if (data(i, a) <= 1.0 && data(i, b) <= 1.0) ++below;
  const double frac = static_cast<double>(below) / static_cast<double>(data.rows());
  return -std::log(frac);
}

double frechet_cdf(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }

}  // namespace

TEST_CASE("positive stable draw is degenerate at delta one") {
  Rng rng(1);
  for (int i = 0; i < 10; ++i) CHECK(sample_positive_stable(1.0, rng) == 1.0);
}

TEST_CASE("positive stable draws are strictly positive") {
  Rng rng(2);
  for (int i = 0; i < 5000; ++i) {
    const double s = sample_positive_stable(0.3, rng);
    CHECK(s > 0.0);
    CHECK(std::isfinite(s));
  }
}

TEST_CASE("positive stable rejects delta outside (0,1]") {
  Rng rng(3);
  CHECK_THROWS_AS(sample_positive_stable(0.0, rng), std::invalid_argument);
  CHECK_THROWS_AS(sample_positive_stable(1.5, rng), std::invalid_argument);
  CHECK_THROWS_AS(sample_positive_stable(-0.2, rng), std::invalid_argument);
}

TEST_CASE("positive stable laplace transform matches exp(-t^delta)") {
  const std::size_t n = 100000;
  for (const double delta : {0.3, 0.5, 0.8}) {
    for (const double t : {1.0, 2.0}) {
      Rng rng(100 + static_cast<std::uint64_t>(delta * 10));
      double mean = 0.0, sq = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double v = std::exp(-t * sample_positive_stable(delta, rng));
        mean += v;
        sq += v * v;
      }
      mean /= static_cast<double>(n);
      const double var = sq / static_cast<double>(n) - mean * mean;
      const double se = std::sqrt(var / static_cast<double>(n));
      const double target = std::exp(-std::pow(t, delta));
      CHECK(std::abs(mean - target) < 3.0 * se + 1e-4);
    }
  }
}

TEST_CASE("logistic margins are unit frechet") {
  const Matrix x = sample_logistic({.p = 3, .delta = 0.5, .n = 20000, .seed = 4});
  for (std::size_t j = 0; j < 3; ++j) {
    std::size_t below = 0;
    for (std::size_t i = 0; i < x.rows(); ++i)
      if (x(i, j) <= 1.0) ++below;
    const double frac = static_cast<double>(below) / static_cast<double>(x.rows());
    CHECK(std::abs(frac - std::exp(-1.0)) < 0.015);
  }
}

TEST_CASE("logistic margins pass a KS test against unit frechet") {
  const std::size_t n = 10000;
  for (const double delta : {0.1, 0.5, 0.9}) {
    const Matrix x = sample_logistic(
        {.p = 2, .delta = delta, .n = n, .seed = 50 + static_cast<std::uint64_t>(delta * 10)});
    for (std::size_t j = 0; j < 2; ++j) {
      const double d = oracles::ks_statistic(x.col(j), frechet_cdf);
      CHECK(d < oracles::ks_critical_01(n));
    }
  }
}

TEST_CASE("pairwise extremal coefficient tracks two to the delta") {
  const std::size_t n = 40000;
  for (const double delta : {0.1, 0.5, 0.9, 1.0}) {
    const Matrix x = sample_logistic(
        {.p = 2, .delta = delta, .n = n, .seed = 60 + static_cast<std::uint64_t>(delta * 10)});
    const double theta = extremal_coefficient(x, 0, 1);
    CHECK(std::abs(theta - std::pow(2.0, delta)) < 0.05);
  }
}

TEST_CASE("joint exceedance ratio approaches 2 - 2^delta at deep thresholds") {
  const std::size_t n = 100000;
  const double t = 30.0;  // n/k with k about n/30
  for (const double delta : {0.1, 0.5, 0.9}) {
    const Matrix x = sample_logistic(
        {.p = 2, .delta = delta, .n = n, .seed = 70 + static_cast<std::uint64_t>(delta * 100)});
    std::size_t joint = 0, marginal = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (x(i, 0) > t) ++marginal;
      if (x(i, 0) > t && x(i, 1) > t) ++joint;
    }
    REQUIRE(marginal > 0);
    const double ratio = static_cast<double>(joint) / static_cast<double>(marginal);
    CHECK(std::abs(ratio - (2.0 - std::pow(2.0, delta))) < 0.05);
  }
}

TEST_CASE("angular mass moves from the diagonal to the axes as delta grows") {
  auto corner_and_edge = [](double delta) {
    const std::size_t n = 20000;
    const Matrix x = sample_logistic({.p = 2, .delta = delta, .n = n, .seed = 81});
    const auto ext = select_extremes(x, 0.05);
    const Matrix ang = angular_normalize(ext.rows);
    std::size_t corner = 0, edge = 0;
    for (std::size_t i = 0; i < ang.rows(); ++i) {
      const double lo = std::min(ang(i, 0), ang(i, 1));
      if (lo > 0.8) ++corner;  // near (1,1): both features large together
      if (lo < 0.2) ++edge;    // near an axis: one feature dominates
    }
    const double k = static_cast<double>(ang.rows());
    return std::pair{static_cast<double>(corner) / k, static_cast<double>(edge) / k};
  };
  const auto strong = corner_and_edge(0.1);
  const auto weak = corner_and_edge(0.9);
  CHECK(strong.first > 0.6);
  CHECK(weak.second > 0.6);
  CHECK(strong.first > weak.first);
  CHECK(weak.second > strong.second);
}

TEST_CASE("single full subset reproduces the plain logistic draw for draw") {
  const LogisticSpec base{.p = 4, .delta = 0.6, .n = 50, .seed = 91};
  AsymLogisticSpec spec;
  spec.p = 4;
  spec.n = 50;
  spec.seed = 91;
  spec.subsets.push_back({.features = {0, 1, 2, 3}, .alpha = 0.6, .beta = {1, 1, 1, 1}});
  const Matrix a = sample_logistic(base);
  const Matrix b = sample_asym_logistic(spec);
  CHECK(a.data() == b.data());
}

TEST_CASE("asymmetric sampler validates the unit-margin weight invariant") {
  AsymLogisticSpec spec;
  spec.p = 3;
  spec.n = 5;
  spec.subsets.push_back({.features = {0, 1}, .alpha = 0.5, .beta = {1.0, 0.6}});
  spec.subsets.push_back({.features = {1, 2}, .alpha = 0.5, .beta = {0.3, 1.0}});
  CHECK_THROWS_AS(sample_asym_logistic(spec), std::invalid_argument);  // feature 1 sums to 0.9
  spec.subsets[1].beta[0] = 0.4;
  CHECK_NOTHROW(sample_asym_logistic(spec));
  spec.subsets[0].features = {1, 0};
  CHECK_THROWS_AS(sample_asym_logistic(spec), std::invalid_argument);  // not increasing
}

TEST_CASE("disjoint subsets are asymptotically independent across clusters") {
  AsymLogisticSpec spec;
  spec.p = 4;
  spec.n = 40000;
  spec.seed = 93;
  spec.subsets.push_back({.features = {0, 1}, .alpha = 0.2, .beta = {1, 1}});
  spec.subsets.push_back({.features = {2, 3}, .alpha = 0.2, .beta = {1, 1}});
  const Matrix x = sample_asym_logistic(spec);
  CHECK(std::abs(extremal_coefficient(x, 0, 2) - 2.0) < 0.05);                  // across subsets
  CHECK(std::abs(extremal_coefficient(x, 0, 1) - std::pow(2.0, 0.2)) < 0.05);   // within

  for (std::size_t j = 0; j < 4; ++j) {
    std::size_t below = 0;
    for (std::size_t i = 0; i < spec.n; ++i)
      if (x(i, j) <= 1.0) ++below;
    const double frac = static_cast<double>(below) / static_cast<double>(spec.n);
    CHECK(std::abs(frac - std::exp(-1.0)) < 0.012);
  }
}

TEST_CASE("clustered generator rejects bad cluster layouts") {
  CHECK_THROWS_AS(sample_clustered(4, {{0, 1}, {1, 2}}, 0.2, 10, 0), std::invalid_argument);
  CHECK_THROWS_AS(sample_clustered(4, {{0}}, 0.2, 10, 0), std::invalid_argument);
  CHECK_THROWS_AS(sample_clustered(4, {{0, 7}}, 0.2, 10, 0), std::invalid_argument);
  CHECK_THROWS_AS(sample_clustered(4, {}, 0.2, 10, 0), std::invalid_argument);
}

TEST_CASE("extreme rows concentrate on the labeled cluster") {
  const auto data = sample_clustered(5, {{0, 1}, {2, 3}}, 0.1, 20000, 95);
  const auto ext = select_extremes(data.values, 0.05);
  std::size_t concordant = 0;
  for (std::size_t i = 0; i < ext.k(); ++i) {
    const auto row = ext.rows.row(i);
    const std::size_t label = data.labels[ext.indices[i]];
    const double in_min = label == 0 ? std::min(row[0], row[1]) : std::min(row[2], row[3]);
    const double out_max = label == 0 ? std::max(row[2], row[3]) : std::max(row[0], row[1]);
    if (in_min > out_max) ++concordant;
  }
  CHECK(static_cast<double>(concordant) >= 0.95 * static_cast<double>(ext.k()));
}

TEST_CASE("labels hit every cluster and are seed deterministic") {
  const auto a = sample_clustered(6, {{0, 1}, {2, 3}, {4, 5}}, 0.3, 3000, 97);
  const auto b = sample_clustered(6, {{0, 1}, {2, 3}, {4, 5}}, 0.3, 3000, 97);
  CHECK(a.values.data() == b.values.data());
  CHECK(a.labels == b.labels);
  const std::set<std::size_t> seen(a.labels.begin(), a.labels.end());
  CHECK(seen == std::set<std::size_t>{0, 1, 2});
}

TEST_CASE("uncovered features carry only small-scale noise") {
  const auto data = sample_clustered(5, {{0, 1}, {2, 3}}, 0.2, 5000, 99);
  double covered_max = 0.0, noise_max = 0.0;
  for (std::size_t i = 0; i < data.values.rows(); ++i) {
    for (std::size_t j = 0; j < 4; ++j) covered_max = std::max(covered_max, data.values(i, j));
    noise_max = std::max(noise_max, data.values(i, 4));
  }
  CHECK(noise_max < 0.05 * covered_max);
  // noise margins stay heavy tailed at scale 1e-3: median about 1e-3/ln 2
  std::vector<double> noise = data.values.col(4);
  std::sort(noise.begin(), noise.end());
  const double med = noise[noise.size() / 2];
  CHECK(med > 0.5e-3);
  CHECK(med < 3e-3);
}
