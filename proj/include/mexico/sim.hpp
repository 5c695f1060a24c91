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
//
// Heavy-tailed synthetic data with controlled extremal dependence: the
// max-stable logistic family via positive-stable mixing, its asymmetric
// extension over feature subsets, and labeled clustered datasets.

#ifndef MEXICO_SIM_HPP
#define MEXICO_SIM_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "mexico/matrix.hpp"
#include "mexico/rng.hpp"

namespace mexico {

/// One-sided stable draw S with Laplace transform E[exp(-tS)] = exp(-t^delta),
/// by the Chambers-Mallows-Stuck construction; degenerate at 1 for delta = 1.
inline double sample_positive_stable(double delta, Rng& rng) {
  if (!(delta > 0.0) || delta > 1.0)
    throw std::invalid_argument("sample_positive_stable: delta must lie in (0, 1]");
  if (delta == 1.0) return 1.0;
  const double u = rng.uniform(0.0, std::numbers::pi);
  const double e = rng.exponential();
  const double ratio = std::sin((1.0 - delta) * u) / e;
  return std::pow(ratio, (1.0 - delta) / delta) * std::sin(delta * u) /
         std::pow(std::sin(u), 1.0 / delta);
}

struct LogisticSpec {
  std::size_t p = 2;
  double delta = 0.5;  // 1 = independence, -> 0 = comonotone
  std::size_t n = 1;
  std::uint64_t seed = 0;

  void validate() const {
    if (p < 1) throw std::invalid_argument("logistic spec: p must be >= 1");
    if (!(delta > 0.0) || delta > 1.0)
      throw std::invalid_argument("logistic spec: delta must lie in (0, 1]");
    if (n < 1) throw std::invalid_argument("logistic spec: n must be >= 1");
  }
};

namespace detail {

/// One logistic vector with unit Frechet margins: X_j = (S / E_j)^delta.
inline void logistic_row(double delta, std::size_t p, Rng& rng, double* out) {
  const double s = sample_positive_stable(delta, rng);
  for (std::size_t j = 0; j < p; ++j) out[j] = std::pow(s / rng.exponential(), delta);
}

}  // namespace detail

/// i.i.d. rows with joint c.d.f. exp{ -(sum_j x_j^(-1/delta))^delta } and unit
/// Frechet margins.
inline Matrix sample_logistic(const LogisticSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  Matrix out(spec.n, spec.p);
  std::vector<double> row(spec.p);
  for (std::size_t i = 0; i < spec.n; ++i) {
    detail::logistic_row(spec.delta, spec.p, rng, row.data());
    for (std::size_t j = 0; j < spec.p; ++j) out(i, j) = row[j];
  }
  return out;
}

struct AsymSubset {
  std::vector<std::size_t> features;  // 0-based, strictly increasing
  double alpha = 0.5;                 // within-subset dependence
  std::vector<double> beta;           // asymmetry weight per listed feature
};

struct AsymLogisticSpec {
  std::size_t p = 2;
  std::vector<AsymSubset> subsets;
  std::size_t n = 1;
  std::uint64_t seed = 0;

  void validate() const {
    if (p < 1) throw std::invalid_argument("asym spec: p must be >= 1");
    if (n < 1) throw std::invalid_argument("asym spec: n must be >= 1");
    if (subsets.empty()) throw std::invalid_argument("asym spec: at least one subset required");
    std::vector<double> weight(p, 0.0);
    for (const auto& sub : subsets) {
      if (sub.features.empty()) throw std::invalid_argument("asym spec: empty subset");
      if (sub.beta.size() != sub.features.size())
        throw std::invalid_argument("asym spec: one beta weight per subset feature required");
      if (!(sub.alpha > 0.0) || sub.alpha > 1.0)
        throw std::invalid_argument("asym spec: alpha must lie in (0, 1]");
      for (std::size_t t = 0; t < sub.features.size(); ++t) {
        if (sub.features[t] >= p) throw std::invalid_argument("asym spec: feature out of range");
        if (t > 0 && sub.features[t] <= sub.features[t - 1])
          throw std::invalid_argument("asym spec: subset features must be strictly increasing");
        if (sub.beta[t] < 0.0) throw std::invalid_argument("asym spec: beta must be >= 0");
        weight[sub.features[t]] += sub.beta[t];
      }
    }
    for (std::size_t j = 0; j < p; ++j)
      if (std::abs(weight[j] - 1.0) > 1e-9)
        throw std::invalid_argument("asym spec: beta weights of feature " + std::to_string(j) +
                                    " sum to " + std::to_string(weight[j]) + ", expected 1");
  }
};

namespace detail {

/// Max-mixture engine shared by the validated sampler and the clustered
/// generator (which deliberately uses sub-unit noise weights).
inline Matrix asym_logistic_rows(std::size_t p, const std::vector<AsymSubset>& subsets,
                                 std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  Matrix out(n, p, 0.0);
  std::vector<double> buf;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& sub : subsets) {
      buf.resize(sub.features.size());
      logistic_row(sub.alpha, sub.features.size(), rng, buf.data());
      for (std::size_t t = 0; t < sub.features.size(); ++t) {
        const std::size_t j = sub.features[t];
        out(i, j) = std::max(out(i, j), sub.beta[t] * buf[t]);
      }
    }
  }
  return out;
}

}  // namespace detail

/// X_j = max over subsets K containing j of beta_{j,K} Y_j^(K), each Y^(K) an
/// independent logistic(alpha_K) vector on K. Unit Frechet margins when the
/// beta weights of every feature sum to one.
inline Matrix sample_asym_logistic(const AsymLogisticSpec& spec) {
  spec.validate();
  return detail::asym_logistic_rows(spec.p, spec.subsets, spec.n, spec.seed);
}

struct LabeledData {
  Matrix values;                    // n x p
  std::vector<std::size_t> labels;  // ground-truth cluster per row
};

/// Clustered heavy-tailed data: one logistic subset per cluster (dependence
/// delta_in, unit Frechet margins) plus independent Frechet noise at weight
/// 1e-3 on features no cluster covers. A row's label is the cluster holding
/// its largest feature; noise features essentially never win at that weight,
/// and when one does the label falls back to the largest covered feature.
inline LabeledData sample_clustered(std::size_t p, const std::vector<std::vector<std::size_t>>& clusters,
                                    double delta_in, std::size_t n, std::uint64_t seed) {
  if (clusters.empty()) throw std::invalid_argument("sample_clustered: no clusters given");
  std::vector<int> owner(p, -1);
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    if (clusters[c].size() < 2)
      throw std::invalid_argument("sample_clustered: clusters must have size >= 2");
    for (std::size_t j : clusters[c]) {
      if (j >= p) throw std::invalid_argument("sample_clustered: feature out of range");
      if (owner[j] != -1) throw std::invalid_argument("sample_clustered: overlapping clusters");
      owner[j] = static_cast<int>(c);
    }
  }

  constexpr double kNoiseWeight = 1e-3;
  std::vector<AsymSubset> subsets;
  for (const auto& cluster : clusters) {
    AsymSubset sub;
    sub.features = cluster;
    std::sort(sub.features.begin(), sub.features.end());
    sub.alpha = delta_in;
    sub.beta.assign(sub.features.size(), 1.0);
    subsets.push_back(std::move(sub));
  }
  AsymSubset noise;
  for (std::size_t j = 0; j < p; ++j)
    if (owner[j] == -1) noise.features.push_back(j);
  if (!noise.features.empty()) {
    noise.alpha = 1.0;  // independent components
    noise.beta.assign(noise.features.size(), kNoiseWeight);
    subsets.push_back(std::move(noise));
  }

  LabeledData out;
  out.values = detail::asym_logistic_rows(p, subsets, n, seed);
  out.labels.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = out.values.row(i);
    std::size_t arg = argmax_index(row);
    if (owner[arg] == -1) {
      double best = -1.0;
      for (std::size_t j = 0; j < p; ++j)
        if (owner[j] != -1 && row[j] > best) {
          best = row[j];
          arg = j;
        }
    }
    out.labels[i] = static_cast<std::size_t>(owner[arg]);
  }
  return out;
}

}  // namespace mexico

#endif  // MEXICO_SIM_HPP
