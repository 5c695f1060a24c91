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
// Applying a fitted model: cluster prediction, loss-based anomaly scores,
// empirical risk, hard cluster extraction from the mixture matrix, and the
// empirical-tail-mass criterion used to pick the cluster count.

#ifndef MEXICO_INFERENCE_HPP
#define MEXICO_INFERENCE_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mexico/core.hpp"
#include "mexico/matrix.hpp"
#include "mexico/tail.hpp"

namespace mexico {

struct ClusterAssignment {
  std::size_t cluster = 0;       // argmax_j (x W)^j, lowest index on ties
  double confidence = 0.0;       // the winning score (x W)^cluster
  bool below_threshold = false;  // input was not extreme; asymptotics do not apply
};

/// Predicted cluster for a standardized point. Non-extreme inputs are scored
/// anyway but flagged.
inline ClusterAssignment predict_cluster(std::span<const double> x, const FittedModel& model) {
  if (x.size() != model.p()) throw std::invalid_argument("predict_cluster: dimension mismatch");
  const std::vector<double> scores = vec_mat(x, model.W);
  ClusterAssignment out;
  out.cluster = argmax_index(scores);
  out.confidence = scores[out.cluster];
  out.below_threshold = linf_norm(x) < model.threshold;
  return out;
}

/// Loss of the best mixture reconstruction on the angular point
/// theta = x / |x|_inf: (|theta|_1 - max_j (theta W)^j) / p. Always in [0, 1]
/// for column-stochastic W; higher means harder to reconstruct, i.e. more
/// anomalous.
inline double anomaly_score(std::span<const double> x, const Matrix& w) {
  if (x.size() != w.rows()) throw std::invalid_argument("anomaly_score: dimension mismatch");
  const double norm = linf_norm(x);
  if (!(norm > 0.0)) throw std::invalid_argument("anomaly_score: zero vector");
  std::vector<double> theta(x.begin(), x.end());
  for (auto& e : theta) e /= norm;
  const std::vector<double> scores = vec_mat(theta, w);
  const double best = scores[argmax_index(scores)];
  return (l1_norm(theta) - best) / static_cast<double>(w.rows());
}

inline double anomaly_score(std::span<const double> x, const FittedModel& model) {
  return anomaly_score(x, model.W);
}

/// Mean anomaly score over angular rows.
inline double empirical_risk(const Matrix& angular_rows, const Matrix& w) {
  if (angular_rows.rows() == 0) throw std::invalid_argument("empirical_risk: empty sample");
  double s = 0.0;
  for (std::size_t i = 0; i < angular_rows.rows(); ++i)
    s += anomaly_score(angular_rows.row(i), w);
  return s / static_cast<double>(angular_rows.rows());
}

/// Hard feature clusters from the mixture matrix: feature i joins cluster j
/// when W_i^j exceeds rel_threshold times the column maximum.
inline std::vector<std::vector<std::size_t>> extract_clusters(const Matrix& w,
                                                              double rel_threshold = 0.5) {
  if (!(rel_threshold > 0.0) || rel_threshold >= 1.0)
    throw std::invalid_argument("extract_clusters: rel_threshold must lie in (0, 1)");
  std::vector<std::vector<std::size_t>> clusters(w.cols());
  for (std::size_t j = 0; j < w.cols(); ++j) {
    double top = 0.0;
    for (std::size_t i = 0; i < w.rows(); ++i) top = std::max(top, w(i, j));
    for (std::size_t i = 0; i < w.rows(); ++i)
      if (w(i, j) > rel_threshold * top) clusters[j].push_back(i);
  }
  return clusters;
}

namespace detail {

inline double tail_mass(const Matrix& rows, std::size_t k, bool use_inf) {
  if (k == 0) throw std::invalid_argument("tail mass: k must be positive");
  if (k > rows.rows()) throw std::invalid_argument("tail mass: k exceeds the sample size");
  const double radius = static_cast<double>(rows.rows()) / static_cast<double>(k);
  std::size_t count = 0;
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    const double norm = use_inf ? linf_norm(rows.row(i)) : l1_norm(rows.row(i));
    if (norm > radius) ++count;
  }
  return static_cast<double>(count) / static_cast<double>(k);
}

}  // namespace detail

/// Empirical exponent-measure mass of {|x|_1 > 1} at scaling n/k.
inline double tail_mass_l1(const Matrix& v, std::size_t k) {
  return detail::tail_mass(v, k, /*use_inf=*/false);
}

/// Empirical exponent-measure mass of {|x|_inf > 1} at scaling n/k,
/// typically applied to the transformed matrix V W.
inline double tail_mass_inf(const Matrix& vw, std::size_t k) {
  return detail::tail_mass(vw, k, /*use_inf=*/true);
}

struct SelectMResult {
  std::size_t m = 0;
  std::vector<double> gaps;      // |mass_inf(V W_m) - mass_l1(V)| per candidate
  bool within_tolerance = false; // false means the argmin-gap fallback fired
};

/// Picks the smallest candidate m whose transformed sup-norm tail mass comes
/// within epsilon (relative) of the l1 tail mass of the input; falls back to
/// the argmin-gap candidate when none qualifies.
inline SelectMResult select_m(const Matrix& v, std::span<const std::size_t> candidates,
                              double epsilon, const FitConfig& cfg) {
  if (candidates.empty()) throw std::invalid_argument("select_m: empty candidate list");
  for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
    if (candidates[idx] >= v.cols())
      throw std::invalid_argument("select_m: candidates must be < p");
    if (idx > 0 && candidates[idx] <= candidates[idx - 1])
      throw std::invalid_argument("select_m: candidates must be strictly increasing");
  }

  const ExtremeSet ext = select_extremes(v, cfg.gamma);
  const double mass1 = tail_mass_l1(v, ext.k());

  SelectMResult res;
  std::size_t best_idx = 0;
  for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
    FitConfig c = cfg;
    c.m = candidates[idx];
    const FitResult r = fit_extremes(ext, c);
    const double mass_inf = tail_mass_inf(matmul(v, r.W), ext.k());
    const double gap = std::abs(mass_inf - mass1);
    res.gaps.push_back(gap);
    const bool close = std::isinf(epsilon) || gap <= epsilon * mass1;
    if (!res.within_tolerance && close) {
      res.m = candidates[idx];
      res.within_tolerance = true;
    }
    if (gap < res.gaps[best_idx]) best_idx = idx;
  }
  if (!res.within_tolerance) res.m = candidates[best_idx];
  return res;
}

}  // namespace mexico

#endif  // MEXICO_INFERENCE_HPP
