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

#ifndef MEXICO_METRICS_HPP
#define MEXICO_METRICS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace mexico {

struct HCV {
  double homogeneity = 0.0;
  double completeness = 0.0;
  double v_measure = 0.0;
};

namespace detail {

inline std::vector<std::size_t> compact_labels(std::span<const int> labels) {
  std::map<int, std::size_t> ids;
  for (int l : labels) ids.emplace(l, 0);
  std::size_t next = 0;
  for (auto& [label, id] : ids) id = next++;
  std::vector<std::size_t> out(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) out[i] = ids[labels[i]];
  return out;
}

inline double entropy(const std::vector<double>& counts, double total) {
  double h = 0.0;
  for (double c : counts)
    if (c > 0.0) h -= (c / total) * std::log(c / total);
  return h;
}

}  // namespace detail

/// Homogeneity, completeness and their harmonic mean, from the contingency
/// table of class vs cluster labels. Entropies in nats; a labeling with zero
/// class (resp. cluster) entropy scores h = 1 (resp. c = 1), and v = 0 when
/// h + c = 0.
inline HCV h_c_v(std::span<const int> truth, std::span<const int> pred) {
  if (truth.size() != pred.size()) throw std::invalid_argument("h_c_v: length mismatch");
  if (truth.empty()) throw std::invalid_argument("h_c_v: empty labelings");
  const auto classes = detail::compact_labels(truth);
  const auto clusters = detail::compact_labels(pred);
  const std::size_t nc = *std::max_element(classes.begin(), classes.end()) + 1;
  const std::size_t nk = *std::max_element(clusters.begin(), clusters.end()) + 1;
  const auto total = static_cast<double>(truth.size());

  std::vector<double> table(nc * nk, 0.0), class_n(nc, 0.0), cluster_n(nk, 0.0);
  for (std::size_t i = 0; i < truth.size(); ++i) {
    table[classes[i] * nk + clusters[i]] += 1.0;
    class_n[classes[i]] += 1.0;
    cluster_n[clusters[i]] += 1.0;
  }

  const double h_class = detail::entropy(class_n, total);
  const double h_cluster = detail::entropy(cluster_n, total);
  double h_class_given = 0.0, h_cluster_given = 0.0;
  for (std::size_t c = 0; c < nc; ++c)
    for (std::size_t k = 0; k < nk; ++k) {
      const double n = table[c * nk + k];
      if (n > 0.0) {
        h_class_given -= (n / total) * std::log(n / cluster_n[k]);
        h_cluster_given -= (n / total) * std::log(n / class_n[c]);
      }
    }

  HCV out;
  out.homogeneity = h_class == 0.0 ? 1.0 : 1.0 - h_class_given / h_class;
  out.completeness = h_cluster == 0.0 ? 1.0 : 1.0 - h_cluster_given / h_cluster;
  const double hc = out.homogeneity + out.completeness;
  out.v_measure = hc == 0.0 ? 0.0 : 2.0 * out.homogeneity * out.completeness / hc;
  return out;
}

/// Probability that a random positive outranks a random negative, ties
/// counted one half (the rank-sum form).
inline double roc_auc(std::span<const double> scores, std::span<const int> labels) {
  if (scores.size() != labels.size()) throw std::invalid_argument("roc_auc: length mismatch");
  std::size_t pos = 0, neg = 0;
  for (int l : labels) (l != 0 ? pos : neg) += 1;
  if (pos == 0 || neg == 0) throw std::invalid_argument("roc_auc: both classes must be present");

  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

  double rank_sum_pos = 0.0;
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j < order.size() && scores[order[j]] == scores[order[i]]) ++j;
    const double avg_rank = 0.5 * static_cast<double>(i + 1 + j);  // 1-based average rank
    for (std::size_t t = i; t < j; ++t)
      if (labels[order[t]] != 0) rank_sum_pos += avg_rank;
    i = j;
  }
  const double p = static_cast<double>(pos);
  return (rank_sum_pos - p * (p + 1.0) / 2.0) / (p * static_cast<double>(neg));
}

/// Step-interpolated average precision over descending score thresholds,
/// equal scores handled as one group.
inline double average_precision(std::span<const double> scores, std::span<const int> labels) {
  if (scores.size() != labels.size())
    throw std::invalid_argument("average_precision: length mismatch");
  std::size_t pos = 0;
  for (int l : labels)
    if (l != 0) ++pos;
  if (pos == 0) throw std::invalid_argument("average_precision: no positive labels");

  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

  double ap = 0.0;
  double tp = 0.0, fp = 0.0, recall_prev = 0.0;
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j < order.size() && scores[order[j]] == scores[order[i]]) ++j;
    for (std::size_t t = i; t < j; ++t) (labels[order[t]] != 0 ? tp : fp) += 1.0;
    const double recall = tp / static_cast<double>(pos);
    const double precision = tp / (tp + fp);
    ap += (recall - recall_prev) * precision;
    recall_prev = recall;
    i = j;
  }
  return ap;
}

}  // namespace mexico

#endif  // MEXICO_METRICS_HPP
