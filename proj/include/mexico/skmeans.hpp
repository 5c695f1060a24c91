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
// Spherical k-means on the unit l2 sphere, the clustering baseline.

#ifndef MEXICO_SKMEANS_HPP
#define MEXICO_SKMEANS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "mexico/matrix.hpp"
#include "mexico/rng.hpp"

namespace mexico {

struct SkmeansResult {
  Matrix centroids;  // m x p, unit l2 rows
  std::vector<std::size_t> assignments;
  std::vector<double> objective_trace;  // sum of winning cosine similarities
  bool converged = false;
};

namespace detail {

inline std::vector<double> l2_normalized(std::span<const double> v) {
  const double n = l2_norm(v);
  if (!(n > 0.0)) throw std::invalid_argument("spherical_kmeans: zero row");
  std::vector<double> out(v.begin(), v.end());
  for (auto& e : out) e /= n;
  return out;
}

}  // namespace detail

inline std::size_t skmeans_assign(std::span<const double> unit_row, const Matrix& centroids) {
  std::size_t best = 0;
  double best_sim = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < centroids.rows(); ++j) {
    const double sim = dot(unit_row, centroids.row(j));
    if (sim > best_sim) {
      best_sim = sim;
      best = j;
    }
  }
  return best;
}

/// Alternating maximization of the total cosine similarity. Rows are
/// l2-normalized internally; kmeans++-style seeding by cosine distance; an
/// emptied cluster is reseeded from the worst-fit point.
inline SkmeansResult spherical_kmeans(const Matrix& rows, std::size_t m,
                                      std::size_t max_iter = 100, std::uint64_t seed = 0) {
  const std::size_t n = rows.rows();
  const std::size_t p = rows.cols();
  if (m < 1) throw std::invalid_argument("spherical_kmeans: m must be >= 1");
  if (n < m) throw std::invalid_argument("spherical_kmeans: need at least m rows");

  Matrix unit(n, p);
  for (std::size_t i = 0; i < n; ++i) {
    const auto u = detail::l2_normalized(rows.row(i));
    for (std::size_t j = 0; j < p; ++j) unit(i, j) = u[j];
  }

  Rng rng(seed);
  Matrix centroids(m, p);
  std::vector<double> dist(n, 1.0);
  {
    const std::size_t first = rng.index(n);
    for (std::size_t j = 0; j < p; ++j) centroids(0, j) = unit(first, j);
    for (std::size_t c = 1; c < m; ++c) {
      double total = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        double best = -1.0;
        for (std::size_t cc = 0; cc < c; ++cc)
          best = std::max(best, dot(unit.row(i), centroids.row(cc)));
        dist[i] = std::max(0.0, 1.0 - best);
        total += dist[i];
      }
      std::size_t pick = 0;
      if (total > 0.0) {
        double target = rng.uniform() * total;
        for (std::size_t i = 0; i < n; ++i) {
          target -= dist[i];
          if (target <= 0.0) {
            pick = i;
            break;
          }
        }
      } else {
        pick = rng.index(n);
      }
      for (std::size_t j = 0; j < p; ++j) centroids(c, j) = unit(pick, j);
    }
  }

  SkmeansResult res;
  res.assignments.assign(n, 0);
  std::vector<std::size_t> counts(m, 0);
  for (std::size_t it = 0; it < max_iter; ++it) {
    bool changed = false;
    double objective_value = 0.0;
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t a = skmeans_assign(unit.row(i), centroids);
      objective_value += dot(unit.row(i), centroids.row(a));
      if (a != res.assignments[i]) changed = true;
      res.assignments[i] = a;
      counts[a] += 1;
    }
    res.objective_trace.push_back(objective_value);
    if (!changed && it > 0) {
      res.converged = true;
      break;
    }

    Matrix sums(m, p, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < p; ++j) sums(res.assignments[i], j) += unit(i, j);
    for (std::size_t c = 0; c < m; ++c) {
      if (counts[c] == 0) {
        // reseed from the point its centroid explains worst
        std::size_t worst = 0;
        double worst_sim = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
          const double sim = dot(unit.row(i), centroids.row(res.assignments[i]));
          if (sim < worst_sim) {
            worst_sim = sim;
            worst = i;
          }
        }
        for (std::size_t j = 0; j < p; ++j) centroids(c, j) = unit(worst, j);
        continue;
      }
      const double norm = l2_norm(sums.row(c));
      if (norm > 0.0)
        for (std::size_t j = 0; j < p; ++j) centroids(c, j) = sums(c, j) / norm;
    }
  }
  res.centroids = std::move(centroids);
  return res;
}

}  // namespace mexico

#endif  // MEXICO_SKMEANS_HPP
