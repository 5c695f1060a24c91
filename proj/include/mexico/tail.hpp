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
// Tail preprocessing: empirical Pareto standardization of the margins,
// selection of the sup-norm-largest sub-sample, and normalization of the
// selected rows to angular points.

#ifndef MEXICO_TAIL_HPP
#define MEXICO_TAIL_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mexico/matrix.hpp"

namespace mexico {

/// Rejects matrices that are not valid observation data: every entry must be
/// finite and nonnegative, with n >= 1 samples of p >= 2 features.
inline void validate_data(const Matrix& raw) {
  if (raw.rows() < 1) throw std::invalid_argument("data matrix must have at least one row");
  if (raw.cols() < 2) throw std::invalid_argument("data matrix must have at least two columns");
  for (std::size_t i = 0; i < raw.rows(); ++i)
    for (std::size_t j = 0; j < raw.cols(); ++j) {
      const double x = raw(i, j);
      if (!std::isfinite(x))
        throw std::invalid_argument("non-finite entry at row " + std::to_string(i) + " column " +
                                    std::to_string(j));
      if (x < 0.0)
        throw std::invalid_argument("negative entry at row " + std::to_string(i) + " column " +
                                    std::to_string(j));
    }
}

/// Per-margin empirical c.d.f.s fitted on training data, mapping values to
/// standard Pareto scale via v = 1 / (1 - F(x)) with F(x) = #{train <= x}/(n+1).
/// Ties take the max rank (the <= count). A value above every training value
/// maps to the n/(n+1) quantile by right-continuity. The identity mode passes
/// data through untouched, for margins already on a standard heavy-tailed
/// scale.
class Standardizer {
public:
  Standardizer() = default;

  static Standardizer fit(const Matrix& train) {
    validate_data(train);
    Standardizer s;
    s.columns_.resize(train.cols());
    for (std::size_t j = 0; j < train.cols(); ++j) {
      s.columns_[j] = train.col(j);
      std::sort(s.columns_[j].begin(), s.columns_[j].end());
    }
    return s;
  }

  static Standardizer identity(std::size_t p) {
    Standardizer s;
    s.identity_ = true;
    s.p_ = p;
    return s;
  }

  static Standardizer from_tables(std::vector<std::vector<double>> cols) {
    Standardizer s;
    s.columns_ = std::move(cols);
    return s;
  }

  bool is_identity() const { return identity_; }
  std::size_t n_features() const { return identity_ ? p_ : columns_.size(); }
  std::size_t train_size() const { return identity_ ? 0 : columns_.front().size(); }
  const std::vector<std::vector<double>>& tables() const { return columns_; }

  double transform_one(std::size_t j, double x) const {
    if (identity_) return x;
    const auto& col = columns_[j];
    const double n = static_cast<double>(col.size());
    const auto count =
        static_cast<double>(std::upper_bound(col.begin(), col.end(), x) - col.begin());
    // 1 / (1 - F(x)) with F(x) = count/(n+1), evaluated as one ratio
    return (n + 1.0) / (n + 1.0 - count);
  }

  Matrix transform(const Matrix& data) const {
    if (data.cols() != n_features())
      throw std::invalid_argument("standardizer: feature count mismatch (" +
                                  std::to_string(data.cols()) + " vs " +
                                  std::to_string(n_features()) + ")");
    if (identity_) return data;
    Matrix out(data.rows(), data.cols());
    for (std::size_t j = 0; j < data.cols(); ++j)
      for (std::size_t i = 0; i < data.rows(); ++i) out(i, j) = transform_one(j, data(i, j));
    return out;
  }

private:
  std::vector<std::vector<double>> columns_;  // sorted training values per margin
  bool identity_ = false;
  std::size_t p_ = 0;
};

/// Fits the marginal c.d.f.s on `raw` and returns them with the standardized
/// training matrix (every entry in [1, n+1]).
inline std::pair<Standardizer, Matrix> rank_standardize(const Matrix& raw) {
  auto s = Standardizer::fit(raw);
  return {s, s.transform(raw)};
}

/// The floor(n*gamma) rows of largest sup norm, in non-increasing norm order.
struct ExtremeSet {
  Matrix rows;                       // k x p
  std::vector<std::size_t> indices;  // original row ids, same order as rows
  double threshold = 0.0;            // sup norm of the last selected row
  double gamma = 0.0;

  std::size_t k() const { return rows.rows(); }
};

/// Sorts by decreasing sup norm (original index breaks ties) and keeps the
/// top floor(n*gamma) rows.
inline ExtremeSet select_extremes(const Matrix& standardized, double gamma) {
  if (!(gamma > 0.0) || gamma >= 1.0)
    throw std::invalid_argument("select_extremes: gamma must lie in (0, 1)");
  const std::size_t n = standardized.rows();
  const auto k = static_cast<std::size_t>(static_cast<double>(n) * gamma);
  if (k == 0) throw std::invalid_argument("select_extremes: no extremes at this gamma");

  std::vector<double> norms(n);
  for (std::size_t i = 0; i < n; ++i) norms[i] = linf_norm(standardized.row(i));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (norms[a] != norms[b]) return norms[a] > norms[b];
    return a < b;
  });

  ExtremeSet ext;
  ext.gamma = gamma;
  ext.rows = Matrix(k, standardized.cols());
  ext.indices.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < standardized.cols(); ++j)
      ext.rows(i, j) = standardized(ext.indices[i], j);
  ext.threshold = norms[ext.indices[k - 1]];
  return ext;
}

/// Divides each row by its sup norm so every row touches the unit sup sphere.
inline Matrix angular_normalize(const Matrix& rows) {
  Matrix out(rows.rows(), rows.cols());
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    const double norm = linf_norm(rows.row(i));
    if (!(norm > 0.0))
      throw std::invalid_argument("angular_normalize: zero-norm row " + std::to_string(i));
    for (std::size_t j = 0; j < rows.cols(); ++j) out(i, j) = rows(i, j) / norm;
  }
  return out;
}

}  // namespace mexico

#endif  // MEXICO_TAIL_HPP
