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
// The penalized bilinear objective over mixture matrices, its gradients, and
// the alternating projected-gradient-ascent fit. W (p x m) mixes features
// into cluster scores, Z (m x k) soft-assigns extreme samples to clusters;
// both stay column-stochastic, W additionally inside the vertex-truncated
// simplex so no cluster collapses onto a single feature.

#ifndef MEXICO_CORE_HPP
#define MEXICO_CORE_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mexico/matrix.hpp"
#include "mexico/rng.hpp"
#include "mexico/simplex.hpp"
#include "mexico/tail.hpp"

namespace mexico {

enum class Projector { dykstra, pocs };

struct FitConfig {
  std::size_t m = 2;                  // number of feature clusters
  double lambda = 5.0;                // column-orthogonality penalty weight
  double tau = 0.6;                   // vertex-cut threshold for W columns
  double gamma = 0.1;                 // extreme fraction, k = floor(n*gamma)
  std::size_t max_outer_iters = 500;
  double obj_tol = 1e-8;              // relative objective-change stop
  double armijo_c = 1e-4;             // sufficient-increase constant
  double backtrack_factor = 0.5;
  double init_step = 1.0;
  std::uint64_t seed = 0;
  bool angular = false;               // fit on sup-normalized extremes
  Projector projector = Projector::dykstra;
  double proj_tol = 1e-9;
  std::size_t proj_max_iter = 10000;

  void validate() const {
    if (m < 1) throw std::invalid_argument("fit config: m must be >= 1");
    if (lambda < 0.0) throw std::invalid_argument("fit config: lambda must be >= 0");
    if (!(tau > 0.0) || tau > 1.0) throw std::invalid_argument("fit config: tau must lie in (0, 1]");
    if (!(gamma > 0.0) || gamma >= 1.0)
      throw std::invalid_argument("fit config: gamma must lie in (0, 1)");
    if (!(armijo_c > 0.0) || armijo_c >= 1.0)
      throw std::invalid_argument("fit config: armijo_c must lie in (0, 1)");
    if (!(backtrack_factor > 0.0) || backtrack_factor >= 1.0)
      throw std::invalid_argument("fit config: backtrack_factor must lie in (0, 1)");
    if (!(init_step > 0.0)) throw std::invalid_argument("fit config: init_step must be positive");
    if (!(obj_tol > 0.0)) throw std::invalid_argument("fit config: obj_tol must be positive");
    if (max_outer_iters < 1)
      throw std::invalid_argument("fit config: max_outer_iters must be >= 1");
  }
};

namespace detail {

inline void check_shapes(const Matrix& x, const Matrix& w, const Matrix* z) {
  if (x.cols() != w.rows())
    throw std::invalid_argument("objective: X is " + std::to_string(x.rows()) + "x" +
                                std::to_string(x.cols()) + " but W has " +
                                std::to_string(w.rows()) + " rows");
  if (z && (z->rows() != w.cols() || z->cols() != x.rows()))
    throw std::invalid_argument("objective: Z must be " + std::to_string(w.cols()) + "x" +
                                std::to_string(x.rows()));
}

/// sum_{i<j} <W^i, W^j> = ( |row-sums|^2 - sum_j |W^j|^2 ) / 2
inline double column_overlap(const Matrix& w) {
  double sq_sum = 0.0, sum_sq = 0.0;
  for (std::size_t q = 0; q < w.rows(); ++q) {
    double s = 0.0;
    for (std::size_t j = 0; j < w.cols(); ++j) {
      const double e = w(q, j);
      s += e;
      sum_sq += e * e;
    }
    sq_sum += s * s;
  }
  return 0.5 * (sq_sum - sum_sq);
}

inline double trace_term(const Matrix& xw, const Matrix& z) {
  // Tr(X W Z) = sum_i (X W)_i . Z^i without forming the k x k product
  double t = 0.0;
  for (std::size_t i = 0; i < xw.rows(); ++i)
    for (std::size_t j = 0; j < xw.cols(); ++j) t += xw(i, j) * z(j, i);
  return t;
}

}  // namespace detail

/// f_lambda(W, Z) = Tr(XWZ)/k - lambda sum_{i<j} <W^i, W^j>.
inline double objective(const Matrix& x, const Matrix& w, const Matrix& z, double lambda) {
  detail::check_shapes(x, w, &z);
  const Matrix xw = matmul(x, w);
  return detail::trace_term(xw, z) / static_cast<double>(x.rows()) -
         lambda * detail::column_overlap(w);
}

/// d f / d Z = (XW)^T / k; independent of Z and lambda.
inline Matrix grad_Z(const Matrix& x, const Matrix& w) {
  detail::check_shapes(x, w, nullptr);
  Matrix g = transpose(matmul(x, w));
  const double inv_k = 1.0 / static_cast<double>(x.rows());
  for (auto& e : g.data()) e *= inv_k;
  return g;
}

/// d f / d W = (ZX)^T / k - lambda G with G^j = sum_{i != j} W^i, the true
/// gradient of the symmetric overlap penalty.
inline Matrix grad_W(const Matrix& x, const Matrix& w, const Matrix& z, double lambda) {
  detail::check_shapes(x, w, &z);
  Matrix g = transpose(matmul(z, x));
  const double inv_k = 1.0 / static_cast<double>(x.rows());
  for (auto& e : g.data()) e *= inv_k;
  if (lambda > 0.0 && w.cols() > 1) {
    for (std::size_t q = 0; q < w.rows(); ++q) {
      double s = 0.0;
      for (std::size_t j = 0; j < w.cols(); ++j) s += w(q, j);
      for (std::size_t j = 0; j < w.cols(); ++j) g(q, j) -= lambda * (s - w(q, j));
    }
  }
  return g;
}

/// Column of `m` projected onto the truncated simplex (W) per `cfg`.
inline std::vector<double> project_w_column(std::span<const double> col, const MSetSpec& spec,
                                            const FitConfig& cfg) {
  if (cfg.projector == Projector::dykstra)
    return project_mset_dykstra(col, spec, cfg.proj_tol, cfg.proj_max_iter);
  return project_mset_pocs(col, spec, cfg.proj_tol, cfg.proj_max_iter);
}

/// Seeded starting point: W columns uniform on the simplex pushed into the
/// truncated set, Z columns uniform on the simplex.
inline std::pair<Matrix, Matrix> init_matrices(std::size_t p, std::size_t m, std::size_t k,
                                               double tau, std::uint64_t seed) {
  Rng rng(seed);
  const MSetSpec spec(p, tau);
  Matrix w(p, m), z(m, k);
  for (std::size_t j = 0; j < m; ++j) {
    auto col = project_mset_dykstra(rng.dirichlet_uniform(p), spec);
    w.set_col(j, col);
  }
  for (std::size_t i = 0; i < k; ++i) {
    auto col = rng.dirichlet_uniform(m);
    z.set_col(i, col);
  }
  return {w, z};
}

struct FitResult {
  Matrix W;                            // p x m
  Matrix Z;                            // m x k
  std::vector<double> objective_trace; // initial value plus one entry per outer iteration
  std::size_t iterations = 0;
  bool converged = false;
};

using FitObserver = std::function<void(std::size_t iter, const Matrix& w, const Matrix& z, double f)>;

namespace detail {

/// Backtracking Armijo step along the projection arc. Returns the accepted
/// candidate and whether any move was made; `project` maps a free matrix to
/// the feasible set column by column.
template <typename ProjectFn, typename ObjectiveFn>
bool ascend_block(Matrix& block, const Matrix& grad, const FitConfig& cfg,
                  const ProjectFn& project, const ObjectiveFn& value, double& f_current) {
  double step = cfg.init_step;
  while (step >= 1e-12) {
    Matrix cand(block.rows(), block.cols());
    for (std::size_t i = 0; i < block.rows(); ++i)
      for (std::size_t j = 0; j < block.cols(); ++j)
        cand(i, j) = block(i, j) + step * grad(i, j);
    project(cand);
    double inner = 0.0;
    double move = 0.0;
    for (std::size_t i = 0; i < block.rows(); ++i)
      for (std::size_t j = 0; j < block.cols(); ++j) {
        const double d = cand(i, j) - block(i, j);
        inner += grad(i, j) * d;
        move += d * d;
      }
    if (move == 0.0) return false;  // projection returned the current point
    const double f_cand = value(cand);
    if (f_cand >= f_current + cfg.armijo_c * inner) {
      block = std::move(cand);
      f_current = f_cand;
      return true;
    }
    step *= cfg.backtrack_factor;
  }
  return false;
}

}  // namespace detail

/// Alternating projected gradient ascent on f_lambda. The W block moves
/// first; the Z block then ascends with the updated W. Stops when the
/// relative objective change falls below obj_tol, when both line searches
/// underflow in one outer iteration, or at max_outer_iters.
inline FitResult fit(const Matrix& x, const FitConfig& cfg, const Matrix* w0 = nullptr,
                     const Matrix* z0 = nullptr, const FitObserver& observer = {}) {
  cfg.validate();
  const std::size_t k = x.rows();
  const std::size_t p = x.cols();
  if (k < cfg.m) throw std::invalid_argument("fit: need at least m extreme samples (k >= m)");
  if (p <= cfg.m) throw std::invalid_argument("fit: m must be smaller than the dimension p");

  const MSetSpec spec(p, cfg.tau);
  Matrix w, z;
  if (w0 || z0) {
    if (!w0 || !z0) throw std::invalid_argument("fit: provide both W0 and Z0 or neither");
    w = *w0;
    z = *z0;
    detail::check_shapes(x, w, &z);
  } else {
    std::tie(w, z) = init_matrices(p, cfg.m, k, cfg.tau, cfg.seed);
  }

  FitResult res;
  double f = objective(x, w, z, cfg.lambda);
  res.objective_trace.push_back(f);
  if (observer) observer(0, w, z, f);

  const auto project_w = [&](Matrix& mat) {
    std::vector<double> col(p);
    for (std::size_t j = 0; j < mat.cols(); ++j) {
      for (std::size_t i = 0; i < p; ++i) col[i] = mat(i, j);
      mat.set_col(j, project_w_column(col, spec, cfg));
    }
  };
  const auto project_z = [&](Matrix& mat) {
    std::vector<double> col(mat.rows());
    for (std::size_t j = 0; j < mat.cols(); ++j) {
      for (std::size_t i = 0; i < mat.rows(); ++i) col[i] = mat(i, j);
      mat.set_col(j, project_simplex(col));
    }
  };

  for (std::size_t it = 1; it <= cfg.max_outer_iters; ++it) {
    const double f_prev = f;

    const Matrix gw = grad_W(x, w, z, cfg.lambda);
    const bool moved_w = detail::ascend_block(
        w, gw, cfg, project_w, [&](const Matrix& cand) { return objective(x, cand, z, cfg.lambda); },
        f);

    const Matrix gz = grad_Z(x, w);
    const bool moved_z = detail::ascend_block(
        z, gz, cfg, project_z, [&](const Matrix& cand) { return objective(x, w, cand, cfg.lambda); },
        f);

    res.objective_trace.push_back(f);
    res.iterations = it;
    if (observer) observer(it, w, z, f);

    if (!moved_w && !moved_z) {
      res.converged = true;
      break;
    }
    if (std::abs(f - f_prev) <= cfg.obj_tol * (1.0 + std::abs(f_prev))) {
      res.converged = true;
      break;
    }
  }

  res.W = std::move(w);
  res.Z = std::move(z);
  return res;
}

/// Normalizes per the angular flag and fits on the selected extreme rows.
inline FitResult fit_extremes(const ExtremeSet& ext, const FitConfig& cfg) {
  if (cfg.angular) return fit(angular_normalize(ext.rows), cfg);
  return fit(ext.rows, cfg);
}

enum class Margins { rank, standard };

/// A fitted model plus everything needed to score new data: the mixture and
/// assignment matrices, the extreme threshold on the standardized scale, and
/// the fitted marginal c.d.f. tables (empty in identity mode).
struct FittedModel {
  Matrix W;
  Matrix Z;
  double threshold = 0.0;
  FitConfig config;
  Margins margins = Margins::rank;
  std::vector<double> objective_trace;
  Standardizer standardizer;

  std::size_t p() const { return W.rows(); }
  std::size_t m() const { return W.cols(); }
};

/// Full training pipeline on raw data: standardize margins (empirical ranks
/// or pass-through), select the extreme sub-sample, fit.
inline FittedModel train(const Matrix& raw, const FitConfig& cfg, Margins margins = Margins::rank) {
  validate_data(raw);
  Standardizer st = margins == Margins::rank ? Standardizer::fit(raw)
                                             : Standardizer::identity(raw.cols());
  const Matrix v = st.transform(raw);
  const ExtremeSet ext = select_extremes(v, cfg.gamma);
  FitResult r = fit_extremes(ext, cfg);

  FittedModel model;
  model.W = std::move(r.W);
  model.Z = std::move(r.Z);
  model.threshold = ext.threshold;
  model.config = cfg;
  model.margins = margins;
  model.objective_trace = std::move(r.objective_trace);
  model.standardizer = std::move(st);
  return model;
}

}  // namespace mexico

#endif  // MEXICO_CORE_HPP
