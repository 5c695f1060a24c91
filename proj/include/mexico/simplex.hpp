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
// Euclidean projections onto the probability simplex, onto box constraints,
// and onto their intersection (the vertex-truncated simplex used to keep
// mixture columns away from one-hot solutions), plus closed-form
// hypervolumes of the truncated sets.

#ifndef MEXICO_SIMPLEX_HPP
#define MEXICO_SIMPLEX_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mexico/matrix.hpp"

namespace mexico {

/// Exact Euclidean projection onto {x >= 0, sum x = 1} via sort and
/// threshold. O(p log p), deterministic.
inline std::vector<double> project_simplex(std::span<const double> v) {
  const std::size_t p = v.size();
  if (p == 0) throw std::invalid_argument("project_simplex: empty vector");
  for (double x : v)
    if (!std::isfinite(x)) throw std::invalid_argument("project_simplex: non-finite input");

  std::vector<double> u(v.begin(), v.end());
  std::sort(u.begin(), u.end(), std::greater<double>());
  double running = 0.0;
  double theta = 0.0;
  std::size_t support = 0;
  for (std::size_t j = 0; j < p; ++j) {
    running += u[j];
    const double cand = (running - 1.0) / static_cast<double>(j + 1);
    if (u[j] - cand > 0.0) {
      theta = cand;
      support = j + 1;
    }
  }
  (void)support;
  std::vector<double> out(p);
  for (std::size_t j = 0; j < p; ++j) out[j] = std::max(v[j] - theta, 0.0);
  return out;
}

/// Component-wise clamp to [0, r].
inline std::vector<double> project_box(std::span<const double> v, double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("project_box: radius must be positive");
  std::vector<double> out(v.begin(), v.end());
  for (auto& x : out) x = std::clamp(x, 0.0, radius);
  return out;
}

/// Sup-norm radius of the vertex cut at threshold tau: 1 - (1-tau)(p-1)/p.
inline double mset_radius(std::size_t p, double tau) {
  if (p < 2) throw std::invalid_argument("mset_radius: p must be >= 2");
  if (!(tau > 0.0) || tau > 1.0) throw std::invalid_argument("mset_radius: tau must lie in (0, 1]");
  return 1.0 - (1.0 - tau) * (static_cast<double>(p - 1) / static_cast<double>(p));
}

/// Truncated simplex {x in simplex : max_j x_j <= r_inf}.
struct MSetSpec {
  std::size_t p;
  double tau;
  double r_inf;

  MSetSpec(std::size_t p_, double tau_) : p(p_), tau(tau_), r_inf(mset_radius(p_, tau_)) {}
};

struct ProjectionError : std::runtime_error {
  ProjectionError(const std::string& what, std::vector<double> iterate, double res)
      : std::runtime_error(what), last_iterate(std::move(iterate)), residual(res) {}
  std::vector<double> last_iterate;
  double residual;
};

/// Dykstra's alternating projections between the simplex and the box
/// [0, r_inf]^p. Converges to the exact Euclidean projection onto the
/// intersection; stops on the Birgin-Raydan increment criterion.
inline std::vector<double> project_mset_dykstra(std::span<const double> v, const MSetSpec& spec,
                                                double tol = 1e-9, std::size_t max_iter = 10000) {
  if (v.size() != spec.p) throw std::invalid_argument("project_mset_dykstra: dimension mismatch");
  std::vector<double> x(v.begin(), v.end());
  std::vector<double> p_inc(spec.p, 0.0), q_inc(spec.p, 0.0);
  std::vector<double> y, tmp(spec.p);
  double rnorm = 0.0;
  for (std::size_t it = 0; it < max_iter; ++it) {
    for (std::size_t j = 0; j < spec.p; ++j) tmp[j] = x[j] + p_inc[j];
    y = project_simplex(tmp);
    double dp = 0.0;
    for (std::size_t j = 0; j < spec.p; ++j) {
      const double np = tmp[j] - y[j];
      const double d = np - p_inc[j];
      dp += d * d;
      p_inc[j] = np;
    }
    for (std::size_t j = 0; j < spec.p; ++j) tmp[j] = y[j] + q_inc[j];
    x = project_box(tmp, spec.r_inf);
    double dq = 0.0;
    for (std::size_t j = 0; j < spec.p; ++j) {
      const double nq = tmp[j] - x[j];
      const double d = nq - q_inc[j];
      dq += d * d;
      q_inc[j] = nq;
    }
    rnorm = std::sqrt(dp + dq);
    if (rnorm <= tol) return y;  // y lies on the simplex exactly
  }
  throw ProjectionError("project_mset_dykstra: no convergence after " +
                            std::to_string(max_iter) + " iterations (residual " +
                            std::to_string(rnorm) + ")",
                        y, rnorm);
}

/// Plain alternating projections (POCS). Lands in the intersection but not
/// necessarily at the nearest point of it.
inline std::vector<double> project_mset_pocs(std::span<const double> v, const MSetSpec& spec,
                                             double tol = 1e-9, std::size_t max_iter = 10000) {
  if (v.size() != spec.p) throw std::invalid_argument("project_mset_pocs: dimension mismatch");
  std::vector<double> x(v.begin(), v.end());
  std::vector<double> y;
  double res = 0.0;
  for (std::size_t it = 0; it < max_iter; ++it) {
    y = project_simplex(x);
    x = project_box(y, spec.r_inf);
    res = l2_dist(y, x);
    if (res <= tol) return y;
  }
  throw ProjectionError("project_mset_pocs: no convergence after " + std::to_string(max_iter) +
                            " iterations (residual " + std::to_string(res) + ")",
                        y, res);
}

inline bool in_simplex(std::span<const double> x, double tol = 1e-9) {
  double s = 0.0;
  for (double e : x) {
    if (e < -tol) return false;
    s += e;
  }
  return std::abs(s - 1.0) <= tol;
}

inline bool in_mset(std::span<const double> x, const MSetSpec& spec, double tol = 1e-9) {
  if (!in_simplex(x, tol)) return false;
  for (double e : x)
    if (e > spec.r_inf + tol) return false;
  return true;
}

/// Membership by the defining inner products: the component of x - barycenter
/// along each vertex direction must not exceed the fraction tau of the
/// barycenter-to-vertex distance L = sqrt((p-1)/p).
inline bool in_mset_inner(std::span<const double> x, const MSetSpec& spec, double tol = 1e-9) {
  if (!in_simplex(x, tol)) return false;
  const std::size_t p = spec.p;
  const double bary = 1.0 / static_cast<double>(p);
  const double len = std::sqrt(static_cast<double>(p - 1) / static_cast<double>(p));
  double s = 0.0;
  for (double e : x) s += e;
  for (std::size_t j = 0; j < p; ++j) {
    // <x - c, e_j - c> = x_j - s/p with c the barycenter
    const double ip = x[j] - bary * s;
    if (ip / len > spec.tau * len + tol) return false;
  }
  return true;
}

// --- closed-form hypervolumes -------------------------------------------

inline double volume_simplex(std::size_t p) {
  if (p < 2) throw std::invalid_argument("volume_simplex: p must be >= 2");
  return std::sqrt(static_cast<double>(p)) / std::tgamma(static_cast<double>(p));
}

/// Volume fraction of the inscribed, inverted simplex spanned by face centers.
inline double ratio_l1(std::size_t p) {
  if (p < 2) throw std::invalid_argument("ratio_l1: p must be >= 2");
  const double q = static_cast<double>(p - 1);
  return std::exp(-q * std::log(q));
}

/// Volume fraction of the inscribed Euclidean ball.
inline double ratio_l2(std::size_t p) {
  if (p < 2) throw std::invalid_argument("ratio_l2: p must be >= 2");
  const double pd = static_cast<double>(p);
  const double logr = std::lgamma(pd) - std::lgamma((pd + 1.0) / 2.0) +
                      (pd - 1.0) / 2.0 * std::log(M_PI) -
                      0.5 * (pd * std::log(pd) + (pd - 1.0) * std::log(pd - 1.0));
  return std::exp(logr);
}

/// Smallest tau for which the p corner cuts are pairwise disjoint, the
/// validity region of the closed-form ratio below.
inline double mset_tau_lower_bound(std::size_t p) {
  return 1.0 - static_cast<double>(p) / (2.0 * static_cast<double>(p - 1));
}

/// Volume fraction of the vertex-truncated simplex:
/// 1 - p [ (1-tau)(p-1)/p ]^(p-1).
inline double ratio_mset(std::size_t p, double tau) {
  if (p < 2) throw std::invalid_argument("ratio_mset: p must be >= 2");
  if (!(tau > 0.0) || tau > 1.0) throw std::invalid_argument("ratio_mset: tau must lie in (0, 1]");
  if (tau < mset_tau_lower_bound(p))
    throw std::invalid_argument("ratio_mset: overlapping corner cut (tau below validity region)");
  const double base = (1.0 - tau) * static_cast<double>(p - 1) / static_cast<double>(p);
  return 1.0 - static_cast<double>(p) * std::pow(base, static_cast<double>(p - 1));
}

}  // namespace mexico

#endif  // MEXICO_SIMPLEX_HPP
