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
#include <map>
#include <vector>

#include <doctest.h>

#include "mexico/metrics.hpp"
#include "mexico/rng.hpp"

using namespace mexico;

namespace {

/// Direct entropy computation from scratch, sharing nothing with h_c_v.
struct EntropyOracle {
  double h_true, h_pred, h_true_given_pred, h_pred_given_true;

  EntropyOracle(const std::vector<int>& truth, const std::vector<int>& pred) {
    const double n = static_cast<double>(truth.size());
    std::map<int, double> tn, pn;
    std::map<std::pair<int, int>, double> joint;
    for (std::size_t i = 0; i < truth.size(); ++i) {
      tn[truth[i]] += 1;
      pn[pred[i]] += 1;
      joint[{truth[i], pred[i]}] += 1;
    }
    auto ent = [&](const std::map<int, double>& counts) {
      double h = 0.0;
      for (const auto& [label, c] : counts) h -= (c / n) * std::log(c / n);
      return h;
    };
    h_true = ent(tn);
    h_pred = ent(pn);
    h_true_given_pred = 0.0;
    h_pred_given_true = 0.0;
    for (const auto& [tp, c] : joint) {
      h_true_given_pred -= (c / n) * std::log(c / pn[tp.second]);
      h_pred_given_true -= (c / n) * std::log(c / tn[tp.first]);
    }
  }

  HCV expected() const {
    HCV out;
    out.homogeneity = h_true == 0.0 ? 1.0 : 1.0 - h_true_given_pred / h_true;
    out.completeness = h_pred == 0.0 ? 1.0 : 1.0 - h_pred_given_true / h_pred;
    const double s = out.homogeneity + out.completeness;
    out.v_measure = s == 0.0 ? 0.0 : 2.0 * out.homogeneity * out.completeness / s;
    return out;
  }
};

/// Pairwise Mann-Whitney count, ties one half.
double auc_bruteforce(const std::vector<double>& scores, const std::vector<int>& labels) {
  double wins = 0.0, pairs = 0.0;
  for (std::size_t i = 0; i < scores.size(); ++i)
    for (std::size_t j = 0; j < scores.size(); ++j) {
      if (labels[i] == 0 || labels[j] != 0) continue;
      pairs += 1.0;
      if (scores[i] > scores[j]) wins += 1.0;
      else if (scores[i] == scores[j]) wins += 0.5;
    }
  return wins / pairs;
}

}  // namespace

TEST_CASE("identical labelings score perfectly") {
  const std::vector<int> labels{0, 0, 1, 1, 2};
  const auto m = h_c_v(labels, labels);
  CHECK(m.homogeneity == doctest::Approx(1.0));
  CHECK(m.completeness == doctest::Approx(1.0));
  CHECK(m.v_measure == doctest::Approx(1.0));
}

TEST_CASE("a single cluster over balanced classes is complete but not homogeneous") {
  const std::vector<int> truth{0, 0, 1, 1};
  const std::vector<int> pred{3, 3, 3, 3};
  const auto m = h_c_v(truth, pred);
  CHECK(m.homogeneity == doctest::Approx(0.0));
  CHECK(m.completeness == doctest::Approx(1.0));
  CHECK(m.v_measure == doctest::Approx(0.0));
}

TEST_CASE("split cluster example matches the entropy oracle") {
  const std::vector<int> truth{0, 0, 1, 1};
  const std::vector<int> pred{0, 1, 1, 1};
  const auto m = h_c_v(truth, pred);
  const auto expected = EntropyOracle(truth, pred).expected();
  CHECK(m.homogeneity == doctest::Approx(expected.homogeneity).epsilon(1e-12));
  CHECK(m.completeness == doctest::Approx(expected.completeness).epsilon(1e-12));
  CHECK(m.v_measure == doctest::Approx(expected.v_measure).epsilon(1e-12));
  // frozen oracle values
  CHECK(m.homogeneity == doctest::Approx(0.311278).epsilon(5e-5));
  CHECK(m.completeness == doctest::Approx(0.383694).epsilon(5e-5));
  CHECK(m.v_measure == doctest::Approx(0.343711).epsilon(5e-5));
}

TEST_CASE("entropy metrics agree with the oracle on random labelings") {
  Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + rng.index(40);
    std::vector<int> truth(n), pred(n);
    for (std::size_t i = 0; i < n; ++i) {
      truth[i] = static_cast<int>(rng.index(4));
      pred[i] = static_cast<int>(rng.index(5));
    }
    const auto m = h_c_v(truth, pred);
    const auto expected = EntropyOracle(truth, pred).expected();
    CHECK(m.homogeneity == doctest::Approx(expected.homogeneity).epsilon(1e-10));
    CHECK(m.completeness == doctest::Approx(expected.completeness).epsilon(1e-10));
    CHECK(m.v_measure == doctest::Approx(expected.v_measure).epsilon(1e-10));

    CHECK(m.homogeneity >= 0.0);
    CHECK(m.homogeneity <= 1.0 + 1e-12);
    CHECK(m.completeness >= 0.0);
    CHECK(m.completeness <= 1.0 + 1e-12);
    CHECK(m.v_measure <= std::max(m.homogeneity, m.completeness) + 1e-12);
  }
}

TEST_CASE("entropy metrics are invariant to relabeling") {
  const std::vector<int> truth{0, 0, 1, 1, 2, 2, 2};
  const std::vector<int> pred{5, 5, 9, 9, 9, 2, 2};
  std::vector<int> relabeled(pred.size());
  for (std::size_t i = 0; i < pred.size(); ++i) relabeled[i] = -3 * pred[i] + 100;
  const auto a = h_c_v(truth, pred);
  const auto b = h_c_v(truth, relabeled);
  CHECK(a.homogeneity == doctest::Approx(b.homogeneity).epsilon(1e-14));
  CHECK(a.completeness == doctest::Approx(b.completeness).epsilon(1e-14));
}

TEST_CASE("h_c_v rejects mismatched or empty input") {
  CHECK_THROWS_AS(h_c_v(std::vector<int>{1, 2}, std::vector<int>{1}), std::invalid_argument);
  CHECK_THROWS_AS(h_c_v(std::vector<int>{}, std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("auc is one for perfect separation and one half under total ties") {
  const std::vector<double> sep{0.9, 0.8, 0.2, 0.1};
  const std::vector<int> labels{1, 1, 0, 0};
  CHECK(roc_auc(sep, labels) == doctest::Approx(1.0));
  const std::vector<double> flat{0.5, 0.5, 0.5, 0.5};
  CHECK(roc_auc(flat, labels) == doctest::Approx(0.5));
}

TEST_CASE("auc matches the pairwise count on the interleaved example") {
  const std::vector<double> scores{0.9, 0.8, 0.7, 0.6};
  const std::vector<int> labels{1, 0, 1, 0};
  CHECK(roc_auc(scores, labels) == doctest::Approx(0.75));
  CHECK(roc_auc(scores, labels) == doctest::Approx(auc_bruteforce(scores, labels)));
}

TEST_CASE("auc matches the pairwise count on random scores with ties") {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 4 + rng.index(30);
    std::vector<double> scores(n);
    std::vector<int> labels(n);
    bool has0 = false, has1 = false;
    for (std::size_t i = 0; i < n; ++i) {
      scores[i] = static_cast<double>(rng.index(6));  // coarse grid forces ties
      labels[i] = static_cast<int>(rng.index(2));
      (labels[i] ? has1 : has0) = true;
    }
    if (!has0 || !has1) continue;
    CHECK(roc_auc(scores, labels) == doctest::Approx(auc_bruteforce(scores, labels)).epsilon(1e-12));
  }
}

TEST_CASE("auc of negated scores complements auc without ties") {
  Rng rng(9);
  std::vector<double> scores(40);
  std::vector<int> labels(40);
  for (std::size_t i = 0; i < 40; ++i) {
    scores[i] = rng.uniform();
    labels[i] = i % 3 == 0;
  }
  std::vector<double> neg(scores);
  for (auto& s : neg) s = -s;
  CHECK(roc_auc(scores, labels) + roc_auc(neg, labels) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("auc and ap are invariant under increasing score transforms") {
  Rng rng(11);
  std::vector<double> scores(30);
  std::vector<int> labels(30);
  for (std::size_t i = 0; i < 30; ++i) {
    scores[i] = rng.uniform(0.0, 3.0);
    labels[i] = rng.uniform() < 0.3;
  }
  labels[0] = 1;
  labels[1] = 0;
  std::vector<double> warped(scores);
  for (auto& s : warped) s = std::exp(2.0 * s) + s;
  CHECK(roc_auc(scores, labels) == doctest::Approx(roc_auc(warped, labels)).epsilon(1e-12));
  CHECK(average_precision(scores, labels) ==
        doctest::Approx(average_precision(warped, labels)).epsilon(1e-12));
}

TEST_CASE("auc requires both classes") {
  CHECK_THROWS_AS(roc_auc(std::vector<double>{1.0, 2.0}, std::vector<int>{1, 1}),
                  std::invalid_argument);
}

TEST_CASE("ap is one when every positive outranks every negative") {
  const std::vector<double> scores{0.9, 0.8, 0.3, 0.2};
  const std::vector<int> labels{1, 1, 0, 0};
  CHECK(average_precision(scores, labels) == doctest::Approx(1.0));
}

TEST_CASE("ap follows the step sum on the three-sample example") {
  const std::vector<double> scores{0.9, 0.8, 0.7};
  const std::vector<int> labels{1, 0, 1};
  CHECK(average_precision(scores, labels) == doctest::Approx(5.0 / 6.0).epsilon(1e-12));
}

TEST_CASE("a single positive ranked last scores one over the sample size") {
  for (std::size_t q : {3, 7, 20}) {
    std::vector<double> scores(q);
    std::vector<int> labels(q, 0);
    for (std::size_t i = 0; i < q; ++i) scores[i] = static_cast<double>(q - i);
    labels[q - 1] = 1;
    CHECK(average_precision(scores, labels) ==
          doctest::Approx(1.0 / static_cast<double>(q)).epsilon(1e-12));
  }
}

TEST_CASE("ap requires at least one positive") {
  CHECK_THROWS_AS(average_precision(std::vector<double>{1.0, 2.0}, std::vector<int>{0, 0}),
                  std::invalid_argument);
}
