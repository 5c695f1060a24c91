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
// Command line front end: simulation, fitting, prediction, scoring,
// evaluation, volume tables, cluster-count selection and the spherical
// k-means baseline. Every run writes a manifest beside its outputs and all
// outputs are reproducible from the seed.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mexico/mexico.hpp"

namespace {

using namespace mexico;

std::string manifest_path(const std::string& out) { return out + ".manifest"; }

using ManifestEntries = std::vector<std::pair<std::string, std::string>>;

void emit_manifest(const std::string& out, const std::string& tool, ManifestEntries extra) {
  ManifestEntries entries{{"tool", "mexico " MEXICO_VERSION}, {"command", tool}};
  for (auto& e : extra) entries.push_back(std::move(e));
  write_manifest(manifest_path(out), entries);
}

std::vector<std::vector<std::size_t>> parse_clusters(const std::string& text) {
  std::vector<std::vector<std::size_t>> clusters;
  std::stringstream groups(text);
  std::string group;
  while (std::getline(groups, group, ';')) {
    std::vector<std::size_t> cluster;
    std::stringstream items(group);
    std::string item;
    while (std::getline(items, item, ',')) cluster.push_back(std::stoul(item));
    if (!cluster.empty()) clusters.push_back(std::move(cluster));
  }
  return clusters;
}

// "f1,f2,...:alpha" or "f1,f2,...:alpha:b1,b2,..." joined by ';'
std::vector<AsymSubset> parse_subsets(const std::string& text) {
  std::vector<AsymSubset> subsets;
  std::stringstream groups(text);
  std::string group;
  while (std::getline(groups, group, ';')) {
    std::stringstream parts(group);
    std::string features, alpha, betas;
    std::getline(parts, features, ':');
    std::getline(parts, alpha, ':');
    std::getline(parts, betas, ':');
    AsymSubset sub;
    std::stringstream items(features);
    std::string item;
    while (std::getline(items, item, ',')) sub.features.push_back(std::stoul(item));
    sub.alpha = std::stod(alpha);
    if (betas.empty()) {
      sub.beta.assign(sub.features.size(), 1.0);
    } else {
      std::stringstream bs(betas);
      while (std::getline(bs, item, ',')) sub.beta.push_back(std::stod(item));
    }
    subsets.push_back(std::move(sub));
  }
  return subsets;
}

struct Preset {
  double tau;
  double lambda;
};

// per-dataset defaults for the reference anomaly-detection corpora
const std::map<std::string, Preset> kPresets{
    {"sf", {0.8, 10.0}},     {"sa", {0.7, 5.0}},
    {"http", {0.5, 10.0}},   {"shuttle", {0.7, 5.0}},
    {"forestcover", {0.7, 5.0}},
};

Margins parse_margins(const std::string& text) {
  if (text == "rank") return Margins::rank;
  if (text == "standard") return Margins::standard;
  throw std::runtime_error("--margins must be 'rank' or 'standard'");
}

std::string run_suffixed(const std::string& path, std::size_t run) {
  const auto dotpos = path.rfind('.');
  if (dotpos == std::string::npos || path.find('/', dotpos) != std::string::npos)
    return path + "_r" + std::to_string(run);
  return path.substr(0, dotpos) + "_r" + std::to_string(run) + path.substr(dotpos);
}

/// Integer labels from either a bare one-per-line file or a named column of
/// a headered CSV.
std::vector<int> load_label_column(const std::string& path, const std::string& column) {
  try {
    return read_labels(path);
  } catch (const std::runtime_error&) {
  }
  const auto csv = read_csv(path, /*has_header=*/true);
  for (std::size_t j = 0; j < csv.header.size(); ++j)
    if (csv.header[j] == column) {
      std::vector<int> out(csv.values.rows());
      for (std::size_t i = 0; i < csv.values.rows(); ++i)
        out[i] = static_cast<int>(std::llround(csv.values(i, j)));
      return out;
    }
  throw std::runtime_error("'" + path + "' has no column named '" + column + "'");
}

std::vector<double> load_score_column(const std::string& path, const std::string& column) {
  try {
    const auto csv = read_csv(path, /*has_header=*/false);
    if (csv.values.cols() == 1) return csv.values.col(0);
  } catch (const std::runtime_error&) {
  }
  const auto csv = read_csv(path, /*has_header=*/true);
  for (std::size_t j = 0; j < csv.header.size(); ++j)
    if (csv.header[j] == column) return csv.values.col(j);
  throw std::runtime_error("'" + path + "' has no column named '" + column + "'");
}

void write_metric_table(const std::string& out, const std::vector<std::string>& columns,
                        const std::vector<std::vector<double>>& runs) {
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot write '" + out + "'");
  f << "run";
  for (const auto& c : columns) f << ',' << c;
  f << '\n';
  std::vector<double> mean(columns.size(), 0.0), var(columns.size(), 0.0);
  for (std::size_t r = 0; r < runs.size(); ++r) {
    f << r;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      f << ',' << format_double(runs[r][c]);
      mean[c] += runs[r][c];
    }
    f << '\n';
  }
  for (auto& m : mean) m /= static_cast<double>(runs.size());
  for (const auto& run : runs)
    for (std::size_t c = 0; c < columns.size(); ++c)
      var[c] += (run[c] - mean[c]) * (run[c] - mean[c]);
  f << "mean";
  for (std::size_t c = 0; c < columns.size(); ++c) f << ',' << format_double(mean[c]);
  f << "\nstd";
  for (std::size_t c = 0; c < columns.size(); ++c)
    f << ','
      << format_double(runs.size() > 1 ? std::sqrt(var[c] / static_cast<double>(runs.size() - 1))
                                       : 0.0);
  f << '\n';
}

// --- subcommand payloads -----------------------------------------------

struct SimulateArgs {
  std::string model = "clustered";
  std::size_t p = 4;
  double delta = 0.5;
  std::size_t n = 1000;
  std::uint64_t seed = 0;
  std::string clusters = "0,1;2,3";
  std::string subsets;
  std::string out;
  std::string labels_out;
};

int run_simulate(const SimulateArgs& a) {
  Matrix values;
  std::vector<std::size_t> labels;
  if (a.model == "logistic") {
    values = sample_logistic({.p = a.p, .delta = a.delta, .n = a.n, .seed = a.seed});
  } else if (a.model == "asym") {
    AsymLogisticSpec spec;
    spec.p = a.p;
    spec.n = a.n;
    spec.seed = a.seed;
    spec.subsets = parse_subsets(a.subsets);
    values = sample_asym_logistic(spec);
  } else if (a.model == "clustered") {
    auto data = sample_clustered(a.p, parse_clusters(a.clusters), a.delta, a.n, a.seed);
    values = std::move(data.values);
    labels = std::move(data.labels);
  } else {
    throw std::runtime_error("unknown simulation model '" + a.model + "'");
  }
  write_csv(a.out, {}, values);
  if (!a.labels_out.empty()) {
    if (labels.empty()) throw std::runtime_error("--labels-out requires --model clustered");
    write_labels(a.labels_out, labels);
  }
  emit_manifest(a.out, "simulate",
                {{"model", a.model},
                 {"p", std::to_string(a.p)},
                 {"delta", format_double(a.delta)},
                 {"n", std::to_string(a.n)},
                 {"seed", std::to_string(a.seed)},
                 {"clusters", a.model == "clustered" ? a.clusters : std::string("-")},
                 {"subsets", a.model == "asym" ? a.subsets : std::string("-")},
                 {"out", a.out},
                 {"labels_out", a.labels_out.empty() ? "-" : a.labels_out}});
  return 0;
}

struct FitArgs {
  std::string data;
  bool has_header = false;
  std::string out;
  std::string margins = "rank";
  std::string projector = "dykstra";
  std::string preset;
  std::size_t repeat = 1;
  FitConfig cfg;
};

ManifestEntries fit_manifest_entries(const FitArgs& a, const FitConfig& cfg) {
  return {{"data", a.data},
          {"margins", a.margins},
          {"m", std::to_string(cfg.m)},
          {"lambda", format_double(cfg.lambda)},
          {"tau", format_double(cfg.tau)},
          {"gamma", format_double(cfg.gamma)},
          {"projector", a.projector},
          {"angular", cfg.angular ? "1" : "0"},
          {"max_outer_iters", std::to_string(cfg.max_outer_iters)},
          {"obj_tol", format_double(cfg.obj_tol)},
          {"armijo_c", format_double(cfg.armijo_c)},
          {"backtrack_factor", format_double(cfg.backtrack_factor)},
          {"init_step", format_double(cfg.init_step)},
          {"seed", std::to_string(cfg.seed)},
          {"repeat", std::to_string(a.repeat)}};
}

int run_fit(FitArgs& a) {
  const auto csv = read_csv(a.data, a.has_header);
  if (!a.preset.empty()) {
    const auto it = kPresets.find(a.preset);
    if (it == kPresets.end()) throw std::runtime_error("unknown preset '" + a.preset + "'");
    a.cfg.tau = it->second.tau;
    a.cfg.lambda = it->second.lambda;
  }
  a.cfg.projector = a.projector == "pocs" ? Projector::pocs : Projector::dykstra;
  const Margins margins = parse_margins(a.margins);

  std::vector<std::vector<double>> runs;
  for (std::size_t r = 0; r < a.repeat; ++r) {
    FitConfig cfg = a.cfg;
    if (a.repeat > 1) cfg.seed = Rng::derive_seed(a.cfg.seed, r);
    const auto model = train(csv.values, cfg, margins);
    const std::string path = a.repeat > 1 ? run_suffixed(a.out, r) : a.out;
    save_model(model, path);
    runs.push_back({static_cast<double>(cfg.seed), model.objective_trace.back(),
                    static_cast<double>(model.objective_trace.size() - 1)});
  }
  if (a.repeat > 1)
    write_metric_table(a.out + ".runs.csv", {"seed", "objective", "iterations"}, runs);
  emit_manifest(a.out, "fit", fit_manifest_entries(a, a.cfg));
  return 0;
}

struct ScoreArgs {
  std::string model;
  std::string data;
  bool has_header = false;
  std::string out;
};

int run_predict(const ScoreArgs& a, bool with_scores) {
  const auto model = load_model(a.model);
  const auto csv = read_csv(a.data, a.has_header);
  if (csv.values.cols() != model.p())
    throw std::runtime_error("data has " + std::to_string(csv.values.cols()) +
                             " columns but the model expects " + std::to_string(model.p()));
  const Matrix v = model.standardizer.transform(csv.values);

  std::ofstream f(a.out);
  if (!f) throw std::runtime_error("cannot write '" + a.out + "'");
  f << (with_scores ? "sample_id,cluster,confidence,loss,normality\n"
                    : "sample_id,cluster,confidence,extreme\n");
  for (std::size_t i = 0; i < v.rows(); ++i) {
    const auto assign = predict_cluster(v.row(i), model);
    if (with_scores) {
      const double loss = anomaly_score(v.row(i), model);
      f << i << ',' << assign.cluster << ',' << format_double(assign.confidence) << ','
        << format_double(loss) << ',' << format_double(1.0 / (loss + 1e-12)) << '\n';
    } else {
      f << i << ',' << assign.cluster << ',' << format_double(assign.confidence) << ','
        << (assign.below_threshold ? 0 : 1) << '\n';
    }
  }
  emit_manifest(a.out, with_scores ? "score" : "predict",
                {{"model", a.model}, {"data", a.data}, {"out", a.out}});
  return 0;
}

struct EvaluateArgs {
  std::string task = "cluster";
  std::vector<std::string> truth;
  std::vector<std::string> pred;
  std::vector<std::string> scores;
  std::string out;
};

int run_evaluate(const EvaluateArgs& a) {
  std::vector<std::vector<double>> runs;
  if (a.task == "cluster") {
    if (a.truth.size() != a.pred.size() || a.truth.empty())
      throw std::runtime_error("evaluate: need matching --truth/--pred files");
    for (std::size_t r = 0; r < a.truth.size(); ++r) {
      const auto t = load_label_column(a.truth[r], "label");
      const auto p = load_label_column(a.pred[r], "cluster");
      if (t.size() != p.size())
        throw std::runtime_error("evaluate: label count mismatch in run " + std::to_string(r));
      const auto m = h_c_v(t, p);
      runs.push_back({m.homogeneity, m.completeness, m.v_measure});
    }
    write_metric_table(a.out, {"homogeneity", "completeness", "v_measure"}, runs);
  } else if (a.task == "anomaly") {
    if (a.truth.size() != a.scores.size() || a.truth.empty())
      throw std::runtime_error("evaluate: need matching --truth/--scores files");
    for (std::size_t r = 0; r < a.truth.size(); ++r) {
      const auto t = load_label_column(a.truth[r], "label");
      const auto s = load_score_column(a.scores[r], "loss");
      if (t.size() != s.size())
        throw std::runtime_error("evaluate: score count mismatch in run " + std::to_string(r));
      runs.push_back({roc_auc(s, t), average_precision(s, t)});
    }
    write_metric_table(a.out, {"roc_auc", "average_precision"}, runs);
  } else {
    throw std::runtime_error("unknown task '" + a.task + "'");
  }
  emit_manifest(a.out, "evaluate",
                {{"task", a.task}, {"runs", std::to_string(runs.size())}, {"out", a.out}});
  return 0;
}

struct VolumesArgs {
  std::string p_range = "3..10";
  double tau = 0.5;
  std::string out;
};

int run_volumes(const VolumesArgs& a) {
  std::size_t lo = 0, hi = 0;
  const auto dots = a.p_range.find("..");
  if (dots == std::string::npos) {
    lo = hi = std::stoul(a.p_range);
  } else {
    lo = std::stoul(a.p_range.substr(0, dots));
    hi = std::stoul(a.p_range.substr(dots + 2));
  }
  if (lo < 2 || hi < lo) throw std::runtime_error("bad --p range '" + a.p_range + "'");

  std::ofstream f(a.out);
  if (!f) throw std::runtime_error("cannot write '" + a.out + "'");
  f << "p,tau,vol_simplex,ratio_l1,ratio_l2,ratio_mset\n";
  for (std::size_t p = lo; p <= hi; ++p) {
    f << p << ',' << format_double(a.tau) << ',' << format_double(volume_simplex(p)) << ','
      << format_double(ratio_l1(p)) << ',' << format_double(ratio_l2(p)) << ',';
    if (a.tau >= mset_tau_lower_bound(p))
      f << format_double(ratio_mset(p, a.tau));
    else
      f << "nan";  // the corner cuts overlap; no closed form
    f << '\n';
  }
  emit_manifest(a.out, "volumes",
                {{"p", a.p_range}, {"tau", format_double(a.tau)}, {"out", a.out}});
  return 0;
}

struct SelectMArgs {
  std::string data;
  bool has_header = false;
  std::string candidates = "1,2,3";
  double epsilon = 0.1;
  std::string margins = "rank";
  std::string out;
  FitConfig cfg;
};

int run_select_m(SelectMArgs& a) {
  const auto csv = read_csv(a.data, a.has_header);
  const Margins margins = parse_margins(a.margins);
  const Standardizer st = margins == Margins::rank ? Standardizer::fit(csv.values)
                                                   : Standardizer::identity(csv.values.cols());
  const Matrix v = st.transform(csv.values);

  std::vector<std::size_t> cands;
  std::stringstream ss(a.candidates);
  std::string item;
  while (std::getline(ss, item, ',')) cands.push_back(std::stoul(item));

  const auto res = select_m(v, cands, a.epsilon, a.cfg);
  if (!res.within_tolerance)
    std::cerr << "warning: no candidate reached the tolerance; returning the smallest gap\n";
  std::cout << res.m << '\n';

  if (!a.out.empty()) {
    std::ofstream f(a.out);
    if (!f) throw std::runtime_error("cannot write '" + a.out + "'");
    f << "m,gap\n";
    for (std::size_t i = 0; i < cands.size(); ++i)
      f << cands[i] << ',' << format_double(res.gaps[i]) << '\n';
    emit_manifest(a.out, "select-m",
                  {{"data", a.data},
                   {"candidates", a.candidates},
                   {"epsilon", format_double(a.epsilon)},
                   {"selected", std::to_string(res.m)},
                   {"within_tolerance", res.within_tolerance ? "1" : "0"},
                   {"seed", std::to_string(a.cfg.seed)}});
  }
  return 0;
}

struct SkmeansArgs {
  std::string data;
  bool has_header = false;
  std::size_t m = 2;
  double gamma = 0.1;
  std::string margins = "rank";
  std::size_t max_iter = 100;
  std::uint64_t seed = 0;
  std::string out;
  std::string centroids_out;
};

int run_skmeans(const SkmeansArgs& a) {
  const auto csv = read_csv(a.data, a.has_header);
  const Margins margins = parse_margins(a.margins);
  const Standardizer st = margins == Margins::rank ? Standardizer::fit(csv.values)
                                                   : Standardizer::identity(csv.values.cols());
  const Matrix v = st.transform(csv.values);
  const auto ext = select_extremes(v, a.gamma);
  const Matrix ang = angular_normalize(ext.rows);
  const auto res = spherical_kmeans(ang, a.m, a.max_iter, a.seed);

  std::ofstream f(a.out);
  if (!f) throw std::runtime_error("cannot write '" + a.out + "'");
  f << "sample_id,cluster\n";
  for (std::size_t i = 0; i < ext.k(); ++i)
    f << ext.indices[i] << ',' << res.assignments[i] << '\n';
  if (!a.centroids_out.empty()) write_csv(a.centroids_out, {}, res.centroids);
  emit_manifest(a.out, "baseline skmeans",
                {{"data", a.data},
                 {"m", std::to_string(a.m)},
                 {"gamma", format_double(a.gamma)},
                 {"margins", a.margins},
                 {"max_iter", std::to_string(a.max_iter)},
                 {"seed", std::to_string(a.seed)},
                 {"out", a.out}});
  return 0;
}

void add_fit_options(CLI::App* cmd, FitConfig& cfg) {
  cmd->add_option("--m", cfg.m, "number of feature clusters");
  cmd->add_option("--lambda", cfg.lambda, "orthogonality penalty weight");
  cmd->add_option("--tau", cfg.tau, "vertex-cut threshold in (0,1]");
  cmd->add_option("--gamma", cfg.gamma, "extreme fraction in (0,1)");
  cmd->add_option("--max-iters", cfg.max_outer_iters, "outer iteration cap");
  cmd->add_option("--obj-tol", cfg.obj_tol, "relative objective-change stop");
  cmd->add_option("--armijo-c", cfg.armijo_c, "sufficient-increase constant");
  cmd->add_option("--backtrack", cfg.backtrack_factor, "step shrink factor");
  cmd->add_option("--init-step", cfg.init_step, "initial line-search step");
  cmd->add_option("--seed", cfg.seed, "RNG seed");
  cmd->add_flag("--angular", cfg.angular, "fit on sup-normalized extremes");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"feature clustering and anomaly scoring in multivariate extremes"};
  app.require_subcommand(1);
  app.set_config("--config", "", "read options from a config file; flags override its values");

  SimulateArgs sim;
  auto* c_sim = app.add_subcommand("simulate", "generate heavy-tailed synthetic data");
  c_sim->add_option("--model", sim.model, "logistic | asym | clustered");
  c_sim->add_option("--p", sim.p, "dimension");
  c_sim->add_option("--delta", sim.delta, "dependence parameter in (0,1]");
  c_sim->add_option("--n", sim.n, "sample count");
  c_sim->add_option("--seed", sim.seed, "RNG seed");
  c_sim->add_option("--clusters", sim.clusters, "clustered model: e.g. 0,1;2,3");
  c_sim->add_option("--subsets", sim.subsets, "asym model: f,f:alpha[:b,b] joined by ';'");
  c_sim->add_option("--out", sim.out, "data CSV path")->required();
  c_sim->add_option("--labels-out", sim.labels_out, "labels path (clustered model)");

  FitArgs fit_args;
  auto* c_fit = app.add_subcommand("fit", "fit a mixture model on the extreme sub-sample");
  c_fit->add_option("--data", fit_args.data, "training CSV")->required();
  c_fit->add_flag("--has-header", fit_args.has_header, "skip a header row");
  c_fit->add_option("--out", fit_args.out, "model file path")->required();
  c_fit->add_option("--margins", fit_args.margins, "rank | standard");
  c_fit->add_option("--projector", fit_args.projector, "dykstra | pocs");
  c_fit->add_option("--preset", fit_args.preset, "dataset preset: sf sa http shuttle forestcover");
  c_fit->add_option("--repeat", fit_args.repeat, "independent seeded runs");
  add_fit_options(c_fit, fit_args.cfg);

  ScoreArgs predict_args;
  auto* c_predict = app.add_subcommand("predict", "predict feature clusters for new samples");
  c_predict->add_option("--model", predict_args.model, "model file")->required();
  c_predict->add_option("--data", predict_args.data, "input CSV")->required();
  c_predict->add_flag("--has-header", predict_args.has_header, "skip a header row");
  c_predict->add_option("--out", predict_args.out, "predictions CSV")->required();

  ScoreArgs score_args;
  auto* c_score = app.add_subcommand("score", "anomaly scores for new samples");
  c_score->add_option("--model", score_args.model, "model file")->required();
  c_score->add_option("--data", score_args.data, "input CSV")->required();
  c_score->add_flag("--has-header", score_args.has_header, "skip a header row");
  c_score->add_option("--out", score_args.out, "scores CSV")->required();

  EvaluateArgs eval_args;
  auto* c_eval = app.add_subcommand("evaluate", "clustering or detection metrics");
  c_eval->add_option("--task", eval_args.task, "cluster | anomaly");
  c_eval->add_option("--truth", eval_args.truth, "ground-truth label files")->required();
  c_eval->add_option("--pred", eval_args.pred, "predicted cluster files");
  c_eval->add_option("--scores", eval_args.scores, "anomaly score files");
  c_eval->add_option("--out", eval_args.out, "metrics CSV")->required();

  VolumesArgs vol_args;
  auto* c_vol = app.add_subcommand("volumes", "simplex truncation volume table");
  c_vol->add_option("--p", vol_args.p_range, "dimension or range, e.g. 3..10");
  c_vol->add_option("--tau", vol_args.tau, "vertex-cut threshold");
  c_vol->add_option("--out", vol_args.out, "output CSV")->required();

  SelectMArgs selm_args;
  auto* c_selm = app.add_subcommand("select-m", "pick the cluster count by tail-mass matching");
  c_selm->add_option("--data", selm_args.data, "training CSV")->required();
  c_selm->add_flag("--has-header", selm_args.has_header, "skip a header row");
  c_selm->add_option("--candidates", selm_args.candidates, "comma list, increasing");
  c_selm->add_option("--epsilon", selm_args.epsilon, "relative closeness tolerance");
  c_selm->add_option("--margins", selm_args.margins, "rank | standard");
  c_selm->add_option("--out", selm_args.out, "per-candidate gap CSV");
  add_fit_options(c_selm, selm_args.cfg);

  auto* c_base = app.add_subcommand("baseline", "comparison methods");
  c_base->require_subcommand(1);
  SkmeansArgs sk_args;
  auto* c_sk = c_base->add_subcommand("skmeans", "spherical k-means on angular extremes");
  c_sk->add_option("--data", sk_args.data, "training CSV")->required();
  c_sk->add_flag("--has-header", sk_args.has_header, "skip a header row");
  c_sk->add_option("--m", sk_args.m, "cluster count");
  c_sk->add_option("--gamma", sk_args.gamma, "extreme fraction");
  c_sk->add_option("--margins", sk_args.margins, "rank | standard");
  c_sk->add_option("--max-iter", sk_args.max_iter, "iteration cap");
  c_sk->add_option("--seed", sk_args.seed, "RNG seed");
  c_sk->add_option("--out", sk_args.out, "assignments CSV")->required();
  c_sk->add_option("--centroids-out", sk_args.centroids_out, "centroid CSV");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*c_sim) return run_simulate(sim);
    if (*c_fit) return run_fit(fit_args);
    if (*c_predict) return run_predict(predict_args, /*with_scores=*/false);
    if (*c_score) return run_predict(score_args, /*with_scores=*/true);
    if (*c_eval) return run_evaluate(eval_args);
    if (*c_vol) return run_volumes(vol_args);
    if (*c_selm) return run_select_m(selm_args);
    if (*c_sk) return run_skmeans(sk_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
