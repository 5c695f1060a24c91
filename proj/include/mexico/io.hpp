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
// CSV ingestion, model persistence and run manifests. Floats are written
// with 17 significant digits so every file round-trips bit for bit.

#ifndef MEXICO_IO_HPP
#define MEXICO_IO_HPP

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mexico/core.hpp"
#include "mexico/matrix.hpp"

namespace mexico {

inline std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

struct CsvData {
  Matrix values;
  std::vector<std::string> header;  // empty when the file had none
};

namespace detail {

inline double parse_double(const std::string& token, std::size_t row, std::size_t col) {
  const char* begin = token.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0')
    throw std::runtime_error("malformed CSV value '" + token + "' at row " + std::to_string(row) +
                             " column " + std::to_string(col));
  return v;
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) {
    // trim surrounding whitespace
    const auto a = field.find_first_not_of(" \t\r");
    const auto b = field.find_last_not_of(" \t\r");
    out.push_back(a == std::string::npos ? std::string() : field.substr(a, b - a + 1));
  }
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace detail

/// One sample per line, all columns numeric; row order defines sample ids.
inline CsvData read_csv(const std::string& path, bool has_header = false) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  CsvData out;
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = detail::split_csv_line(line);
    if (lineno == 1 && has_header) {
      out.header = fields;
      continue;
    }
    std::vector<double> row(fields.size());
    for (std::size_t j = 0; j < fields.size(); ++j)
      row[j] = detail::parse_double(fields[j], rows.size(), j);
    if (!rows.empty() && row.size() != rows.front().size())
      throw std::runtime_error("ragged CSV row " + std::to_string(rows.size()) + " in '" + path +
                               "' (" + std::to_string(row.size()) + " columns, expected " +
                               std::to_string(rows.front().size()) + ")");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::runtime_error("empty CSV '" + path + "'");
  out.values = Matrix::from_rows(rows);
  return out;
}

inline void write_csv(const std::string& path, const std::vector<std::string>& header,
                      const Matrix& values) {
  std::ofstream outf(path);
  if (!outf) throw std::runtime_error("cannot write '" + path + "'");
  if (!header.empty()) {
    for (std::size_t j = 0; j < header.size(); ++j)
      outf << (j ? "," : "") << header[j];
    outf << '\n';
  }
  for (std::size_t i = 0; i < values.rows(); ++i) {
    for (std::size_t j = 0; j < values.cols(); ++j)
      outf << (j ? "," : "") << format_double(values(i, j));
    outf << '\n';
  }
}

/// One integer label per line.
inline std::vector<int> read_labels(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::vector<int> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const char* begin = line.c_str();
    char* end = nullptr;
    const long v = std::strtol(begin, &end, 10);
    if (end == begin || *end != '\0')
      throw std::runtime_error("malformed label '" + line + "' at row " +
                               std::to_string(out.size()) + " in '" + path + "'");
    out.push_back(static_cast<int>(v));
  }
  if (out.empty()) throw std::runtime_error("empty label file '" + path + "'");
  return out;
}

inline void write_labels(const std::string& path, const std::vector<std::size_t>& labels) {
  std::ofstream outf(path);
  if (!outf) throw std::runtime_error("cannot write '" + path + "'");
  for (auto l : labels) outf << l << '\n';
}

// --- model file ------------------------------------------------------------

namespace detail {

inline void write_matrix_block(std::ofstream& out, const std::string& name, const Matrix& m) {
  out << name << ' ' << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      out << (j ? " " : "") << format_double(m(i, j));
    out << '\n';
  }
}

struct ModelReader {
  std::ifstream in;
  std::string path;
  std::size_t lineno = 0;

  explicit ModelReader(const std::string& p) : in(p), path(p) {
    if (!in) throw std::runtime_error("cannot open model file '" + p + "'");
  }

  std::string next_line() {
    std::string line;
    if (!std::getline(in, line))
      throw std::runtime_error("truncated model file '" + path + "' at line " +
                               std::to_string(lineno));
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
  }

  std::pair<std::string, std::string> next_kv() {
    const std::string line = next_line();
    const auto sp = line.find(' ');
    if (sp == std::string::npos) return {line, ""};
    return {line.substr(0, sp), line.substr(sp + 1)};
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::runtime_error("model file '" + path + "' line " + std::to_string(lineno) + ": " +
                             what);
  }
};

inline Matrix read_matrix_block(ModelReader& r, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    std::stringstream ss(r.next_line());
    for (std::size_t j = 0; j < cols; ++j) {
      std::string tok;
      if (!(ss >> tok)) r.fail("short matrix row");
      m(i, j) = parse_double(tok, i, j);
    }
  }
  return m;
}

}  // namespace detail

/// Self-describing key-value/array text format; byte-stable for identical
/// inputs and seed.
inline void save_model(const FittedModel& model, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write model file '" + path + "'");
  out << "mexico-model 1\n";
  out << "p " << model.p() << '\n';
  out << "m " << model.m() << '\n';
  out << "k " << model.Z.cols() << '\n';
  out << "threshold " << format_double(model.threshold) << '\n';
  out << "margins " << (model.margins == Margins::rank ? "rank" : "standard") << '\n';
  const FitConfig& c = model.config;
  out << "lambda " << format_double(c.lambda) << '\n';
  out << "tau " << format_double(c.tau) << '\n';
  out << "gamma " << format_double(c.gamma) << '\n';
  out << "max_outer_iters " << c.max_outer_iters << '\n';
  out << "obj_tol " << format_double(c.obj_tol) << '\n';
  out << "armijo_c " << format_double(c.armijo_c) << '\n';
  out << "backtrack_factor " << format_double(c.backtrack_factor) << '\n';
  out << "init_step " << format_double(c.init_step) << '\n';
  out << "seed " << c.seed << '\n';
  out << "angular " << (c.angular ? 1 : 0) << '\n';
  out << "projector " << (c.projector == Projector::dykstra ? "dykstra" : "pocs") << '\n';
  out << "proj_tol " << format_double(c.proj_tol) << '\n';
  out << "proj_max_iter " << c.proj_max_iter << '\n';
  out << "objective_trace " << model.objective_trace.size() << '\n';
  for (std::size_t i = 0; i < model.objective_trace.size(); ++i)
    out << (i ? " " : "") << format_double(model.objective_trace[i]);
  out << '\n';
  detail::write_matrix_block(out, "W", model.W);
  detail::write_matrix_block(out, "Z", model.Z);
  if (model.margins == Margins::rank) {
    const auto& tables = model.standardizer.tables();
    out << "quantiles " << tables.size() << ' ' << tables.front().size() << '\n';
    for (const auto& col : tables) {
      for (std::size_t i = 0; i < col.size(); ++i)
        out << (i ? " " : "") << format_double(col[i]);
      out << '\n';
    }
  } else {
    out << "quantiles 0 0\n";
  }
  out << "end\n";
}

inline FittedModel load_model(const std::string& path) {
  detail::ModelReader r(path);
  if (r.next_line() != "mexico-model 1") r.fail("unrecognized model header");

  FittedModel model;
  std::size_t p = 0, m = 0, k = 0;
  auto expect = [&](const char* key) {
    auto [found, value] = r.next_kv();
    if (found != key) r.fail(std::string("expected key '") + key + "', found '" + found + "'");
    return value;
  };
  p = std::stoul(expect("p"));
  m = std::stoul(expect("m"));
  k = std::stoul(expect("k"));
  model.threshold = std::stod(expect("threshold"));
  const std::string margins = expect("margins");
  if (margins != "rank" && margins != "standard") r.fail("unknown margins mode '" + margins + "'");
  model.margins = margins == "rank" ? Margins::rank : Margins::standard;
  FitConfig& c = model.config;
  c.m = m;
  c.lambda = std::stod(expect("lambda"));
  c.tau = std::stod(expect("tau"));
  c.gamma = std::stod(expect("gamma"));
  c.max_outer_iters = std::stoul(expect("max_outer_iters"));
  c.obj_tol = std::stod(expect("obj_tol"));
  c.armijo_c = std::stod(expect("armijo_c"));
  c.backtrack_factor = std::stod(expect("backtrack_factor"));
  c.init_step = std::stod(expect("init_step"));
  c.seed = std::stoull(expect("seed"));
  c.angular = expect("angular") == "1";
  const std::string projector = expect("projector");
  if (projector != "dykstra" && projector != "pocs") r.fail("unknown projector '" + projector + "'");
  c.projector = projector == "dykstra" ? Projector::dykstra : Projector::pocs;
  c.proj_tol = std::stod(expect("proj_tol"));
  c.proj_max_iter = std::stoul(expect("proj_max_iter"));

  const auto trace_len = std::stoul(expect("objective_trace"));
  {
    std::stringstream ss(r.next_line());
    model.objective_trace.resize(trace_len);
    for (std::size_t i = 0; i < trace_len; ++i) {
      std::string tok;
      if (!(ss >> tok)) r.fail("short objective trace");
      model.objective_trace[i] = detail::parse_double(tok, 0, i);
    }
  }

  {
    auto [key, dims] = r.next_kv();
    if (key != "W") r.fail("expected W block");
    std::stringstream ss(dims);
    std::size_t rows, cols;
    ss >> rows >> cols;
    if (rows != p || cols != m) r.fail("W dimensions disagree with header");
    model.W = detail::read_matrix_block(r, rows, cols);
  }
  {
    auto [key, dims] = r.next_kv();
    if (key != "Z") r.fail("expected Z block");
    std::stringstream ss(dims);
    std::size_t rows, cols;
    ss >> rows >> cols;
    if (rows != m || cols != k) r.fail("Z dimensions disagree with header");
    model.Z = detail::read_matrix_block(r, rows, cols);
  }
  {
    auto [key, dims] = r.next_kv();
    if (key != "quantiles") r.fail("expected quantiles block");
    std::stringstream ss(dims);
    std::size_t cols, n;
    ss >> cols >> n;
    if (model.margins == Margins::rank) {
      if (cols != p) r.fail("quantile table count disagrees with p");
      std::vector<std::vector<double>> tables(cols);
      for (std::size_t j = 0; j < cols; ++j) {
        std::stringstream row(r.next_line());
        tables[j].resize(n);
        for (std::size_t i = 0; i < n; ++i) {
          std::string tok;
          if (!(row >> tok)) r.fail("short quantile row");
          tables[j][i] = detail::parse_double(tok, j, i);
        }
      }
      model.standardizer = Standardizer::from_tables(std::move(tables));
    } else {
      model.standardizer = Standardizer::identity(p);
    }
  }
  if (r.next_line() != "end") r.fail("missing end marker");
  return model;
}

/// Config echo written beside every CLI output; no timestamps so reruns are
/// byte-identical.
inline void write_manifest(const std::string& path,
                           const std::vector<std::pair<std::string, std::string>>& entries) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write manifest '" + path + "'");
  for (const auto& [key, value] : entries) out << key << ' ' << value << '\n';
}

}  // namespace mexico

#endif  // MEXICO_IO_HPP
