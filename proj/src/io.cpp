// Copyright 2026 The tdlo developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tdlo/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace tdlo::io {

namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

}  // namespace

json complex_matrix_to_json(const MatrixXcd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back({m(i, j).real(), m(i, j).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

MatrixXcd complex_matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw ValidationError("complex matrix JSON must be a nonempty array of "
                          "rows");
  }
  const auto rows = j.size();
  const auto cols = j.at(0).size();
  MatrixXcd m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = j.at(i);
    if (!row.is_array() || row.size() != cols) {
      throw ValidationError("complex matrix JSON rows must have equal length");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const json& e = row.at(c);
      if (!e.is_array() || e.size() != 2) {
        throw ValidationError("complex matrix entries must be [re, im]");
      }
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) =
          complexd(e.at(0).get<double>(), e.at(1).get<double>());
    }
  }
  return m;
}

json plan_to_json(const DecompositionPlan& plan) {
  plan.validate();
  json layers = json::array();
  for (const auto& layer : plan.layers) {
    json jl = json::array();
    for (const TParams& p : layer) {
      jl.push_back({{"m", p.m}, {"omega", p.omega}, {"phi", p.phi}});
    }
    layers.push_back(std::move(jl));
  }
  return json{{"dim", plan.dim},
              {"layers", std::move(layers)},
              {"alphas", plan.alphas}};
}

DecompositionPlan plan_from_json(const json& j) {
  DecompositionPlan plan;
  try {
    plan.dim = j.at("dim").get<int>();
    int k = 1;
    for (const json& jl : j.at("layers")) {
      std::vector<TParams> layer;
      int m = 2;
      for (const json& jp : jl) {
        TParams p;
        p.m = jp.at("m").get<int>();
        p.omega = jp.at("omega").get<double>();
        p.phi = jp.at("phi").get<double>();
        p.layer = k;
        layer.push_back(p);
        ++m;
      }
      plan.layers.push_back(std::move(layer));
      ++k;
    }
    plan.alphas = j.at("alphas").get<std::vector<double>>();
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed plan JSON: ") + e.what());
  }
  plan.validate();
  return plan;
}

namespace {

Switch1 switch1_from_string(const std::string& s) {
  if (s == "through") return Switch1::Through;
  if (s == "loop_side") return Switch1::LoopSide;
  throw ValidationError("unknown switch1 value '" + s + "'");
}

Switch2 switch2_from_string(const std::string& s) {
  if (s == "keep") return Switch2::Keep;
  if (s == "export") return Switch2::Export;
  throw ValidationError("unknown switch2 value '" + s + "'");
}

FinalPhaseMode phase_mode_from_string(const std::string& s) {
  if (s == "vps") return FinalPhaseMode::Vps;
  if (s == "measurement_basis") return FinalPhaseMode::MeasurementBasis;
  throw ValidationError("unknown final_phase_mode value '" + s + "'");
}

}  // namespace

json timeline_to_json(const ControlTimeline& t) {
  t.validate();
  json bins = json::array();
  for (const TimeBin& b : t.bins) {
    bins.push_back({{"index", b.index},
                    {"switch1", to_string(b.switch1)},
                    {"switch2", to_string(b.switch2)},
                    {"vbs_T", b.vbs_t},
                    {"vps_theta", b.vps_theta}});
  }
  json trace = json::array();
  for (const ModeItinerary& it : t.mode_trace) {
    trace.push_back({{"inner_trips", it.inner_trips},
                     {"outer_trips", it.outer_trips}});
  }
  return json{{"n_modes", t.n_modes},
              {"tau_ns", t.tau_ns},
              {"final_phase_mode", to_string(t.final_phase_mode)},
              {"phase_offsets", t.phase_offsets},
              {"bins", std::move(bins)},
              {"mode_trace", std::move(trace)}};
}

ControlTimeline timeline_from_json(const json& j) {
  ControlTimeline t;
  try {
    t.n_modes = j.at("n_modes").get<int>();
    t.tau_ns = j.at("tau_ns").get<double>();
    t.final_phase_mode =
        phase_mode_from_string(j.at("final_phase_mode").get<std::string>());
    t.phase_offsets = j.at("phase_offsets").get<std::vector<double>>();
    for (const json& jb : j.at("bins")) {
      TimeBin b;
      b.index = jb.at("index").get<int>();
      b.switch1 = switch1_from_string(jb.at("switch1").get<std::string>());
      b.switch2 = switch2_from_string(jb.at("switch2").get<std::string>());
      b.vbs_t = jb.at("vbs_T").get<double>();
      b.vps_theta = jb.at("vps_theta").get<double>();
      t.bins.push_back(b);
    }
    for (const json& jt : j.at("mode_trace")) {
      t.mode_trace.push_back(ModeItinerary{
          jt.at("inner_trips").get<int>(), jt.at("outer_trips").get<int>()});
    }
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed timeline JSON: ") + e.what());
  }
  t.validate();
  return t;
}

json covariance_to_json(const CovarianceMatrix& g) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < g.gamma().rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < g.gamma().cols(); ++j) {
      row.push_back(g.gamma()(i, j));
    }
    rows.push_back(std::move(row));
  }
  return json{{"n_modes", g.n_modes()}, {"matrix", std::move(rows)}};
}

CovarianceMatrix covariance_from_json(const json& j) {
  try {
    const json& rows = j.at("matrix");
    const auto n = rows.size();
    MatrixXd m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t c = 0; c < n; ++c) {
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) =
            rows.at(i).at(c).get<double>();
      }
    }
    return CovarianceMatrix(std::move(m));
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed covariance JSON: ") +
                          e.what());
  }
}

namespace {

std::vector<std::string> quadrature_labels(int n_modes) {
  std::vector<std::string> labels;
  for (int k = 1; k <= n_modes; ++k) {
    labels.push_back("x" + std::to_string(k));
    labels.push_back("p" + std::to_string(k));
  }
  return labels;
}

}  // namespace

std::string covariance_to_csv(const CovarianceMatrix& g) {
  const auto labels = quadrature_labels(g.n_modes());
  std::ostringstream os;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    os << (i ? "," : "") << labels[i];
  }
  os << "\n";
  for (Eigen::Index i = 0; i < g.gamma().rows(); ++i) {
    for (Eigen::Index j = 0; j < g.gamma().cols(); ++j) {
      os << (j ? "," : "") << format_double(g.gamma()(i, j));
    }
    os << "\n";
  }
  return os.str();
}

CovarianceMatrix covariance_from_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) {
    throw ValidationError("covariance CSV is empty");
  }
  const auto header = split(line, ',');
  const auto dim = header.size();
  MatrixXd m(dim, dim);
  std::size_t row = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != dim || row >= dim) {
      throw ValidationError("covariance CSV has inconsistent shape");
    }
    for (std::size_t j = 0; j < dim; ++j) {
      m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(j)) =
          std::stod(cells[j]);
    }
    ++row;
  }
  if (row != dim) {
    throw ValidationError("covariance CSV has inconsistent shape");
  }
  return CovarianceMatrix(std::move(m));
}

json covariance_element_list(const CovarianceMatrix& g) {
  const auto labels = quadrature_labels(g.n_modes());
  json out = json::array();
  for (Eigen::Index i = 0; i < g.gamma().rows(); ++i) {
    for (Eigen::Index j = 0; j < g.gamma().cols(); ++j) {
      out.push_back({{"row", i},
                     {"col", j},
                     {"row_label", labels[static_cast<std::size_t>(i)]},
                     {"col_label", labels[static_cast<std::size_t>(j)]},
                     {"value", g.gamma()(i, j)}});
    }
  }
  return out;
}

std::string samples_to_csv(const std::array<BasisSamples, 5>& sets) {
  std::ostringstream os;
  os << "basis";
  const auto n_modes = sets[0].samples.cols();
  for (Eigen::Index k = 1; k <= n_modes; ++k) os << ",q" << k;
  os << "\n";
  for (const BasisSamples& s : sets) {
    for (Eigen::Index r = 0; r < s.samples.rows(); ++r) {
      os << s.label;
      for (Eigen::Index c = 0; c < s.samples.cols(); ++c) {
        os << "," << format_double(s.samples(r, c));
      }
      os << "\n";
    }
  }
  return os.str();
}

std::array<BasisSamples, 5> samples_from_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) {
    throw ValidationError("samples CSV is empty");
  }
  const auto& bases = measurement_bases();
  std::array<std::vector<std::array<double, 3>>, 5> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != 4) {
      throw ValidationError("samples CSV rows must be basis,q1,q2,q3");
    }
    int basis = -1;
    for (std::size_t b = 0; b < bases.size(); ++b) {
      if (cells[0] == bases[b].label) basis = static_cast<int>(b);
    }
    if (basis < 0) {
      throw ValidationError("samples CSV has unknown basis label '" +
                            cells[0] + "'");
    }
    rows[basis].push_back(
        {std::stod(cells[1]), std::stod(cells[2]), std::stod(cells[3])});
  }
  std::array<BasisSamples, 5> out;
  for (std::size_t b = 0; b < bases.size(); ++b) {
    if (rows[b].empty()) {
      throw ValidationError("samples CSV is missing basis '" +
                            bases[b].label + "'");
    }
    out[b].label = bases[b].label;
    out[b].angles_deg = bases[b].angles_deg;
    out[b].samples.resize(static_cast<Eigen::Index>(rows[b].size()), 3);
    for (std::size_t r = 0; r < rows[b].size(); ++r) {
      for (int c = 0; c < 3; ++c) {
        out[b].samples(static_cast<Eigen::Index>(r), c) = rows[b][r][c];
      }
    }
  }
  return out;
}

json inseparability_to_json(const InseparabilityReport& report) {
  json entries = json::array();
  for (const InseparabilityEntry& e : report.entries) {
    entries.push_back({{"label", e.label},
                       {"value", e.value},
                       {"threshold", e.threshold},
                       {"passes", e.passes}});
  }
  return json{{"entries", std::move(entries)},
              {"all_pass", report.all_pass()}};
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ValidationError("cannot open file: " + path.string());
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file_atomic(const std::filesystem::path& path,
                            const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw ValidationError("cannot write file: " + tmp.string());
    }
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace tdlo::io
