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

#include "tdlo/metrics.hpp"

#include <algorithm>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace tdlo {

QuadratureCombo make_combo(int n_modes, const std::vector<ComboTerm>& terms) {
  QuadratureCombo combo;
  combo.coefficients = VectorXd::Zero(2 * n_modes);
  std::ostringstream label;
  bool first = true;
  for (const ComboTerm& t : terms) {
    if (t.mode < 1 || t.mode > n_modes || (t.quad != 'x' && t.quad != 'p')) {
      throw ValidationError("make_combo: bad term");
    }
    const int idx = (t.quad == 'x') ? x_index(t.mode) : p_index(t.mode);
    combo.coefficients(idx) += t.coef;
    if (!first) label << (t.coef >= 0 ? "+" : "-");
    if (first && t.coef < 0) label << "-";
    const double mag = std::abs(t.coef);
    if (std::abs(mag - 1.0) > 1e-12) label << mag << "*";
    label << t.quad << t.mode;
    first = false;
  }
  combo.label = label.str();
  if (combo.coefficients.cwiseAbs().maxCoeff() == 0.0) {
    throw ValidationError("make_combo: all coefficients vanish");
  }
  return combo;
}

double combo_variance(const CovarianceMatrix& g, const QuadratureCombo& c) {
  if (c.coefficients.size() != 2 * g.n_modes()) {
    throw ValidationError("combo_variance: coefficient length mismatch");
  }
  if (c.coefficients.cwiseAbs().maxCoeff() == 0.0) {
    throw ValidationError("combo_variance: combo has no nonzero coefficient");
  }
  return c.coefficients.dot(g.gamma() * c.coefficients);
}

bool InseparabilityReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const InseparabilityEntry& e) { return e.passes; });
}

InseparabilityReport evaluate_inseparability(
    const CovarianceMatrix& g, const std::vector<ComboPair>& pairs) {
  InseparabilityReport report;
  for (const ComboPair& pair : pairs) {
    InseparabilityEntry e;
    e.label = "<[D(" + pair.first.label + ")]^2> + <[D(" +
              pair.second.label + ")]^2>";
    e.value = combo_variance(g, pair.first) + combo_variance(g, pair.second);
    e.threshold = kInseparabilityThreshold;
    e.passes = e.value < e.threshold;
    report.entries.push_back(std::move(e));
  }
  return report;
}

namespace {

// Symplectic eigenvalues: moduli of the (paired) eigenvalues of Omega * V.
std::vector<double> symplectic_eigenvalues(const MatrixXd& v) {
  const int n = static_cast<int>(v.rows()) / 2;
  const MatrixXd k = symplectic_form(n) * v;
  Eigen::EigenSolver<MatrixXd> solver(k, /*computeEigenvectors=*/false);
  std::vector<double> mags(2 * n);
  for (int i = 0; i < 2 * n; ++i) mags[i] = std::abs(solver.eigenvalues()(i));
  std::sort(mags.begin(), mags.end());
  std::vector<double> nu(n);
  for (int i = 0; i < n; ++i) nu[i] = 0.5 * (mags[2 * i] + mags[2 * i + 1]);
  return nu;
}

}  // namespace

double gaussian_fidelity(const CovarianceMatrix& g1,
                         const CovarianceMatrix& g2) {
  if (g1.n_modes() != g2.n_modes()) {
    throw ValidationError("gaussian_fidelity: mode count mismatch");
  }
  if (!g1.is_physical(1e-6) || !g2.is_physical(1e-6)) {
    throw ValidationError("gaussian_fidelity: unphysical input state");
  }
  const int n = g1.n_modes();
  const MatrixXd omega = symplectic_form(n);
  const MatrixXd v1 = 0.5 * g1.gamma();
  const MatrixXd v2 = 0.5 * g2.gamma();
  const MatrixXd vsum = v1 + v2;

  const MatrixXd vsum_inv = vsum.llt().solve(
      MatrixXd::Identity(2 * n, 2 * n));
  const MatrixXd vaux =
      omega.transpose() * vsum_inv * (0.25 * omega + v2 * omega * v1);

  double product = 1.0;
  for (double nu : symplectic_eigenvalues(vaux)) {
    const double inside = std::max(4.0 * nu * nu - 1.0, 0.0);
    product *= 2.0 * nu + std::sqrt(inside);
  }
  const double det = vsum.determinant();
  if (det <= 0.0) {
    throw NumericalError("gaussian_fidelity: degenerate covariance sum");
  }
  const double f = product / std::sqrt(det);
  return std::clamp(f, 0.0, 1.0);
}

double db_to_variance(double db) { return std::pow(10.0, -db / 10.0); }

double variance_to_db(double v) {
  if (v <= 0.0) {
    throw ValidationError("variance_to_db: variance must be positive");
  }
  return -10.0 * std::log10(v);
}

}  // namespace tdlo
