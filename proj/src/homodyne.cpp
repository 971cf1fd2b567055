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

#include "tdlo/homodyne.hpp"

#include <Eigen/Cholesky>

#include "tdlo/rng.hpp"

namespace tdlo {

ModeFunction::ModeFunction(ModeFunctionParams params, double sample_dt_ns)
    : params_(params) {
  if (params_.delta_t_ns <= 0 || params_.gamma_per_ns <= 0 ||
      params_.tau_ns <= 0 || sample_dt_ns <= 0) {
    throw ValidationError("ModeFunction: parameters must be positive");
  }
  // Normalize on the sampling grid so sum(|f|^2) dt = 1.
  double sum = 0.0;
  const double half = params_.delta_t_ns / 2.0;
  const int steps = static_cast<int>(std::floor(half / sample_dt_ns));
  for (int i = -steps; i <= steps; ++i) {
    const double s = i * sample_dt_ns;
    const double v = raw(params_.t0_ns + s, 1);
    sum += v * v * sample_dt_ns;
  }
  if (sum <= 0.0) {
    throw NumericalError("ModeFunction: vanishing norm on the sampling grid");
  }
  scale_ = 1.0 / std::sqrt(sum);
}

double ModeFunction::raw(double t_ns, int k) const {
  const double dt = t_ns - center(k);
  if (2.0 * std::abs(dt) > params_.delta_t_ns) return 0.0;
  const double g = params_.gamma_per_ns * dt;
  return std::exp(-g * g) * dt;
}

double ModeFunction::value(double t_ns, int k) const {
  return scale_ * raw(t_ns, k);
}

double ModeFunction::discrete_norm(double sample_dt_ns) const {
  double sum = 0.0;
  const double half = params_.delta_t_ns / 2.0;
  const int steps = static_cast<int>(std::floor(half / sample_dt_ns));
  for (int i = -steps; i <= steps; ++i) {
    const double v = value(params_.t0_ns + i * sample_dt_ns, 1);
    sum += v * v * sample_dt_ns;
  }
  return sum;
}

const std::array<HomodyneBasis, 5>& measurement_bases() {
  static const std::array<HomodyneBasis, 5> bases = {
      HomodyneBasis{"pxx", {90.0, 0.0, 0.0}},
      HomodyneBasis{"xpx", {0.0, 90.0, 0.0}},
      HomodyneBasis{"xxp", {0.0, 0.0, 90.0}},
      HomodyneBasis{"ppp", {90.0, 90.0, 90.0}},
      HomodyneBasis{"ddd", {45.0, 45.0, 45.0}},
  };
  return bases;
}

MatrixXd basis_projection(const std::vector<double>& angles_deg, int n_modes) {
  if (static_cast<int>(angles_deg.size()) != n_modes) {
    throw ValidationError("basis_projection: need one angle per mode");
  }
  MatrixXd b = MatrixXd::Zero(n_modes, 2 * n_modes);
  for (int i = 0; i < n_modes; ++i) {
    const double phi = angles_deg[i] * kPi / 180.0;
    b(i, 2 * i) = std::cos(phi);
    b(i, 2 * i + 1) = std::sin(phi);
  }
  return b;
}

MatrixXd sample_quadratures(const CovarianceMatrix& g,
                            const std::vector<double>& angles_deg, int n,
                            std::uint64_t seed) {
  if (n < 1) {
    throw ValidationError("sample_quadratures: need at least one sample");
  }
  if (!g.is_physical()) {
    throw ValidationError("sample_quadratures: unphysical covariance");
  }
  const int modes = g.n_modes();
  const MatrixXd b = basis_projection(angles_deg, modes);
  MatrixXd sigma = b * g.gamma() * b.transpose();
  sigma = 0.5 * (sigma + sigma.transpose()).eval();

  Eigen::LLT<MatrixXd> llt(sigma);
  MatrixXd l;
  if (llt.info() == Eigen::Success) {
    l = llt.matrixL();
  } else {
    // Semidefinite projections can sit on the boundary; fall back to an
    // eigenvalue square root with clipped negatives.
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(sigma);
    l = es.eigenvectors() *
        es.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal();
  }

  Rng rng(seed);
  MatrixXd out(n, modes);
  VectorXd z(modes);
  for (int s = 0; s < n; ++s) {
    for (int i = 0; i < modes; ++i) z(i) = rng.normal();
    out.row(s) = (l * z).transpose();
  }
  return out;
}

std::array<BasisSamples, 5> sample_all_bases(const CovarianceMatrix& g, int n,
                                             std::uint64_t seed) {
  if (g.n_modes() != 3) {
    throw ValidationError("sample_all_bases: the basis set is defined for "
                          "three modes");
  }
  std::array<BasisSamples, 5> out;
  const auto& bases = measurement_bases();
  for (std::size_t i = 0; i < bases.size(); ++i) {
    out[i].label = bases[i].label;
    out[i].angles_deg = bases[i].angles_deg;
    out[i].samples = sample_quadratures(g, bases[i].angles_deg, n,
                                        seed + static_cast<std::uint64_t>(i));
  }
  return out;
}

CovarianceMatrix estimate_from_moments(
    const std::array<MatrixXd, 5>& moments) {
  for (const MatrixXd& m : moments) {
    if (m.rows() != 3 || m.cols() != 3) {
      throw ValidationError("estimate_from_moments: expected 3x3 moments");
    }
  }
  const MatrixXd& pxx = moments[0];
  const MatrixXd& xpx = moments[1];
  const MatrixXd& xxp = moments[2];
  const MatrixXd& ppp = moments[3];
  const MatrixXd& ddd = moments[4];

  VectorXd var_x(3), var_p(3);
  var_x(0) = 0.5 * (xpx(0, 0) + xxp(0, 0));
  var_x(1) = 0.5 * (pxx(1, 1) + xxp(1, 1));
  var_x(2) = 0.5 * (pxx(2, 2) + xpx(2, 2));
  var_p(0) = 0.5 * (pxx(0, 0) + ppp(0, 0));
  var_p(1) = 0.5 * (xpx(1, 1) + ppp(1, 1));
  var_p(2) = 0.5 * (xxp(2, 2) + ppp(2, 2));

  MatrixXd g = MatrixXd::Zero(6, 6);
  for (int i = 0; i < 3; ++i) {
    g(2 * i, 2 * i) = var_x(i);
    g(2 * i + 1, 2 * i + 1) = var_p(i);
    // Same-mode cross term from the 45-degree basis.
    g(2 * i, 2 * i + 1) = ddd(i, i) - 0.5 * (var_x(i) + var_p(i));
  }
  // Same-type cross covariances.
  g(0, 2) = xxp(0, 1);  // x1 x2
  g(0, 4) = xpx(0, 2);  // x1 x3
  g(2, 4) = pxx(1, 2);  // x2 x3
  g(1, 3) = ppp(0, 1);  // p1 p2
  g(1, 5) = ppp(0, 2);  // p1 p3
  g(3, 5) = ppp(1, 2);  // p2 p3
  // Mixed cross terms from bases 1-3.
  g(1, 2) = pxx(0, 1);  // p1 x2
  g(1, 4) = pxx(0, 2);  // p1 x3
  g(0, 3) = xpx(0, 1);  // x1 p2
  g(3, 4) = xpx(1, 2);  // p2 x3
  g(0, 5) = xxp(0, 2);  // x1 p3
  g(2, 5) = xxp(1, 2);  // x2 p3

  const MatrixXd sym = g + g.transpose() -
                       MatrixXd(g.diagonal().asDiagonal());
  return CovarianceMatrix(sym);
}

CovarianceMatrix estimate_covariance(const std::array<BasisSamples, 5>& sets) {
  const auto& bases = measurement_bases();
  std::array<MatrixXd, 5> moments;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const BasisSamples& s = sets[i];
    if (s.label != bases[i].label || s.angles_deg != bases[i].angles_deg) {
      throw ValidationError("estimate_covariance: basis set " +
                            std::to_string(i) + " does not match the " +
                            bases[i].label + " basis");
    }
    const auto n = s.samples.rows();
    if (n < 2) {
      throw ValidationError("estimate_covariance: need at least 2 samples "
                            "per basis");
    }
    const Eigen::RowVectorXd mean = s.samples.colwise().mean();
    const MatrixXd centered = s.samples.rowwise() - mean;
    moments[i] = centered.transpose() * centered /
                 static_cast<double>(n - 1);
  }
  return estimate_from_moments(moments);
}

}  // namespace tdlo
