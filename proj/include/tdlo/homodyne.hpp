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

#ifndef TDLO_HOMODYNE_HPP
#define TDLO_HOMODYNE_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tdlo/gaussian.hpp"

namespace tdlo {

// Temporal mode function extracting pulse-mode quadratures from a homodyne
// record: f_k(t) ~ exp(-gamma^2 (t - t_k)^2) (t - t_k) inside the window
// 2|t - t_k| <= delta_t, zero outside. Times in nanoseconds.
struct ModeFunctionParams {
  double gamma_per_ns = 0.06;  // 6e7 / s
  double delta_t_ns = 46.0;
  double tau_ns = 66.0;
  double t0_ns = 0.0;
};

class ModeFunction {
 public:
  explicit ModeFunction(ModeFunctionParams params = {},
                        double sample_dt_ns = 1.0);

  /// Normalized value of f_k at time t (k is the 1-based mode index).
  double value(double t_ns, int k) const;

  double center(int k) const {
    return params_.t0_ns + (k - 1) * params_.tau_ns;
  }
  /// Discrete sum(|f|^2) * dt over the sampling grid; 1 after normalization.
  double discrete_norm(double sample_dt_ns) const;

  const ModeFunctionParams& params() const { return params_; }

 private:
  double raw(double t_ns, int k) const;
  ModeFunctionParams params_;
  double scale_ = 1.0;
};

// Per-mode homodyne angles, degrees; the measured quadrature is
// q_i = x_i cos(phi_i) + p_i sin(phi_i).
struct HomodyneBasis {
  std::string label;
  std::vector<double> angles_deg;
};

/// The paper's five N=3 measurement bases:
/// (p,x,x), (x,p,x), (x,x,p), (p,p,p), ((x+p)/sqrt2 each).
const std::array<HomodyneBasis, 5>& measurement_bases();

/// Basis-projection matrix B (N x 2N): row i selects
/// x_i cos(phi_i) + p_i sin(phi_i).
MatrixXd basis_projection(const std::vector<double>& angles_deg, int n_modes);

/// Draws n samples of the N measured quadratures from the zero-mean Gaussian
/// with covariance B Gamma B^T. Deterministic for a fixed seed.
MatrixXd sample_quadratures(const CovarianceMatrix& g,
                            const std::vector<double>& angles_deg, int n,
                            std::uint64_t seed);

struct BasisSamples {
  std::string label;
  std::vector<double> angles_deg;
  MatrixXd samples;  // n x N
};

/// Samples all five bases with per-basis seeds seed, seed+1, ....
std::array<BasisSamples, 5> sample_all_bases(const CovarianceMatrix& g, int n,
                                             std::uint64_t seed);

// Reconstructs the full 6x6 covariance matrix from the five per-basis 3x3
// second-moment matrices. Duplicate moment estimates are averaged; the
// same-mode cov(x_i, p_i) comes from the 45-degree basis via
// var_45,i - (var(x_i) + var(p_i)) / 2. Exact when fed population moments.
CovarianceMatrix estimate_from_moments(const std::array<MatrixXd, 5>& moments);

/// Sample-moment estimator (mean-subtracted, 1/(n-1)) feeding the moment
/// reconstruction. Physicality of the result is reported by the caller, not
/// enforced here.
CovarianceMatrix estimate_covariance(const std::array<BasisSamples, 5>& sets);

}  // namespace tdlo

#endif  // TDLO_HOMODYNE_HPP
