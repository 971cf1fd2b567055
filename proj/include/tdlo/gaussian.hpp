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

#ifndef TDLO_GAUSSIAN_HPP
#define TDLO_GAUSSIAN_HPP

#include <vector>

#include "tdlo/linops.hpp"
#include "tdlo/timeline.hpp"

namespace tdlo {

// 2N x 2N real symmetric covariance matrix, interleaved quadrature ordering,
// vacuum variance 1.
class CovarianceMatrix {
 public:
  explicit CovarianceMatrix(MatrixXd gamma);

  static CovarianceMatrix vacuum(int n_modes);

  int n_modes() const { return static_cast<int>(gamma_.rows()) / 2; }
  const MatrixXd& gamma() const { return gamma_; }
  double operator()(int i, int j) const { return gamma_(i, j); }

  /// Smallest eigenvalue of Gamma + i Omega; physical states satisfy >= 0 up
  /// to numerical noise.
  double physicality_eig() const;
  bool is_physical(double tol = 1e-8) const { return physicality_eig() >= -tol; }

  /// Tensor product (block direct sum) with another state.
  CovarianceMatrix tensor(const CovarianceMatrix& other) const;

 private:
  MatrixXd gamma_;
};

struct LossModel {
  double source_detection_loss = 0.23;
  double inner_trip_loss = 0.15;
  double outer_trip_loss = 0.20;
  double input_squeezing_db = 7.4;

  void validate() const;
  static LossModel paper() { return LossModel{}; }
  static LossModel lossless() { return LossModel{0.0, 0.0, 0.0, 7.4}; }
};

enum class SqueezedQuadrature : std::uint8_t { X, P };

struct InputSpec {
  double squeezing_db = 7.4;
  SqueezedQuadrature quadrature = SqueezedQuadrature::P;
};

/// Single-mode pure squeezed vacuum: diag(10^{+dB/10}, 10^{-dB/10}) for a
/// p-squeezed state (x variance first).
CovarianceMatrix squeezed_vacuum_cov(double squeezing_db,
                                     SqueezedQuadrature squeezed);

/// Gamma_out = S Gamma_in S^T, symmetrized.
CovarianceMatrix apply_symplectic(const CovarianceMatrix& g,
                                  const SymplecticMatrix& s);

/// Pure-loss (vacuum admixture) channel on one mode: rows/columns scaled by
/// sqrt(1-loss), loss * I added to the mode's diagonal block.
CovarianceMatrix apply_loss(const CovarianceMatrix& g, int mode, double loss);

std::vector<InputSpec> uniform_inputs(int n_modes, double squeezing_db,
                                      SqueezedQuadrature q =
                                          SqueezedQuadrature::P);

// Full timeline simulation: source/detection loss once per input mode, the
// timeline's linear operation applied as a symplectic congruence (in the
// shifted homodyne frame when final phases live in the measurement basis),
// then the per-output-mode round-trip losses from mode_trace. Throws
// NumericalError if the output loses physicality.
CovarianceMatrix simulate(const ControlTimeline& t,
                          const std::vector<InputSpec>& inputs,
                          const LossModel& lm);

}  // namespace tdlo

#endif  // TDLO_GAUSSIAN_HPP
