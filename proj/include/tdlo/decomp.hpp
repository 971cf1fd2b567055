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

#ifndef TDLO_DECOMP_HPP
#define TDLO_DECOMP_HPP

#include <vector>

#include "tdlo/linops.hpp"

namespace tdlo {

// Parameters of one two-mode T matrix: the N-dimensional identity with
// elements (l,l), (l,m), (m,l), (m,m) replaced by
//   e^{i phi} sin(omega), -e^{i phi} cos(omega), cos(omega), sin(omega).
// In this loop-compatible scheme l is always mode 1.
struct TParams {
  int m = 2;           // partner mode, 2..N (1-based)
  double omega = kPi / 2.0;
  double phi = 0.0;
  int layer = 1;       // k >= 1

  bool is_identity(double tol = kValidationTol) const {
    return std::abs(std::cos(omega)) <= tol &&
           (std::abs(std::sin(phi)) <= tol ||
            std::abs(std::cos(omega)) <= tol);
  }
};

// Ordered factorization of an N-mode unitary: layer k holds T parameters for
// m = 2..N-k+1, plus the final diagonal phases alpha_1..alpha_N, such that
//   U = diag(e^{i alpha}) * (T^{(N-1)}_{1,2})^-1 * ... * (T^{(1)}_{1,2})^-1.
struct DecompositionPlan {
  int dim = 0;
  std::vector<std::vector<TParams>> layers;  // layers[k-1][m-2]
  std::vector<double> alphas;                // size dim

  /// Structural validation: layer k has exactly N-k entries with m = 2..N-k+1.
  void validate() const;

  /// Plan whose T's are all identity and whose alphas are zero.
  static DecompositionPlan identity(int dim);

  /// Plan whose T's are all full swaps (omega = 0, phi = 0), alphas zero.
  /// Reconstructs to a signed permutation; compiles to all-exchange routing.
  static DecompositionPlan all_swap(int dim);

  int t_count() const;
};

/// Builds the N-dimensional T_{1,m} matrix for the given parameters.
UnitaryMatrix t_matrix(int dim, const TParams& p);

struct ReduceStepResult {
  std::vector<TParams> params;  // T^{(k)}_{1,2} .. T^{(k)}_{1,r}
  MatrixXcd reduced;            // (r-1) x (r-1) unitary block
  double alpha;                 // phase of the isolated diagonal element
};

/// One layer of the reduction: finds T's such that U * T_{1,2} * ... * T_{1,r}
/// is block-diagonal with the last row/column zeroed except (r,r) = e^{i a}.
ReduceStepResult reduce_step(const UnitaryMatrix& u);

/// Full decomposition by repeated reduction.
DecompositionPlan decompose(const UnitaryMatrix& u);

/// Evaluates the plan's factorization product back into a unitary.
UnitaryMatrix reconstruct(const DecompositionPlan& plan);

}  // namespace tdlo

#endif  // TDLO_DECOMP_HPP
