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

#ifndef TDLO_METRICS_HPP
#define TDLO_METRICS_HPP

#include <string>
#include <vector>

#include "tdlo/gaussian.hpp"

namespace tdlo {

// Real coefficient vector over (x1, p1, ..., xN, pN) naming a quadrature
// combination such as x1 - x3.
struct QuadratureCombo {
  VectorXd coefficients;
  std::string label;
};

inline int x_index(int mode) { return 2 * (mode - 1); }      // 1-based mode
inline int p_index(int mode) { return 2 * (mode - 1) + 1; }

struct ComboTerm {
  char quad;    // 'x' or 'p'
  int mode;     // 1-based
  double coef;
};

QuadratureCombo make_combo(int n_modes, const std::vector<ComboTerm>& terms);

/// Variance of the combination: c^T Gamma c (zero-mean Gaussian).
double combo_variance(const CovarianceMatrix& g, const QuadratureCombo& c);

// An inseparability parameter is the sum of two combo variances; values below
// 4 (vacuum variance 1) certify full inseparability.
inline constexpr double kInseparabilityThreshold = 4.0;

struct ComboPair {
  QuadratureCombo first;
  QuadratureCombo second;
};

struct InseparabilityEntry {
  std::string label;
  double value = 0.0;
  double threshold = kInseparabilityThreshold;
  bool passes = false;
};

struct InseparabilityReport {
  std::vector<InseparabilityEntry> entries;
  bool all_pass() const;
};

InseparabilityReport evaluate_inseparability(
    const CovarianceMatrix& g, const std::vector<ComboPair>& pairs);

// Uhlmann fidelity (squared overlap convention) between zero-mean Gaussian
// states, via the closed form for arbitrary Gaussian states evaluated through
// the symplectic spectrum of the auxiliary matrix. For pure states it reduces
// to 2^N / sqrt(det(G1 + G2)).
double gaussian_fidelity(const CovarianceMatrix& g1,
                         const CovarianceMatrix& g2);

/// Squeezing in dB to quadrature variance: 10^{-dB/10} (vacuum = 1).
double db_to_variance(double db);

/// Inverse of db_to_variance; throws for v <= 0.
double variance_to_db(double v);

}  // namespace tdlo

#endif  // TDLO_METRICS_HPP
