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

#ifndef TDLO_LINOPS_HPP
#define TDLO_LINOPS_HPP

#include "tdlo/common.hpp"
#include "tdlo/rng.hpp"

namespace tdlo {

// Quadrature conventions used throughout: x = a + a^dag, p = -i a + i a^dag,
// hbar = 2, vacuum variance 1, interleaved ordering (x1, p1, ..., xN, pN).
struct QuadratureConvention {
  static constexpr double hbar = 2.0;
  static constexpr double vacuum_variance = 1.0;
};

/// N x N complex matrix validated to be unitary on construction.
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(MatrixXcd entries, double tol = kValidationTol);

  static UnitaryMatrix identity(int dim);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const MatrixXcd& entries() const { return entries_; }
  complexd operator()(int i, int j) const { return entries_(i, j); }

 private:
  MatrixXcd entries_;
};

/// 2N x 2N real matrix validated to satisfy S Omega S^T = Omega
/// (interleaved quadrature ordering).
class SymplecticMatrix {
 public:
  explicit SymplecticMatrix(MatrixXd entries, double tol = kValidationTol);

  static SymplecticMatrix identity(int n_modes);

  int n_modes() const { return static_cast<int>(entries_.rows()) / 2; }
  const MatrixXd& entries() const { return entries_; }

 private:
  MatrixXd entries_;
};

/// True iff ||M M^dag - I||_F <= tol. Throws on a non-square input.
bool is_unitary(const MatrixXcd& m, double tol = kValidationTol);

/// Standard symplectic form for the interleaved ordering: N blocks
/// [[0, 1], [-1, 0]] on the diagonal.
MatrixXd symplectic_form(int n_modes);

/// Lifts a passive N-mode unitary to its 2N x 2N quadrature action
/// S = (W A)^{-1} diag(U, U*) W A. The result is real, orthogonal and
/// symplectic; a leftover imaginary residue above 1e-8 raises NumericalError.
SymplecticMatrix symplectic_from_unitary(const UnitaryMatrix& u);

/// Haar-distributed random unitary (QR of a complex Gaussian matrix with the
/// R diagonal phase correction).
UnitaryMatrix random_unitary(int dim, Rng& rng);

}  // namespace tdlo

#endif  // TDLO_LINOPS_HPP
