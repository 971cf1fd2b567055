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

#include "tdlo/linops.hpp"

#include <Eigen/QR>

namespace tdlo {

bool is_unitary(const MatrixXcd& m, double tol) {
  if (m.rows() != m.cols()) {
    throw ValidationError("is_unitary: matrix must be square, got " +
                          std::to_string(m.rows()) + "x" +
                          std::to_string(m.cols()));
  }
  const MatrixXcd residual =
      m * m.adjoint() - MatrixXcd::Identity(m.rows(), m.cols());
  return residual.norm() <= tol;
}

UnitaryMatrix::UnitaryMatrix(MatrixXcd entries, double tol)
    : entries_(std::move(entries)) {
  if (entries_.rows() == 0) {
    throw ValidationError("UnitaryMatrix: empty matrix");
  }
  if (!is_unitary(entries_, tol)) {
    throw ValidationError("UnitaryMatrix: input is not unitary within " +
                          std::to_string(tol));
  }
}

UnitaryMatrix UnitaryMatrix::identity(int dim) {
  return UnitaryMatrix(MatrixXcd::Identity(dim, dim));
}

SymplecticMatrix::SymplecticMatrix(MatrixXd entries, double tol)
    : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() % 2 != 0 ||
      entries_.rows() == 0) {
    throw ValidationError("SymplecticMatrix: dimension must be even, got " +
                          std::to_string(entries_.rows()));
  }
  const int n = static_cast<int>(entries_.rows()) / 2;
  const MatrixXd omega = symplectic_form(n);
  const double err = (entries_ * omega * entries_.transpose() - omega).norm();
  if (err > tol) {
    throw ValidationError(
        "SymplecticMatrix: S Omega S^T != Omega, residual " +
        std::to_string(err));
  }
}

SymplecticMatrix SymplecticMatrix::identity(int n_modes) {
  return SymplecticMatrix(MatrixXd::Identity(2 * n_modes, 2 * n_modes));
}

MatrixXd symplectic_form(int n_modes) {
  if (n_modes < 1) {
    throw ValidationError("symplectic_form: need at least one mode");
  }
  MatrixXd omega = MatrixXd::Zero(2 * n_modes, 2 * n_modes);
  for (int k = 0; k < n_modes; ++k) {
    omega(2 * k, 2 * k + 1) = 1.0;
    omega(2 * k + 1, 2 * k) = -1.0;
  }
  return omega;
}

namespace {

// A maps interleaved quadrature order to block order (x1..xN, p1..pN):
// 1-based, A_ij = 1 for (j odd, i = (j+1)/2) and (j even, i = N + j/2).
MatrixXcd ordering_matrix(int n) {
  MatrixXcd a = MatrixXcd::Zero(2 * n, 2 * n);
  for (int j = 1; j <= 2 * n; ++j) {
    const int i = (j % 2 == 1) ? (j + 1) / 2 : n + j / 2;
    a(i - 1, j - 1) = 1.0;
  }
  return a;
}

MatrixXcd w_matrix(int n) {
  const complexd im(0.0, 1.0);
  MatrixXcd w(2 * n, 2 * n);
  w.topLeftCorner(n, n) = MatrixXcd::Identity(n, n);
  w.topRightCorner(n, n) = im * MatrixXcd::Identity(n, n);
  w.bottomLeftCorner(n, n) = MatrixXcd::Identity(n, n);
  w.bottomRightCorner(n, n) = -im * MatrixXcd::Identity(n, n);
  return w;
}

}  // namespace

SymplecticMatrix symplectic_from_unitary(const UnitaryMatrix& u) {
  const int n = u.dim();
  const MatrixXcd wa = w_matrix(n) * ordering_matrix(n);
  MatrixXcd blocks = MatrixXcd::Zero(2 * n, 2 * n);
  blocks.topLeftCorner(n, n) = u.entries();
  blocks.bottomRightCorner(n, n) = u.entries().conjugate();
  const MatrixXcd s_complex = wa.inverse() * blocks * wa;

  const double residue = s_complex.imag().cwiseAbs().maxCoeff();
  if (residue > 1e-8) {
    throw NumericalError(
        "symplectic_from_unitary: imaginary residue " +
        std::to_string(residue) + " exceeds 1e-8");
  }
  return SymplecticMatrix(s_complex.real());
}

UnitaryMatrix random_unitary(int dim, Rng& rng) {
  if (dim < 1) {
    throw ValidationError("random_unitary: dim must be positive");
  }
  MatrixXcd g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      g(i, j) = rng.normal_complex();
    }
  }
  Eigen::HouseholderQR<MatrixXcd> qr(g);
  MatrixXcd q = qr.householderQ();
  const MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase ambiguity so Q is Haar distributed.
  for (int j = 0; j < dim; ++j) {
    const complexd d = r(j, j);
    const complexd phase = (std::abs(d) > 0) ? d / std::abs(d) : complexd(1, 0);
    q.col(j) *= phase;
  }
  return UnitaryMatrix(std::move(q));
}

}  // namespace tdlo
