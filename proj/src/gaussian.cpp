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

#include "tdlo/gaussian.hpp"

#include <Eigen/Eigenvalues>

#include "tdlo/compiler.hpp"

namespace tdlo {

CovarianceMatrix::CovarianceMatrix(MatrixXd gamma) : gamma_(std::move(gamma)) {
  if (gamma_.rows() != gamma_.cols() || gamma_.rows() % 2 != 0 ||
      gamma_.rows() == 0) {
    throw ValidationError("CovarianceMatrix: dimension must be 2N");
  }
  if ((gamma_ - gamma_.transpose()).cwiseAbs().maxCoeff() > 1e-10) {
    throw ValidationError("CovarianceMatrix: matrix is not symmetric");
  }
  gamma_ = 0.5 * (gamma_ + gamma_.transpose()).eval();
}

CovarianceMatrix CovarianceMatrix::vacuum(int n_modes) {
  return CovarianceMatrix(MatrixXd::Identity(2 * n_modes, 2 * n_modes));
}

double CovarianceMatrix::physicality_eig() const {
  const int n = n_modes();
  const complexd im(0.0, 1.0);
  const MatrixXcd m = gamma_.cast<complexd>() +
                      im * symplectic_form(n).cast<complexd>();
  Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(m);
  return solver.eigenvalues().minCoeff();
}

CovarianceMatrix CovarianceMatrix::tensor(const CovarianceMatrix& other) const {
  const auto ra = gamma_.rows();
  const auto rb = other.gamma_.rows();
  MatrixXd g = MatrixXd::Zero(ra + rb, ra + rb);
  g.topLeftCorner(ra, ra) = gamma_;
  g.bottomRightCorner(rb, rb) = other.gamma_;
  return CovarianceMatrix(std::move(g));
}

void LossModel::validate() const {
  for (double f : {source_detection_loss, inner_trip_loss, outer_trip_loss}) {
    if (f < 0.0 || f > 1.0) {
      throw ValidationError("LossModel: loss fractions must lie in [0,1]");
    }
  }
  if (input_squeezing_db < 0.0) {
    throw ValidationError("LossModel: squeezing must be nonnegative in dB");
  }
}

CovarianceMatrix squeezed_vacuum_cov(double squeezing_db,
                                     SqueezedQuadrature squeezed) {
  if (squeezing_db < 0.0) {
    throw ValidationError("squeezed_vacuum_cov: squeezing_db must be >= 0");
  }
  const double anti = std::pow(10.0, squeezing_db / 10.0);
  const double sq = std::pow(10.0, -squeezing_db / 10.0);
  MatrixXd g = MatrixXd::Zero(2, 2);
  if (squeezed == SqueezedQuadrature::P) {
    g(0, 0) = anti;
    g(1, 1) = sq;
  } else {
    g(0, 0) = sq;
    g(1, 1) = anti;
  }
  return CovarianceMatrix(std::move(g));
}

CovarianceMatrix apply_symplectic(const CovarianceMatrix& g,
                                  const SymplecticMatrix& s) {
  if (g.n_modes() != s.n_modes()) {
    throw ValidationError("apply_symplectic: mode count mismatch");
  }
  const MatrixXd& m = s.entries();
  MatrixXd out = m * g.gamma() * m.transpose();
  out = 0.5 * (out + out.transpose()).eval();
  return CovarianceMatrix(std::move(out));
}

CovarianceMatrix apply_loss(const CovarianceMatrix& g, int mode, double loss) {
  if (loss < 0.0 || loss > 1.0) {
    throw ValidationError("apply_loss: loss must lie in [0,1]");
  }
  if (mode < 0 || mode >= g.n_modes()) {
    throw ValidationError("apply_loss: mode index out of range");
  }
  const double scale = std::sqrt(1.0 - loss);
  MatrixXd out = g.gamma();
  out.row(2 * mode) *= scale;
  out.row(2 * mode + 1) *= scale;
  out.col(2 * mode) *= scale;
  out.col(2 * mode + 1) *= scale;
  out(2 * mode, 2 * mode) += loss;
  out(2 * mode + 1, 2 * mode + 1) += loss;
  return CovarianceMatrix(std::move(out));
}

std::vector<InputSpec> uniform_inputs(int n_modes, double squeezing_db,
                                      SqueezedQuadrature q) {
  return std::vector<InputSpec>(static_cast<std::size_t>(n_modes),
                                InputSpec{squeezing_db, q});
}

CovarianceMatrix simulate(const ControlTimeline& t,
                          const std::vector<InputSpec>& inputs,
                          const LossModel& lm) {
  t.validate();
  lm.validate();
  const int n = t.n_modes;
  if (static_cast<int>(inputs.size()) != n) {
    throw ValidationError("simulate: input count must match the timeline");
  }
  if (static_cast<int>(t.mode_trace.size()) != n) {
    throw ValidationError("simulate: timeline carries no mode_trace");
  }

  MatrixXd gamma_in = MatrixXd::Zero(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    gamma_in.block<2, 2>(2 * k, 2 * k) =
        squeezed_vacuum_cov(inputs[k].squeezing_db, inputs[k].quadrature)
            .gamma();
  }
  CovarianceMatrix state(std::move(gamma_in));

  for (int k = 0; k < n; ++k) {
    state = apply_loss(state, k, lm.source_detection_loss);
  }

  const MatrixXcd u_eff = effective_unitary(t);
  const SymplecticMatrix s =
      symplectic_from_unitary(UnitaryMatrix(u_eff, 1e-8));
  state = apply_symplectic(state, s);

  for (int k = 0; k < n; ++k) {
    const ModeItinerary& it = t.mode_trace[k];
    const double survival = std::pow(1.0 - lm.inner_trip_loss, it.inner_trips) *
                            std::pow(1.0 - lm.outer_trip_loss, it.outer_trips);
    state = apply_loss(state, k, 1.0 - survival);
  }

  if (!state.is_physical()) {
    throw NumericalError("simulate: output covariance lost physicality, "
                         "min eig(Gamma + i Omega) = " +
                         std::to_string(state.physicality_eig()));
  }
  return state;
}

}  // namespace tdlo
