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

#include "tdlo/decomp.hpp"

namespace tdlo {

namespace {
constexpr double kDegenerate = 1e-14;
}

void DecompositionPlan::validate() const {
  if (dim < 1) {
    throw ValidationError("DecompositionPlan: dim must be positive");
  }
  if (static_cast<int>(layers.size()) != dim - 1) {
    throw ValidationError("DecompositionPlan: expected " +
                          std::to_string(dim - 1) + " layers, got " +
                          std::to_string(layers.size()));
  }
  for (int k = 1; k <= dim - 1; ++k) {
    const auto& layer = layers[k - 1];
    if (static_cast<int>(layer.size()) != dim - k) {
      throw ValidationError("DecompositionPlan: layer " + std::to_string(k) +
                            " must have " + std::to_string(dim - k) +
                            " entries");
    }
    for (int i = 0; i < static_cast<int>(layer.size()); ++i) {
      const TParams& p = layer[i];
      if (p.m != i + 2 || p.layer != k) {
        throw ValidationError("DecompositionPlan: layer " + std::to_string(k) +
                              " entry " + std::to_string(i) +
                              " has inconsistent indices");
      }
      if (p.omega < 0 || p.omega >= kTwoPi || p.phi < 0 || p.phi >= kTwoPi) {
        throw ValidationError(
            "DecompositionPlan: angles must lie in [0, 2*pi)");
      }
    }
  }
  if (static_cast<int>(alphas.size()) != dim) {
    throw ValidationError("DecompositionPlan: expected " +
                          std::to_string(dim) + " alphas");
  }
}

DecompositionPlan DecompositionPlan::identity(int dim) {
  DecompositionPlan plan;
  plan.dim = dim;
  plan.alphas.assign(dim, 0.0);
  for (int k = 1; k <= dim - 1; ++k) {
    std::vector<TParams> layer;
    for (int m = 2; m <= dim - k + 1; ++m) {
      layer.push_back(TParams{m, kPi / 2.0, 0.0, k});
    }
    plan.layers.push_back(std::move(layer));
  }
  return plan;
}

DecompositionPlan DecompositionPlan::all_swap(int dim) {
  DecompositionPlan plan = identity(dim);
  for (auto& layer : plan.layers) {
    for (auto& p : layer) p.omega = 0.0;
  }
  return plan;
}

int DecompositionPlan::t_count() const {
  int n = 0;
  for (const auto& layer : layers) n += static_cast<int>(layer.size());
  return n;
}

UnitaryMatrix t_matrix(int dim, const TParams& p) {
  if (p.m < 2 || p.m > dim) {
    throw ValidationError("t_matrix: mode index m out of range");
  }
  const double s = std::sin(p.omega);
  const double c = std::cos(p.omega);
  const complexd e = std::polar(1.0, p.phi);
  MatrixXcd t = MatrixXcd::Identity(dim, dim);
  const int l = 0;
  const int m = p.m - 1;
  t(l, l) = e * s;
  t(l, m) = -e * c;
  t(m, l) = c;
  t(m, m) = s;
  return UnitaryMatrix(std::move(t));
}

namespace {

// Right-multiplies U by T_{1,m}(omega, phi) in place; only columns 1 and m
// change.
void apply_t_inplace(MatrixXcd& u, const TParams& p) {
  const double s = std::sin(p.omega);
  const double c = std::cos(p.omega);
  const complexd e = std::polar(1.0, p.phi);
  const int m = p.m - 1;
  const VectorXcd col0 = u.col(0);
  const VectorXcd colm = u.col(m);
  u.col(0) = col0 * (e * s) + colm * c;
  u.col(m) = col0 * (-e * c) + colm * s;
}

// Solves T_{1,m} nulling the working row's element in column m against the
// accumulator in column 1 (layers' bulk case, m < r).
TParams solve_bulk(const complexd a, const complexd b, int m, int layer) {
  TParams p{m, kPi / 2.0, 0.0, layer};
  if (std::abs(b) <= kDegenerate) {
    return p;  // already null; identity keeps the accumulator intact
  }
  if (std::abs(a) <= kDegenerate) {
    p.omega = 0.0;  // pure swap moves the element into column 1
    return p;
  }
  p.omega = wrap_angle(std::atan2(std::abs(a), std::abs(b)));
  p.phi = wrap_angle(std::arg(b) - std::arg(a));
  return p;
}

// Solves the layer's final T_{1,r} folding the column-1 accumulator into the
// diagonal element (r,r).
TParams solve_final(const complexd a, const complexd d, int m, int layer) {
  TParams p{m, kPi / 2.0, 0.0, layer};
  if (std::abs(a) <= kDegenerate) {
    return p;  // nothing left to null
  }
  if (std::abs(d) <= kDegenerate) {
    p.omega = 0.0;
    return p;
  }
  p.omega = wrap_angle(std::atan2(std::abs(d), std::abs(a)));
  p.phi = wrap_angle(std::arg(d) - std::arg(a) + kPi);
  return p;
}

}  // namespace

ReduceStepResult reduce_step(const UnitaryMatrix& u) {
  const int n = u.dim();
  if (n < 2) {
    throw ValidationError("reduce_step: need dim >= 2");
  }
  MatrixXcd work = u.entries();
  const int r = n - 1;  // target row (0-based)

  ReduceStepResult result;
  for (int m = 2; m <= n - 1; ++m) {
    const TParams p = solve_bulk(work(r, 0), work(r, m - 1), m, 1);
    apply_t_inplace(work, p);
    result.params.push_back(p);
  }
  {
    const TParams p = solve_final(work(r, 0), work(r, n - 1), n, 1);
    apply_t_inplace(work, p);
    result.params.push_back(p);
  }

  double off = 0.0;
  for (int j = 0; j < n - 1; ++j) off = std::max(off, std::abs(work(r, j)));
  for (int i = 0; i < n - 1; ++i) off = std::max(off, std::abs(work(i, r)));
  if (off > 1e-10 || std::abs(std::abs(work(r, r)) - 1.0) > 1e-8) {
    throw NumericalError("reduce_step: nulling left residual " +
                         std::to_string(off));
  }

  result.alpha = std::arg(work(r, r));
  result.reduced = work.topLeftCorner(n - 1, n - 1);
  const MatrixXcd residual =
      result.reduced * result.reduced.adjoint() -
      MatrixXcd::Identity(n - 1, n - 1);
  if (residual.norm() > 1e-8) {
    throw NumericalError("reduce_step: reduced block lost unitarity");
  }
  return result;
}

DecompositionPlan decompose(const UnitaryMatrix& u) {
  const int n = u.dim();
  DecompositionPlan plan;
  plan.dim = n;
  plan.alphas.assign(n, 0.0);
  plan.layers.resize(std::max(0, n - 1));

  MatrixXcd work = u.entries();
  for (int k = 1; k <= n - 1; ++k) {
    const ReduceStepResult step = reduce_step(UnitaryMatrix(work, 1e-8));
    auto params = step.params;
    for (auto& p : params) p.layer = k;
    plan.layers[k - 1] = std::move(params);
    plan.alphas[n - k] = step.alpha;
    work = step.reduced;
  }
  plan.alphas[0] = std::arg(work(0, 0));
  plan.validate();
  return plan;
}

UnitaryMatrix reconstruct(const DecompositionPlan& plan) {
  plan.validate();
  const int n = plan.dim;
  MatrixXcd u = MatrixXcd::Zero(n, n);
  for (int j = 0; j < n; ++j) u(j, j) = std::polar(1.0, plan.alphas[j]);

  // U = D (T^{(N-1)}_{1,2})^-1 ... (T^{(1)}_{1,N})^-1 ... (T^{(1)}_{1,2})^-1,
  // accumulated right-to-left; each inverse equals the conjugate transpose
  // and touches only columns 1 and m.
  for (int k = n - 1; k >= 1; --k) {
    const auto& layer = plan.layers[k - 1];
    for (int i = static_cast<int>(layer.size()) - 1; i >= 0; --i) {
      const TParams& p = layer[i];
      const double s = std::sin(p.omega);
      const double c = std::cos(p.omega);
      const complexd em = std::polar(1.0, -p.phi);
      const int m = p.m - 1;
      const VectorXcd col0 = u.col(0);
      const VectorXcd colm = u.col(m);
      u.col(0) = em * (s * col0 - c * colm);
      u.col(m) = c * col0 + s * colm;
    }
  }
  return UnitaryMatrix(std::move(u), 1e-8);
}

}  // namespace tdlo
