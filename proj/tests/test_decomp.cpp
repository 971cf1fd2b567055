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

#include <doctest.h>

using namespace tdlo;

TEST_CASE("t_matrix special values") {
  // omega = pi/2 gives the identity.
  const UnitaryMatrix id = t_matrix(3, TParams{2, kPi / 2, 0.0, 1});
  CHECK((id.entries() - MatrixXcd::Identity(3, 3)).norm() < 1e-15);

  // omega = 0 is the swap with a sign.
  const UnitaryMatrix swap = t_matrix(2, TParams{2, 0.0, 0.0, 1});
  CHECK(std::abs(swap(0, 0)) < 1e-15);
  CHECK(std::abs(swap(0, 1) - complexd(-1, 0)) < 1e-15);
  CHECK(std::abs(swap(1, 0) - complexd(1, 0)) < 1e-15);
  CHECK(std::abs(swap(1, 1)) < 1e-15);

  // Direct substitution at omega = pi/4, phi = pi/2.
  const UnitaryMatrix t = t_matrix(2, TParams{2, kPi / 4, kPi / 2, 1});
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(t(0, 0) - complexd(0, r)) < 1e-15);
  CHECK(std::abs(t(0, 1) - complexd(0, -r)) < 1e-15);
  CHECK(std::abs(t(1, 0) - complexd(r, 0)) < 1e-15);
  CHECK(std::abs(t(1, 1) - complexd(r, 0)) < 1e-15);

  CHECK_THROWS_AS(t_matrix(2, TParams{3, 0.0, 0.0, 1}), ValidationError);
}

TEST_CASE("reduce_step leaves identities on the identity") {
  const ReduceStepResult r = reduce_step(UnitaryMatrix::identity(3));
  for (const TParams& p : r.params) {
    CHECK(p.omega == doctest::Approx(kPi / 2));
    CHECK(p.phi == doctest::Approx(0.0));
  }
  CHECK(r.alpha == doctest::Approx(0.0));
  CHECK((r.reduced - MatrixXcd::Identity(2, 2)).norm() < 1e-12);
}

TEST_CASE("reduce_step on an already block-diagonal matrix") {
  const double beta = 1.234;
  MatrixXcd u = MatrixXcd::Identity(3, 3);
  u(2, 2) = std::polar(1.0, beta);
  const ReduceStepResult r = reduce_step(UnitaryMatrix(u));
  for (const TParams& p : r.params) {
    CHECK(p.omega == doctest::Approx(kPi / 2));
    CHECK(p.phi == doctest::Approx(0.0));
  }
  CHECK(r.alpha == doctest::Approx(beta));
}

TEST_CASE("reduce_step nulls the last row and column of random unitaries") {
  Rng rng(999);
  for (int rep = 0; rep < 50; ++rep) {
    const UnitaryMatrix u = random_unitary(3, rng);
    const ReduceStepResult r = reduce_step(u);
    // Brute-force product check.
    MatrixXcd prod = u.entries();
    for (const TParams& p : r.params) {
      prod = prod * t_matrix(3, p).entries();
    }
    MatrixXcd expected = MatrixXcd::Zero(3, 3);
    expected.topLeftCorner(2, 2) = r.reduced;
    expected(2, 2) = std::polar(1.0, r.alpha);
    CHECK((prod - expected).norm() < 1e-10);
  }
}

TEST_CASE("decompose layer structure") {
  Rng rng(4242);
  const UnitaryMatrix u = random_unitary(5, rng);
  const DecompositionPlan plan = decompose(u);
  REQUIRE(plan.layers.size() == 4);
  CHECK(plan.t_count() == 10);
  for (int k = 1; k <= 4; ++k) {
    const auto& layer = plan.layers[k - 1];
    REQUIRE(static_cast<int>(layer.size()) == 5 - k);
    for (std::size_t i = 0; i < layer.size(); ++i) {
      CHECK(layer[i].m == static_cast<int>(i) + 2);
      CHECK(layer[i].layer == k);
      CHECK(layer[i].omega >= 0.0);
      CHECK(layer[i].omega < kTwoPi);
      CHECK(layer[i].phi >= 0.0);
      CHECK(layer[i].phi < kTwoPi);
    }
  }
}

TEST_CASE("identity decomposes to identity T's and zero alphas") {
  const DecompositionPlan plan = decompose(UnitaryMatrix::identity(4));
  for (const auto& layer : plan.layers) {
    for (const TParams& p : layer) {
      CHECK(p.omega == doctest::Approx(kPi / 2));
      CHECK(p.phi == doctest::Approx(0.0));
    }
  }
  for (double a : plan.alphas) CHECK(a == doctest::Approx(0.0));
  const UnitaryMatrix rebuilt = reconstruct(plan);
  CHECK((rebuilt.entries() - MatrixXcd::Identity(4, 4)).norm() < 1e-12);
}

TEST_CASE("embedded beam splitter touches only layer 1, m = 2") {
  MatrixXcd u = MatrixXcd::Identity(3, 3);
  const double r = 1.0 / std::sqrt(2.0);
  u(0, 0) = r;
  u(0, 1) = r;
  u(1, 0) = r;
  u(1, 1) = -r;
  const DecompositionPlan plan = decompose(UnitaryMatrix(u));
  const UnitaryMatrix rebuilt = reconstruct(plan);
  CHECK((rebuilt.entries() - u).norm() < 1e-10);
  // Only the (layer 1, m = 2) parameters may differ from an identity T.
  int non_identity = 0;
  for (const auto& layer : plan.layers) {
    for (const TParams& p : layer) {
      const UnitaryMatrix t = t_matrix(3, p);
      if ((t.entries() - MatrixXcd::Identity(3, 3)).norm() > 1e-9) {
        ++non_identity;
        CHECK(p.layer == 1);
        CHECK(p.m == 2);
      }
    }
  }
  CHECK(non_identity == 1);
}

TEST_CASE("reconstruction of a phases-only plan is the diagonal") {
  DecompositionPlan plan = DecompositionPlan::identity(3);
  plan.alphas = {0.3, 1.1, 5.2};
  const UnitaryMatrix u = reconstruct(plan);
  for (int j = 0; j < 3; ++j) {
    CHECK(std::abs(u(j, j) - std::polar(1.0, plan.alphas[j])) < 1e-12);
  }
}

TEST_CASE("round trip over random unitaries") {
  Rng rng(20260809);
  double worst = 0.0;
  for (int n = 2; n <= 8; ++n) {
    for (int rep = 0; rep < 25; ++rep) {
      const UnitaryMatrix u = random_unitary(n, rng);
      const DecompositionPlan plan = decompose(u);
      const UnitaryMatrix rebuilt = reconstruct(plan);
      worst = std::max(worst, (rebuilt.entries() - u.entries()).norm());
    }
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("determinant bookkeeping") {
  Rng rng(77);
  for (int rep = 0; rep < 10; ++rep) {
    const UnitaryMatrix u = random_unitary(4, rng);
    const DecompositionPlan plan = decompose(u);
    complexd det_product(1.0, 0.0);
    for (double a : plan.alphas) det_product *= std::polar(1.0, a);
    for (const auto& layer : plan.layers) {
      for (const TParams& p : layer) {
        // det T = e^{i phi}; the inverse contributes e^{-i phi}.
        det_product *= std::polar(1.0, -p.phi);
      }
    }
    CHECK(std::abs(det_product - u.entries().determinant()) < 1e-9);
  }
}

TEST_CASE("every T in a plan is unitary and inverse equals adjoint") {
  Rng rng(31);
  const UnitaryMatrix u = random_unitary(4, rng);
  const DecompositionPlan plan = decompose(u);
  for (const auto& layer : plan.layers) {
    for (const TParams& p : layer) {
      const MatrixXcd t = t_matrix(4, p).entries();
      CHECK((t * t.adjoint() - MatrixXcd::Identity(4, 4)).norm() < 1e-12);
      CHECK((t.inverse() - t.adjoint()).norm() < 1e-12);
    }
  }
}

TEST_CASE("non-unitary input is rejected") {
  MatrixXcd bad = 1.2 * MatrixXcd::Identity(3, 3);
  CHECK_THROWS_AS(decompose(UnitaryMatrix(bad)), ValidationError);
}
