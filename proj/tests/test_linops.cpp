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

#include <doctest.h>

using namespace tdlo;

namespace {

MatrixXcd beam_splitter_50_50() {
  MatrixXcd m(2, 2);
  m << 1, 1, 1, -1;
  return m / std::sqrt(2.0);
}

}  // namespace

TEST_CASE("is_unitary basics") {
  CHECK(is_unitary(MatrixXcd::Identity(3, 3), 1e-10));
  MatrixXcd d = MatrixXcd::Zero(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = 2.0;
  CHECK_FALSE(is_unitary(d, 1e-10));
  CHECK(is_unitary(beam_splitter_50_50(), 1e-10));
  CHECK_THROWS_AS(is_unitary(MatrixXcd::Zero(2, 3), 1e-10), ValidationError);
}

TEST_CASE("symplectic form") {
  const MatrixXd o1 = symplectic_form(1);
  CHECK(o1(0, 1) == 1.0);
  CHECK(o1(1, 0) == -1.0);
  const MatrixXd o2 = symplectic_form(2);
  CHECK(o2.rows() == 4);
  CHECK((o2 * o2 + MatrixXd::Identity(4, 4)).norm() == doctest::Approx(0.0));
  CHECK_THROWS_AS(symplectic_form(0), ValidationError);
}

TEST_CASE("lift of the identity is the identity") {
  const SymplecticMatrix s =
      symplectic_from_unitary(UnitaryMatrix::identity(1));
  CHECK((s.entries() - MatrixXd::Identity(2, 2)).norm() < 1e-12);
}

TEST_CASE("lift of a single-mode phase rotates x into p") {
  // Brute-force check of the quadrature action x' = x cos - p sin,
  // p' = x sin + p cos.
  const double theta = 0.7341;
  MatrixXcd u(1, 1);
  u(0, 0) = std::polar(1.0, theta);
  const SymplecticMatrix s = symplectic_from_unitary(UnitaryMatrix(u));
  MatrixXd expected(2, 2);
  expected << std::cos(theta), -std::sin(theta), std::sin(theta),
      std::cos(theta);
  CHECK((s.entries() - expected).norm() < 1e-12);
}

TEST_CASE("lift of the 50:50 beam splitter mixes x and p blocks equally") {
  const SymplecticMatrix s =
      symplectic_from_unitary(UnitaryMatrix(beam_splitter_50_50()));
  const MatrixXd& m = s.entries();
  // Real beam splitter: x and p sectors transform by the same real matrix,
  // no x-p mixing.
  const double r = 1.0 / std::sqrt(2.0);
  for (int i : {0, 1}) {
    const int x1 = 0, p1 = 1, x2 = 2, p2 = 3;
    (void)i;
    CHECK(m(x1, p1) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(m(x1, p2) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(m(p1, x2) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(m(x1, x1) == doctest::Approx(r));
    CHECK(m(x1, x2) == doctest::Approx(r));
    CHECK(m(x2, x2) == doctest::Approx(-r));
    CHECK(m(p1, p1) == doctest::Approx(r));
    CHECK(m(p2, p2) == doctest::Approx(-r));
  }
}

TEST_CASE("random lifts are symplectic and orthogonal") {
  Rng rng(31001);
  for (int n = 2; n <= 6; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      const UnitaryMatrix u = random_unitary(n, rng);
      const SymplecticMatrix s = symplectic_from_unitary(u);
      const MatrixXd& m = s.entries();
      const MatrixXd omega = symplectic_form(n);
      CHECK((m * omega * m.transpose() - omega).norm() < 1e-10);
      CHECK((m.transpose() * m - MatrixXd::Identity(2 * n, 2 * n)).norm() <
            1e-10);
    }
  }
}

TEST_CASE("lift is functorial over products") {
  Rng rng(8122);
  for (int rep = 0; rep < 25; ++rep) {
    const int n = 2 + static_cast<int>(rng.next_u64() % 5);  // 2..6
    const UnitaryMatrix u1 = random_unitary(n, rng);
    const UnitaryMatrix u2 = random_unitary(n, rng);
    const UnitaryMatrix u12 = UnitaryMatrix(u1.entries() * u2.entries());
    const MatrixXd lhs = symplectic_from_unitary(u12).entries();
    const MatrixXd rhs = symplectic_from_unitary(u1).entries() *
                         symplectic_from_unitary(u2).entries();
    CHECK((lhs - rhs).norm() < 1e-9);
  }
}

TEST_CASE("lift of the conjugate equals conjugation by the p-flip") {
  Rng rng(5150);
  const UnitaryMatrix u = random_unitary(4, rng);
  const SymplecticMatrix s = symplectic_from_unitary(u);
  const SymplecticMatrix s_conj =
      symplectic_from_unitary(UnitaryMatrix(u.entries().conjugate()));
  MatrixXd flip = MatrixXd::Identity(8, 8);
  for (int k = 0; k < 4; ++k) flip(2 * k + 1, 2 * k + 1) = -1.0;
  CHECK((s_conj.entries() - flip * s.entries() * flip).norm() < 1e-10);
}

TEST_CASE("non-unitary input is rejected") {
  MatrixXcd bad = MatrixXcd::Identity(3, 3);
  bad(0, 0) = 1.5;
  CHECK_THROWS_AS(UnitaryMatrix{bad}, ValidationError);
}
