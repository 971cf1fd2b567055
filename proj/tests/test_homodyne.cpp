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

#include "tdlo/homodyne.hpp"

#include <doctest.h>

#include "tdlo/presets.hpp"

using namespace tdlo;

TEST_CASE("mode function is odd, windowed and normalized") {
  const ModeFunction f;
  const double t1 = f.center(1);
  CHECK(f.value(t1, 1) == 0.0);
  for (double s : {1.0, 5.5, 11.0, 22.9}) {
    CHECK(f.value(t1 + s, 1) == doctest::Approx(-f.value(t1 - s, 1)));
  }
  // Compact support on 2|t - t_k| <= delta_t.
  CHECK(f.value(t1 + 23.01, 1) == 0.0);
  CHECK(f.value(t1 - 23.01, 1) == 0.0);
  CHECK(f.value(t1 + 22.99, 1) != 0.0);
  // Discrete normalization at 1 ns sampling.
  CHECK(f.discrete_norm(1.0) == doctest::Approx(1.0).epsilon(1e-9));
  // Centers are spaced by tau.
  CHECK(f.center(3) - f.center(2) == doctest::Approx(66.0));
}

TEST_CASE("basis projection selects rotated quadratures") {
  const MatrixXd b = basis_projection({90.0, 0.0, 45.0}, 3);
  CHECK(b(0, 0) == doctest::Approx(0.0));
  CHECK(b(0, 1) == doctest::Approx(1.0));
  CHECK(b(1, 2) == doctest::Approx(1.0));
  CHECK(b(2, 4) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(b(2, 5) == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("the five bases match the measurement protocol") {
  const auto& bases = measurement_bases();
  CHECK(bases[0].angles_deg == std::vector<double>{90, 0, 0});
  CHECK(bases[1].angles_deg == std::vector<double>{0, 90, 0});
  CHECK(bases[2].angles_deg == std::vector<double>{0, 0, 90});
  CHECK(bases[3].angles_deg == std::vector<double>{90, 90, 90});
  CHECK(bases[4].angles_deg == std::vector<double>{45, 45, 45});
}

TEST_CASE("sampling the vacuum gives unit variances") {
  const CovarianceMatrix vac = CovarianceMatrix::vacuum(3);
  const int n = 100000;
  const MatrixXd samples =
      sample_quadratures(vac, {90.0, 0.0, 0.0}, n, 42);
  REQUIRE(samples.rows() == n);
  for (int c = 0; c < 3; ++c) {
    const double mean = samples.col(c).mean();
    const double var =
        (samples.col(c).array() - mean).square().sum() / (n - 1);
    CHECK(var == doctest::Approx(1.0).epsilon(0.02));
  }
}

TEST_CASE("sampling a squeezed state reproduces the marginal") {
  const CovarianceMatrix g =
      squeezed_vacuum_cov(7.4, SqueezedQuadrature::P)
          .tensor(CovarianceMatrix::vacuum(2));
  const int n = 200000;
  const MatrixXd samples = sample_quadratures(g, {90.0, 0.0, 0.0}, n, 7);
  const double mean = samples.col(0).mean();
  const double var =
      (samples.col(0).array() - mean).square().sum() / (n - 1);
  const double expected = db_to_variance(7.4);
  CHECK(var == doctest::Approx(expected).epsilon(3.0 * std::sqrt(2.0 / n)));
}

TEST_CASE("fixed seeds reproduce bit-identical samples") {
  const CovarianceMatrix vac = CovarianceMatrix::vacuum(3);
  const MatrixXd a = sample_quadratures(vac, {0, 0, 0}, 64, 123);
  const MatrixXd b = sample_quadratures(vac, {0, 0, 0}, 64, 123);
  CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);
  const MatrixXd c = sample_quadratures(vac, {0, 0, 0}, 64, 124);
  CHECK((a - c).cwiseAbs().maxCoeff() > 0.0);
}

TEST_CASE("exact population moments reconstruct the covariance exactly") {
  const PresetTimeline pt = preset_timeline(PresetId::Op3i);
  const CovarianceMatrix truth =
      simulate(pt.timeline, uniform_inputs(3, 7.4), LossModel::paper());
  std::array<MatrixXd, 5> moments;
  const auto& bases = measurement_bases();
  for (std::size_t i = 0; i < bases.size(); ++i) {
    const MatrixXd b = basis_projection(bases[i].angles_deg, 3);
    moments[i] = b * truth.gamma() * b.transpose();
  }
  const CovarianceMatrix rebuilt = estimate_from_moments(moments);
  CHECK((rebuilt.gamma() - truth.gamma()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("every basis is load-bearing in the reconstruction") {
  // Poisoning any single basis with NaN must leave at least one element
  // undetermined.
  const CovarianceMatrix truth = CovarianceMatrix::vacuum(3);
  const auto& bases = measurement_bases();
  for (std::size_t poisoned = 0; poisoned < bases.size(); ++poisoned) {
    std::array<MatrixXd, 5> moments;
    for (std::size_t i = 0; i < bases.size(); ++i) {
      const MatrixXd b = basis_projection(bases[i].angles_deg, 3);
      moments[i] = b * truth.gamma() * b.transpose();
    }
    moments[poisoned].setConstant(std::nan(""));
    bool has_nan = false;
    try {
      const CovarianceMatrix rebuilt = estimate_from_moments(moments);
      has_nan = rebuilt.gamma().hasNaN();
    } catch (const ValidationError&) {
      has_nan = true;  // symmetry check rejects the NaN matrix
    }
    CHECK(has_nan);
  }
}

TEST_CASE("estimate from samples approaches the truth") {
  const PresetTimeline pt = preset_timeline(PresetId::Op3i);
  const CovarianceMatrix truth =
      simulate(pt.timeline, uniform_inputs(3, 7.4), LossModel::paper());
  const auto sets = sample_all_bases(truth, 5000, 2026);
  const CovarianceMatrix est = estimate_covariance(sets);
  CHECK((est.gamma() - truth.gamma()).cwiseAbs().maxCoeff() < 0.15);
}

TEST_CASE("vacuum samples reconstruct near the identity") {
  const CovarianceMatrix vac = CovarianceMatrix::vacuum(3);
  const auto sets = sample_all_bases(vac, 5000, 99);
  const CovarianceMatrix est = estimate_covariance(sets);
  CHECK((est.gamma() - MatrixXd::Identity(6, 6)).cwiseAbs().maxCoeff() < 0.1);
}

TEST_CASE("estimator rejects malformed input") {
  const CovarianceMatrix vac = CovarianceMatrix::vacuum(3);
  auto sets = sample_all_bases(vac, 16, 5);
  sets[2].label = "bogus";
  CHECK_THROWS_AS(estimate_covariance(sets), ValidationError);

  auto tiny = sample_all_bases(vac, 16, 5);
  tiny[0].samples = tiny[0].samples.topRows(1);
  CHECK_THROWS_AS(estimate_covariance(tiny), ValidationError);
}
