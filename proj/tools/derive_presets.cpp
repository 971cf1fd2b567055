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

// Derives the preset interaction parameters by nullifier-variance
// minimization and prints them next to the committed constants. The committed
// values in src/presets.cpp were produced by this tool (or verified against
// it for the analytic solutions).

#include <cstdio>
#include <functional>
#include <vector>

#include "tdlo/presets.hpp"

using namespace tdlo;

namespace {

constexpr double kDeriveDb = 40.0;  // sharp but well-conditioned objective

// Which of the three schedule interactions are free for each preset; the
// others stay fixed at the committed swap/identity structure.
struct FreeBins {
  bool t1 = false, t2 = false, t3 = false;
};

FreeBins free_bins(PresetId id) {
  switch (id) {
    case PresetId::Op1: return {};
    case PresetId::Op2i: return {true, false, false};
    case PresetId::Op2ii: return {false, false, true};
    case PresetId::Op2iii: return {false, true, false};
    case PresetId::Op3i: return {true, true, false};
    case PresetId::Op3ii: return {true, false, true};
    case PresetId::Op3iii: return {false, true, true};
    case PresetId::Op4i:
    case PresetId::Op4ii: return {true, true, true};
  }
  return {};
}

DecompositionPlan plan_from_params(PresetId id, const std::vector<double>& x) {
  DecompositionPlan plan = preset_plan(id);
  const FreeBins fb = free_bins(id);
  std::size_t i = 0;
  auto set = [&](TParams& p) {
    p.omega = wrap_angle(x[i++]);
    p.phi = wrap_angle(x[i++]);
  };
  if (fb.t1) set(plan.layers[0][0]);
  if (fb.t2) set(plan.layers[0][1]);
  if (fb.t3) set(plan.layers[1][0]);
  plan.alphas = {wrap_angle(x[i]), wrap_angle(x[i + 1]), wrap_angle(x[i + 2])};
  return plan;
}

double objective(PresetId id, const std::vector<double>& x) {
  try {
    const DecompositionPlan plan = plan_from_params(id, x);
    const ControlTimeline t = build_preset_backbone(plan);
    const CovarianceMatrix g =
        simulate(t, uniform_inputs(3, kDeriveDb), LossModel::lossless());
    double sum = 0.0;
    for (const QuadratureCombo& n : preset_nullifiers(id)) {
      sum += combo_variance(g, n);
    }
    return sum;
  } catch (const std::exception&) {
    return 1e9;
  }
}

std::vector<double> nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                std::vector<double> x0, double step,
                                int iters) {
  const std::size_t n = x0.size();
  std::vector<std::vector<double>> simplex(n + 1, x0);
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += step;
  std::vector<double> fv(n + 1);
  for (std::size_t i = 0; i <= n; ++i) fv[i] = f(simplex[i]);

  for (int it = 0; it < iters; ++it) {
    std::vector<std::size_t> order(n + 1);
    for (std::size_t i = 0; i <= n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    std::vector<std::vector<double>> sx(n + 1);
    std::vector<double> sf(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      sx[i] = simplex[order[i]];
      sf[i] = fv[order[i]];
    }
    simplex = sx;
    fv = sf;
    if (fv[n] - fv[0] < 1e-16) break;

    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[i][j] / n;
    }
    auto blend = [&](double c) {
      std::vector<double> x(n);
      for (std::size_t j = 0; j < n; ++j) {
        x[j] = centroid[j] + c * (simplex[n][j] - centroid[j]);
      }
      return x;
    };
    const auto xr = blend(-1.0);
    const double fr = f(xr);
    if (fr < fv[0]) {
      const auto xe = blend(-2.0);
      const double fe = f(xe);
      if (fe < fr) { simplex[n] = xe; fv[n] = fe; }
      else { simplex[n] = xr; fv[n] = fr; }
    } else if (fr < fv[n - 1]) {
      simplex[n] = xr; fv[n] = fr;
    } else {
      const auto xc = blend(0.5);
      const double fc = f(xc);
      if (fc < fv[n]) { simplex[n] = xc; fv[n] = fc; }
      else {
        for (std::size_t i = 1; i <= n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            simplex[i][j] = simplex[0][j] + 0.5 * (simplex[i][j] - simplex[0][j]);
          }
          fv[i] = f(simplex[i]);
        }
      }
    }
  }
  return simplex[0];
}

double nullifier_floor(PresetId id) {
  double floor = 0.0;
  for (const QuadratureCombo& n : preset_nullifiers(id)) {
    floor += n.coefficients.squaredNorm() * db_to_variance(kDeriveDb);
  }
  return floor;
}

void derive(PresetId id) {
  const FreeBins fb = free_bins(id);
  const int n_free = (fb.t1 ? 2 : 0) + (fb.t2 ? 2 : 0) + (fb.t3 ? 2 : 0) + 3;

  auto f = [&](const std::vector<double>& x) { return objective(id, x); };

  // Multi-start: committed constants plus a phase grid around pi/4 mixers.
  std::vector<std::vector<double>> starts;
  {
    const DecompositionPlan committed = preset_plan(id);
    std::vector<double> x0;
    auto push = [&](const TParams& p) {
      x0.push_back(p.omega);
      x0.push_back(p.phi);
    };
    if (fb.t1) push(committed.layers[0][0]);
    if (fb.t2) push(committed.layers[0][1]);
    if (fb.t3) push(committed.layers[1][0]);
    x0.insert(x0.end(), committed.alphas.begin(), committed.alphas.end());
    starts.push_back(x0);
  }
  for (double phi : {kPi / 2, 3 * kPi / 2, 0.0}) {
    std::vector<double> x;
    for (int b = 0; b < (n_free - 3) / 2; ++b) {
      x.push_back(kPi / 4 + 0.2 * b);
      x.push_back(phi);
    }
    x.insert(x.end(), {0.0, 0.0, 0.0});
    starts.push_back(x);
  }

  double best = 1e18;
  std::vector<double> best_x;
  for (const auto& s : starts) {
    auto x = nelder_mead(f, s, 0.3, 4000);
    x = nelder_mead(f, x, 0.02, 4000);
    const double v = f(x);
    if (v < best) {
      best = v;
      best_x = x;
    }
  }

  const DecompositionPlan plan = plan_from_params(id, best_x);
  std::printf("%s: objective %.3e (floor %.3e)\n", preset_name(id), best,
              nullifier_floor(id));
  for (int b = 0; b < 3; ++b) {
    const TParams& p = (b < 2) ? plan.layers[0][b] : plan.layers[1][0];
    std::printf("  T%d: omega %.17g phi %.17g   (vbs_T %.6f)\n", b + 1,
                p.omega, p.phi, std::cos(p.omega) * std::cos(p.omega));
  }
  std::printf("  alphas: %.17g %.17g %.17g\n", plan.alphas[0], plan.alphas[1],
              plan.alphas[2]);
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<PresetId> ids;
  if (argc > 1) {
    for (int i = 1; i < argc; ++i) ids.push_back(parse_preset(argv[i]));
  } else {
    for (PresetId id : all_presets()) {
      if (id != PresetId::Op1) ids.push_back(id);
    }
  }
  for (PresetId id : ids) derive(id);
  return 0;
}
