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

#include "tdlo/presets.hpp"

#include <array>

#include "tdlo/schedule.hpp"

namespace tdlo {

const std::vector<PresetId>& all_presets() {
  static const std::vector<PresetId> ids = {
      PresetId::Op1,   PresetId::Op2i,  PresetId::Op2ii,
      PresetId::Op2iii, PresetId::Op3i, PresetId::Op3ii,
      PresetId::Op3iii, PresetId::Op4i, PresetId::Op4ii,
  };
  return ids;
}

const char* preset_name(PresetId id) {
  switch (id) {
    case PresetId::Op1: return "op1";
    case PresetId::Op2i: return "op2i";
    case PresetId::Op2ii: return "op2ii";
    case PresetId::Op2iii: return "op2iii";
    case PresetId::Op3i: return "op3i";
    case PresetId::Op3ii: return "op3ii";
    case PresetId::Op3iii: return "op3iii";
    case PresetId::Op4i: return "op4i";
    case PresetId::Op4ii: return "op4ii";
  }
  return "unknown";
}

PresetId parse_preset(const std::string& name) {
  for (PresetId id : all_presets()) {
    if (name == preset_name(id)) return id;
  }
  throw ValidationError("unknown preset '" + name + "'");
}

std::string preset_description(PresetId id) {
  switch (id) {
    case PresetId::Op1:
      return "Individual squeezed vacuum states (1~, 2~, 3~)";
    case PresetId::Op2i:
      return "EPR state (1~ and 3~), squeezed vacuum state (2~)";
    case PresetId::Op2ii:
      return "EPR state (2~ and 3~), squeezed vacuum state (1~)";
    case PresetId::Op2iii:
      return "EPR state (1~ and 2~), squeezed vacuum state (3~)";
    case PresetId::Op3i:
    case PresetId::Op3ii:
    case PresetId::Op3iii:
      return "GHZ state (1~, 2~, 3~)";
    case PresetId::Op4i:
      return "Triangle cluster state (1~, 2~, 3~)";
    case PresetId::Op4ii:
      return "Linear cluster state (1~, 2~, 3~)";
  }
  return {};
}

namespace {

QuadratureCombo combo(const std::vector<ComboTerm>& terms) {
  return make_combo(3, terms);
}

const QuadratureCombo& psum() {
  static const QuadratureCombo c =
      combo({{'p', 1, 1.0}, {'p', 2, 1.0}, {'p', 3, 1.0}});
  return c;
}

}  // namespace

std::vector<ComboPair> preset_combo_pairs(PresetId id) {
  switch (id) {
    case PresetId::Op1:
      return {};
    case PresetId::Op2i:
      return {{combo({{'x', 1, 1.0}, {'x', 3, -1.0}}),
               combo({{'p', 1, 1.0}, {'p', 3, 1.0}})}};
    case PresetId::Op2ii:
      return {{combo({{'x', 2, 1.0}, {'x', 3, -1.0}}),
               combo({{'p', 2, 1.0}, {'p', 3, 1.0}})}};
    case PresetId::Op2iii:
      return {{combo({{'x', 1, 1.0}, {'x', 2, -1.0}}),
               combo({{'p', 1, 1.0}, {'p', 2, 1.0}})}};
    case PresetId::Op3i:
    case PresetId::Op3ii:
    case PresetId::Op3iii:
      return {{combo({{'x', 1, 1.0}, {'x', 2, -1.0}}), psum()},
              {combo({{'x', 2, 1.0}, {'x', 3, -1.0}}), psum()}};
    case PresetId::Op4i:
      return {{combo({{'p', 1, 1.0}, {'x', 2, -1.0}, {'x', 3, -1.0}}),
               combo({{'p', 3, 1.0}, {'x', 1, -1.0}, {'x', 2, -1.0}})},
              {combo({{'p', 2, 1.0}, {'x', 1, -1.0}, {'x', 3, -1.0}}),
               combo({{'p', 3, 1.0}, {'x', 1, -1.0}, {'x', 2, -1.0}})}};
    case PresetId::Op4ii:
      return {{combo({{'p', 1, 1.0}, {'x', 3, -1.0}}),
               combo({{'p', 3, 1.0}, {'x', 1, -1.0}, {'x', 2, -1.0}})},
              {combo({{'p', 2, 1.0}, {'x', 3, -1.0}}),
               combo({{'p', 3, 1.0}, {'x', 1, -1.0}, {'x', 2, -1.0}})}};
  }
  return {};
}

std::vector<QuadratureCombo> preset_nullifiers(PresetId id) {
  switch (id) {
    case PresetId::Op1:
      return {};
    case PresetId::Op2i:
      return {combo({{'x', 1, 1.0}, {'x', 3, -1.0}}),
              combo({{'p', 1, 1.0}, {'p', 3, 1.0}})};
    case PresetId::Op2ii:
      return {combo({{'x', 2, 1.0}, {'x', 3, -1.0}}),
              combo({{'p', 2, 1.0}, {'p', 3, 1.0}})};
    case PresetId::Op2iii:
      return {combo({{'x', 1, 1.0}, {'x', 2, -1.0}}),
              combo({{'p', 1, 1.0}, {'p', 2, 1.0}})};
    case PresetId::Op3i:
    case PresetId::Op3ii:
    case PresetId::Op3iii:
      return {combo({{'x', 1, 1.0}, {'x', 2, -1.0}}),
              combo({{'x', 2, 1.0}, {'x', 3, -1.0}}), psum()};
    case PresetId::Op4i:
      return {combo({{'p', 1, 1.0}, {'x', 2, -1.0}, {'x', 3, -1.0}}),
              combo({{'p', 2, 1.0}, {'x', 1, -1.0}, {'x', 3, -1.0}}),
              combo({{'p', 3, 1.0}, {'x', 1, -1.0}, {'x', 2, -1.0}})};
    case PresetId::Op4ii:
      return {combo({{'p', 1, 1.0}, {'x', 3, -1.0}}),
              combo({{'p', 2, 1.0}, {'x', 3, -1.0}}),
              combo({{'p', 3, 1.0}, {'x', 1, -1.0}, {'x', 2, -1.0}})};
  }
  return {};
}

namespace {

DecompositionPlan plan3(const std::array<double, 2>& t1,
                        const std::array<double, 2>& t2,
                        const std::array<double, 2>& t3,
                        const std::array<double, 3>& alphas) {
  DecompositionPlan plan = DecompositionPlan::identity(3);
  plan.layers[0][0] = TParams{2, wrap_angle(t1[0]), wrap_angle(t1[1]), 1};
  plan.layers[0][1] = TParams{3, wrap_angle(t2[0]), wrap_angle(t2[1]), 1};
  plan.layers[1][0] = TParams{2, wrap_angle(t3[0]), wrap_angle(t3[1]), 2};
  plan.alphas = {wrap_angle(alphas[0]), wrap_angle(alphas[1]),
                 wrap_angle(alphas[2])};
  return plan;
}

constexpr double kHalfPi = kPi / 2.0;
// Exchange fractions 1/3 and 2/3 of the GHZ splitters.
const double kOmegaStayThird = std::atan2(1.0, std::sqrt(2.0));   // cos^2 = 2/3
const double kOmegaStayTwoThirds = std::atan2(std::sqrt(2.0), 1.0);  // cos^2 = 1/3

}  // namespace

DecompositionPlan preset_plan(PresetId id) {
  switch (id) {
    case PresetId::Op1:
      // All interactions off as full swaps: the rearrangement schedule with
      // the VBS exchanging everything at every bin.
      return DecompositionPlan::all_swap(3);
    case PresetId::Op2i:
      return plan3({kPi / 4, 3 * kHalfPi}, {0, 0}, {0, 0}, {0, kPi, kPi});
    case PresetId::Op2ii:
      return plan3({0, 0}, {0, 0}, {kPi / 4, kHalfPi},
                   {kHalfPi, 3 * kHalfPi, kPi});
    case PresetId::Op2iii:
      return plan3({0, 0}, {kPi / 4, kHalfPi}, {0, 0}, {kPi, kPi, 0});
    case PresetId::Op3i:
      return plan3({kOmegaStayThird, kHalfPi}, {kPi / 4, kHalfPi},
                   {kHalfPi, 0}, {3 * kHalfPi, kPi, kHalfPi});
    case PresetId::Op3ii:
      return plan3({kOmegaStayTwoThirds, kHalfPi}, {0, 0}, {kPi / 4, kHalfPi},
                   {0, 0, kPi});
    case PresetId::Op3iii:
      return plan3({kHalfPi, 0}, {kOmegaStayThird, kHalfPi},
                   {kPi / 4, kHalfPi}, {3 * kHalfPi, kHalfPi, kPi});
    case PresetId::Op4i:
      // Derived by nullifier-variance minimization (tools/derive_presets).
      return plan3({0.95531661812450919, 4.7123889803846897},
                   {0.78539816339744828, 1.5707963267948966},
                   {0.61547970867038726, 4.7123889803846897},
                   {4.7123889803846897, 3.1415926535897931,
                    1.5707963267948966});
    case PresetId::Op4ii:
      return plan3({0.95531661812450919, 4.7123889803846897},
                   {0.78539816339744828, 1.5707963267948966},
                   {0.61547970867038726, 4.7123889803846897},
                   {4.7123889803846897, 3.1415926535897931,
                    1.5707963267948966});
  }
  throw ValidationError("preset_plan: unknown preset");
}

ControlTimeline build_preset_backbone(const DecompositionPlan& plan3,
                                      double tau_ns) {
  plan3.validate();
  if (plan3.dim != 3) {
    throw ValidationError("build_preset_backbone: plan must be three-mode");
  }
  using Step = detail::ScheduleStep;
  const std::vector<Step> steps = {
      Step{Step::Kind::Load, 0, 0, Switch1::Through, Switch2::Keep},
      Step{Step::Kind::Interact, 1, 2, Switch1::Through, Switch2::Keep},
      Step{Step::Kind::Interact, 1, 3, Switch1::Through, Switch2::Export},
      Step{Step::Kind::Interact, 2, 2, Switch1::LoopSide, Switch2::Export},
      Step{Step::Kind::UnloadSwap, 0, 0, Switch1::LoopSide, Switch2::Export},
  };
  return detail::build_from_schedule(plan3, steps,
                                     /*apply_final_phases=*/false, tau_ns);
}

PresetTimeline preset_timeline(PresetId id, double tau_ns) {
  ControlTimeline t = build_preset_backbone(preset_plan(id), tau_ns);
  // The paper's loss accounting for these schedules: every output mode passes
  // the inner loop once; mode 1~ additionally takes one outer round trip.
  t.mode_trace = {ModeItinerary{1, 1}, ModeItinerary{1, 0},
                  ModeItinerary{1, 0}};
  return PresetTimeline{std::move(t), preset_description(id)};
}

InseparabilityReport inseparability(const CovarianceMatrix& g, PresetId id) {
  const auto pairs = preset_combo_pairs(id);
  if (pairs.empty()) {
    throw ValidationError("inseparability: preset has no combo pairs");
  }
  return evaluate_inseparability(g, pairs);
}

}  // namespace tdlo
