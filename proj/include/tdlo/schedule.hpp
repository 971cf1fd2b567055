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

#ifndef TDLO_SCHEDULE_HPP
#define TDLO_SCHEDULE_HPP

#include <vector>

#include "tdlo/decomp.hpp"
#include "tdlo/timeline.hpp"

namespace tdlo::detail {

// One bin of an abstract loop schedule. The builder solves VBS/VPS settings
// against the plan's T parameters while tracking the accumulated element
// phases (Switch-1 transmissions, T < 0.5 flips, unload reflections), so the
// emitted timeline realizes the plan's unitary exactly.
struct ScheduleStep {
  enum class Kind { Load, Interact, Skip, UnloadSwap };
  Kind kind;
  int layer = 0;  // Interact: layer k
  int m = 0;      // Interact/Skip: partner slot; UnloadSwap: arriving slot,
                  // 0 for vacuum
  Switch1 sw1 = Switch1::Through;
  Switch2 sw2 = Switch2::Keep;
};

ControlTimeline build_from_schedule(const DecompositionPlan& plan,
                                    const std::vector<ScheduleStep>& steps,
                                    bool apply_final_phases, double tau_ns);

}  // namespace tdlo::detail

#endif  // TDLO_SCHEDULE_HPP
