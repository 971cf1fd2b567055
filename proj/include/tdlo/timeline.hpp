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

#ifndef TDLO_TIMELINE_HPP
#define TDLO_TIMELINE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tdlo/common.hpp"

namespace tdlo {

// Switch-1 selects what reaches the variable beam splitter in a bin: a fresh
// input pulse or the outer-loop return. Transmission from the loop side adds
// a 180-degree phase.
enum class Switch1 : std::uint8_t { Through, LoopSide };

// Switch-2 routes the pulse leaving the VBS region: back into the outer loop
// or out to the homodyne detector. Export adds a common 180-degree phase that
// is tracked as a global phase only.
enum class Switch2 : std::uint8_t { Keep, Export };

// Whether the final diagonal phases are applied physically by the VPS or
// absorbed into per-mode homodyne angle offsets.
enum class FinalPhaseMode : std::uint8_t { Vps, MeasurementBasis };

const char* to_string(Switch1 s);
const char* to_string(Switch2 s);
const char* to_string(FinalPhaseMode m);

// One pulse slot of duration tau. vbs_t is the power fraction exchanged
// between the inner loop and the external line (0 = bypass, 1 = full swap).
struct TimeBin {
  int index = 0;
  Switch1 switch1 = Switch1::Through;
  Switch2 switch2 = Switch2::Keep;
  double vbs_t = 0.0;
  double vps_theta = 0.0;
};

// Loss itinerary of one logical (output) mode: completed round trips in each
// loop.
struct ModeItinerary {
  int inner_trips = 0;
  int outer_trips = 0;

  bool operator==(const ModeItinerary&) const = default;
};

struct ControlTimeline {
  int n_modes = 0;
  double tau_ns = 66.0;
  std::vector<TimeBin> bins;
  FinalPhaseMode final_phase_mode = FinalPhaseMode::MeasurementBasis;
  // Per output mode, radians; all zero when final_phase_mode == Vps.
  std::vector<double> phase_offsets;
  // Per output mode loss itinerary used by the Gaussian simulator.
  std::vector<ModeItinerary> mode_trace;

  void validate() const;
  int outer_delay_bins() const { return n_modes - 1; }
};

struct RoundTripCounts {
  std::vector<ModeItinerary> per_mode;
};

/// Reads the per-mode trip counts off the timeline's mode_trace.
RoundTripCounts round_trip_counts(const ControlTimeline& t);

// Deterministic routing simulation of the switch/VBS settings, following
// carrier labels: full exchange (vbs_t = 1) swaps the labels between inner
// loop and external line, a bypass (vbs_t = 0) leaves them in place, and a
// partial interaction keeps the inner label inside. Returns the per-output
// itinerary; throws RoutingError on collisions or stranded carriers.
std::vector<ModeItinerary> derive_mode_trace(const ControlTimeline& t);

/// Timeline with every bin set to vbs_t = 0, Switch-2 export: input pulses
/// pass straight to the output port without entering either loop.
ControlTimeline bypass_timeline(int n_modes, double tau_ns = 66.0);

/// Human-readable control table (bin, time ns, switch1, switch2, vbs_T,
/// vps_theta).
std::string control_table(const ControlTimeline& t);

}  // namespace tdlo

#endif  // TDLO_TIMELINE_HPP
