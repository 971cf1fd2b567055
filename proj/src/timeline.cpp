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

#include "tdlo/timeline.hpp"

#include <deque>
#include <optional>
#include <sstream>

#include <iomanip>

namespace tdlo {

const char* to_string(Switch1 s) {
  return s == Switch1::Through ? "through" : "loop_side";
}

const char* to_string(Switch2 s) {
  return s == Switch2::Keep ? "keep" : "export";
}

const char* to_string(FinalPhaseMode m) {
  return m == FinalPhaseMode::Vps ? "vps" : "measurement_basis";
}

void ControlTimeline::validate() const {
  if (n_modes < 1) {
    throw ValidationError("ControlTimeline: n_modes must be positive");
  }
  if (tau_ns <= 0) {
    throw ValidationError("ControlTimeline: tau_ns must be positive");
  }
  for (std::size_t i = 0; i < bins.size(); ++i) {
    const TimeBin& b = bins[i];
    if (b.index != static_cast<int>(i)) {
      throw ValidationError("ControlTimeline: bin indices must be 0,1,2,...");
    }
    if (b.vbs_t < 0.0 || b.vbs_t > 1.0) {
      throw ValidationError("ControlTimeline: vbs_T out of [0,1] at bin " +
                            std::to_string(i));
    }
    if (b.vps_theta < 0.0 || b.vps_theta >= kTwoPi) {
      throw ValidationError(
          "ControlTimeline: vps_theta out of [0,2*pi) at bin " +
          std::to_string(i));
    }
  }
  if (!phase_offsets.empty() &&
      static_cast<int>(phase_offsets.size()) != n_modes) {
    throw ValidationError("ControlTimeline: phase_offsets size mismatch");
  }
  if (!mode_trace.empty() && static_cast<int>(mode_trace.size()) != n_modes) {
    throw ValidationError("ControlTimeline: mode_trace size mismatch");
  }
  for (const ModeItinerary& it : mode_trace) {
    if (it.inner_trips < 0 || it.outer_trips < 0) {
      throw ValidationError("ControlTimeline: negative trip count");
    }
  }
}

RoundTripCounts round_trip_counts(const ControlTimeline& t) {
  t.validate();
  if (static_cast<int>(t.mode_trace.size()) != t.n_modes) {
    throw ValidationError("round_trip_counts: timeline carries no mode_trace");
  }
  return RoundTripCounts{t.mode_trace};
}

namespace {

struct Carrier {
  int pulse = -1;  // -1 marks vacuum
  int inner_trips = 0;
  int outer_trips = 0;
};

constexpr double kSwapTol = 1e-12;

}  // namespace

std::vector<ModeItinerary> derive_mode_trace(const ControlTimeline& t) {
  t.validate();
  const int n = t.n_modes;
  const int delay = t.outer_delay_bins();

  Carrier inner;  // vacuum
  std::deque<std::pair<int, Carrier>> ring;  // (arrival bin, carrier)
  std::vector<ModeItinerary> out;
  int next_input = 0;

  for (const TimeBin& bin : t.bins) {
    Carrier ext;  // vacuum by default
    const bool ring_due = !ring.empty() && ring.front().first == bin.index;
    if (bin.switch1 == Switch1::Through) {
      if (ring_due && ring.front().second.pulse >= 0) {
        throw RoutingError("derive_mode_trace: outer-loop return collides "
                           "with input at bin " + std::to_string(bin.index));
      }
      if (ring_due) ring.pop_front();
      if (next_input < n) ext = Carrier{next_input++, 0, 0};
    } else {
      if (ring_due) {
        ext = ring.front().second;
        ring.pop_front();
      }
    }

    // Label routing at the VBS.
    Carrier departing;
    if (bin.vbs_t >= 1.0 - kSwapTol) {
      departing = inner;
      inner = ext;
    } else if (bin.vbs_t <= kSwapTol) {
      departing = ext;
    } else {
      // Partial interaction: the inner loop keeps its carrier, the external
      // line's carrier departs.
      departing = ext;
    }
    if (inner.pulse >= 0) inner.inner_trips += 1;

    if (bin.switch2 == Switch2::Export) {
      if (departing.pulse >= 0) {
        out.push_back(ModeItinerary{departing.inner_trips,
                                    departing.outer_trips});
      }
    } else if (departing.pulse >= 0) {
      departing.outer_trips += 1;
      ring.emplace_back(bin.index + delay, departing);
    }
  }

  if (inner.pulse >= 0) {
    throw RoutingError("derive_mode_trace: a mode is stranded in the inner "
                       "loop after the last bin");
  }
  for (const auto& [when, carrier] : ring) {
    if (carrier.pulse >= 0) {
      throw RoutingError("derive_mode_trace: a mode is stranded in the outer "
                         "loop after the last bin");
    }
  }
  if (static_cast<int>(out.size()) != n || next_input != n) {
    throw RoutingError("derive_mode_trace: expected every logical mode to be "
                       "exported exactly once");
  }
  return out;
}

ControlTimeline bypass_timeline(int n_modes, double tau_ns) {
  if (n_modes < 1) {
    throw ValidationError("bypass_timeline: n_modes must be positive");
  }
  ControlTimeline t;
  t.n_modes = n_modes;
  t.tau_ns = tau_ns;
  t.final_phase_mode = FinalPhaseMode::MeasurementBasis;
  t.phase_offsets.assign(n_modes, 0.0);
  for (int i = 0; i < n_modes; ++i) {
    t.bins.push_back(TimeBin{i, Switch1::Through, Switch2::Export, 0.0, 0.0});
  }
  t.mode_trace = derive_mode_trace(t);
  return t;
}

std::string control_table(const ControlTimeline& t) {
  std::ostringstream os;
  os << "bin  time_ns  switch1    switch2  vbs_T    vps_theta\n";
  for (const TimeBin& b : t.bins) {
    os << std::left << std::setw(5) << b.index << std::setw(9) << std::fixed
       << std::setprecision(1) << (b.index * t.tau_ns) << std::setw(11)
       << to_string(b.switch1) << std::setw(9) << to_string(b.switch2)
       << std::setw(9) << std::setprecision(4) << b.vbs_t
       << std::setprecision(6) << b.vps_theta << "\n";
  }
  return os.str();
}

}  // namespace tdlo
