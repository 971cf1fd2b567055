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

#ifndef TDLO_COMPILER_HPP
#define TDLO_COMPILER_HPP

#include "tdlo/decomp.hpp"
#include "tdlo/timeline.hpp"

namespace tdlo {

// Compiles a decomposition plan onto the dual loop. Mode 1 is loaded into the
// inner loop; modes 2..N circulate the outer loop (round trip (N-1) tau) and
// meet the inner mode at the VBS once per circuit. At layer k the bin for
// partner m realizes (T^(k)_{1,m})^-1 with exchange fraction cos^2(omega) and
// one VPS setting; structurally absent partners pass on vbs_T = 0 bins. The
// unload stage exports the logical modes in order through full-swap bins.
//
// With apply_final_phases the diagonal D is realized by the VPS during the
// unload swaps; otherwise the exported modes keep their raw phases and the
// compensating per-mode homodyne offsets are recorded on the timeline
// (final_phase_mode = measurement_basis).
ControlTimeline compile(const DecompositionPlan& plan,
                        bool apply_final_phases = false,
                        double tau_ns = 66.0);

struct TimelineUnitary {
  MatrixXcd u;          // raw circuit matrix, outputs (export order) x inputs
  double global_phase;  // Switch-2's common output phase
};

// Independent verifier: composes the timeline bin by bin from the physical
// element conventions (VBS exchange matrix with the phase-inverting side
// flipped for T < 0.5, VPS phase on the inner mode, Switch-1's 180 degrees on
// loop-side transmission) and returns the realized input->output matrix.
// Switch-2's common 180-degree export phase is reported in global_phase, not
// folded into the matrix. Throws RoutingError for stranded or colliding
// modes.
TimelineUnitary timeline_to_unitary(const ControlTimeline& t);

/// Verifier matrix with the timeline's measurement-basis offsets applied,
/// i.e. the operation seen in the shifted homodyne frame.
MatrixXcd effective_unitary(const ControlTimeline& t);

/// Largest modulus deviation between the timeline's effective unitary and the
/// target, after removing the optimal global phase.
double deviation_up_to_global_phase(const MatrixXcd& a, const MatrixXcd& b);

}  // namespace tdlo

#endif  // TDLO_COMPILER_HPP
