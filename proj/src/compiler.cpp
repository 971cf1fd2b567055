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

#include "tdlo/compiler.hpp"

#include <deque>

#include "tdlo/schedule.hpp"

namespace tdlo {

namespace detail {

ControlTimeline build_from_schedule(const DecompositionPlan& plan,
                                    const std::vector<ScheduleStep>& steps,
                                    bool apply_final_phases, double tau_ns) {
  plan.validate();
  const int n = plan.dim;

  ControlTimeline t;
  t.n_modes = n;
  t.tau_ns = tau_ns;
  t.final_phase_mode = apply_final_phases ? FinalPhaseMode::Vps
                                          : FinalPhaseMode::MeasurementBasis;
  t.phase_offsets.assign(n, 0.0);

  // Tracked phases: the physical amplitude at a location equals
  // e^{i psi} times the logical-mode amplitude the bookkeeping assigns there.
  double psi_inner = 0.0;
  std::vector<double> psi_slot(n + 1, 0.0);  // outer slots, indexed by m
  int inner_logical = 0;                     // 0 = vacuum
  int exports = 0;

  for (std::size_t i = 0; i < steps.size(); ++i) {
    const ScheduleStep& step = steps[i];
    TimeBin bin;
    bin.index = static_cast<int>(i);
    bin.switch1 = step.sw1;
    bin.switch2 = step.sw2;

    switch (step.kind) {
      case ScheduleStep::Kind::Load: {
        bin.vbs_t = 1.0;
        bin.vps_theta = 0.0;
        psi_inner = 0.0;
        inner_logical = 1;
        break;
      }
      case ScheduleStep::Kind::Interact: {
        const TParams& p = plan.layers[step.layer - 1][step.m - 2];
        const double psi_ext =
            (step.sw1 == Switch1::LoopSide) ? psi_slot[step.m] + kPi : 0.0;
        const double vbs_t = std::cos(p.omega) * std::cos(p.omega);
        bin.vbs_t = vbs_t;
        bin.vps_theta = wrap_angle(psi_ext - p.phi - psi_inner);
        psi_inner = psi_ext;
        psi_slot[step.m] = psi_ext + (vbs_t < 0.5 ? kPi : 0.0);
        if (step.sw2 == Switch2::Export) {
          t.phase_offsets[exports++] =
              wrap_angle(plan.alphas[step.m - 1] - psi_slot[step.m]);
        }
        break;
      }
      case ScheduleStep::Kind::Skip: {
        // Switch-1's 180 degrees and the bypass reflection sign cancel.
        bin.vbs_t = 0.0;
        bin.vps_theta = 0.0;
        if (step.sw2 == Switch2::Export) {
          t.phase_offsets[exports++] =
              wrap_angle(plan.alphas[step.m - 1] - psi_slot[step.m]);
        }
        break;
      }
      case ScheduleStep::Kind::UnloadSwap: {
        bin.vbs_t = 1.0;
        const int j = inner_logical;
        if (j < 1) {
          throw RoutingError("build_from_schedule: unload from an empty "
                             "inner loop");
        }
        if (apply_final_phases) {
          bin.vps_theta = wrap_angle(plan.alphas[j - 1] - psi_inner - kPi);
        } else {
          bin.vps_theta = 0.0;
          t.phase_offsets[exports] =
              wrap_angle(plan.alphas[j - 1] - psi_inner - kPi);
        }
        if (step.sw2 != Switch2::Export) {
          throw RoutingError("build_from_schedule: unload bins must export");
        }
        ++exports;
        if (step.m > 0) {
          psi_inner = psi_slot[step.m] + kPi;  // Switch-1 on arrival
          inner_logical = step.m;
        } else {
          psi_inner = 0.0;
          inner_logical = 0;
        }
        break;
      }
    }
    t.bins.push_back(bin);
  }

  if (exports != n) {
    throw RoutingError("build_from_schedule: schedule exports " +
                       std::to_string(exports) + " of " + std::to_string(n) +
                       " modes");
  }
  if (apply_final_phases) {
    t.phase_offsets.assign(n, 0.0);
  }
  t.mode_trace = derive_mode_trace(t);
  return t;
}

}  // namespace detail

ControlTimeline compile(const DecompositionPlan& plan,
                        bool apply_final_phases, double tau_ns) {
  plan.validate();
  const int n = plan.dim;
  if (n < 2) {
    throw ValidationError("compile: plan dimension must be at least 2");
  }

  using Step = detail::ScheduleStep;
  std::vector<Step> steps;
  steps.push_back(
      Step{Step::Kind::Load, 0, 0, Switch1::Through, Switch2::Keep});
  for (int k = 1; k <= n - 1; ++k) {
    for (int m = 2; m <= n; ++m) {
      const Switch1 sw1 = (k == 1) ? Switch1::Through : Switch1::LoopSide;
      if (m <= n - k + 1) {
        steps.push_back(Step{Step::Kind::Interact, k, m, sw1, Switch2::Keep});
      } else {
        steps.push_back(Step{Step::Kind::Skip, k, m, sw1, Switch2::Keep});
      }
    }
  }
  for (int j = 1; j <= n - 1; ++j) {
    steps.push_back(Step{Step::Kind::UnloadSwap, 0, j + 1, Switch1::LoopSide,
                         Switch2::Export});
  }
  steps.push_back(
      Step{Step::Kind::UnloadSwap, 0, 0, Switch1::LoopSide, Switch2::Export});

  return detail::build_from_schedule(plan, steps, apply_final_phases, tau_ns);
}

namespace {

using RowVec = Eigen::RowVectorXcd;

struct RingEntry {
  int arrival_bin;
  RowVec amplitude;
};

}  // namespace

TimelineUnitary timeline_to_unitary(const ControlTimeline& t) {
  t.validate();
  const int n = t.n_modes;
  const int delay = t.outer_delay_bins();
  const complexd im(0.0, 1.0);

  RowVec inner = RowVec::Zero(n);
  std::deque<RingEntry> ring;
  std::vector<RowVec> exports;
  int next_input = 0;

  for (const TimeBin& bin : t.bins) {
    RowVec ext = RowVec::Zero(n);
    const bool ring_due = !ring.empty() && ring.front().arrival_bin == bin.index;
    if (bin.switch1 == Switch1::Through) {
      if (ring_due) {
        throw RoutingError("timeline_to_unitary: outer-loop return collides "
                           "with the input at bin " +
                           std::to_string(bin.index));
      }
      if (next_input < n) ext(next_input++) = 1.0;
    } else if (ring_due) {
      ext = -ring.front().amplitude;  // Switch-1's 180 degrees
      ring.pop_front();
    }

    const RowVec phased = std::exp(im * bin.vps_theta) * inner;
    const double stay = std::sqrt(1.0 - bin.vbs_t);
    const double cross = std::sqrt(bin.vbs_t);
    const RowVec new_inner = stay * phased + cross * ext;
    // The phase-inverting side flips when T < 0.5.
    const RowVec depart = (bin.vbs_t >= 0.5)
                              ? RowVec(-cross * phased + stay * ext)
                              : RowVec(cross * phased - stay * ext);
    inner = new_inner;

    if (bin.switch2 == Switch2::Export) {
      exports.push_back(depart);
    } else if (depart.squaredNorm() > 0.0) {
      ring.push_back(RingEntry{bin.index + delay, depart});
    }
  }

  if (static_cast<int>(exports.size()) != n) {
    throw RoutingError("timeline_to_unitary: timeline exports " +
                       std::to_string(exports.size()) + " of " +
                       std::to_string(n) + " modes");
  }
  if (next_input != n) {
    throw RoutingError("timeline_to_unitary: timeline admits only " +
                       std::to_string(next_input) + " input pulses");
  }
  if (inner.norm() > 1e-9) {
    throw RoutingError("timeline_to_unitary: amplitude stranded in the inner "
                       "loop");
  }
  for (const RingEntry& e : ring) {
    if (e.amplitude.norm() > 1e-9) {
      throw RoutingError("timeline_to_unitary: amplitude stranded in the "
                         "outer loop");
    }
  }

  MatrixXcd u(n, n);
  for (int i = 0; i < n; ++i) u.row(i) = exports[i];
  return TimelineUnitary{std::move(u), kPi};
}

MatrixXcd effective_unitary(const ControlTimeline& t) {
  const TimelineUnitary raw = timeline_to_unitary(t);
  if (t.phase_offsets.empty()) return raw.u;
  MatrixXcd u = raw.u;
  for (int i = 0; i < t.n_modes; ++i) {
    u.row(i) *= std::polar(1.0, t.phase_offsets[i]);
  }
  return u;
}

double deviation_up_to_global_phase(const MatrixXcd& a, const MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ValidationError("deviation_up_to_global_phase: shape mismatch");
  }
  const complexd overlap = (b.adjoint() * a).trace();
  complexd phase(1.0, 0.0);
  if (std::abs(overlap) > 1e-15) {
    phase = std::conj(overlap) / std::abs(overlap);
  }
  return (phase * a - b).cwiseAbs().maxCoeff();
}

}  // namespace tdlo
