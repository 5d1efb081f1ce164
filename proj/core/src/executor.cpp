#include "qsa/protocol/executor.hpp"

#include <cmath>
#include <stdexcept>

namespace qsa::proto {

using qsys::DensityMatrix;

Engine::Engine(qsys::SpinBasis basis, qsys::FieldConfig field,
               qsys::HyperfineParams hyperfine, qsys::RelaxationParams relax,
               GateEfficiencies efficiencies, EngineOptions options)
    : basis_(std::move(basis)),
      field_(field),
      hyperfine_(hyperfine),
      relax_(relax),
      efficiencies_(efficiencies),
      options_(options) {
  field_.validate();
  hyperfine_.validate();
  relax_.validate();
  efficiencies_.validate();
  h_lab_ = qsys::build_hamiltonian(field_, hyperfine_, basis_);
  h_rot_ = qsys::rotating_frame_hamiltonian(field_, hyperfine_, basis_);
  table_ = qsys::transition_frequencies(h_lab_, basis_);
}

DensityMatrix Engine::initial_state() const {
  if (options_.thermal_nucleus)
    return DensityMatrix::electron_ground_nuclear_thermal(basis_);
  return DensityMatrix::basis_state(basis_, 0, table_.memory_zero_nuclear_index);
}

ExecutionResult Engine::execute(const PulseSequence& seq, const sig::AcSignal& signal,
                                const readout::ReadoutParams* readout_params,
                                std::uint64_t seed) const {
  Rng rng(seed);
  std::vector<double> phases = signal.default_phases();
  for (std::size_t k = 0; k < signal.tones.size(); ++k)
    if (!signal.tones[k].fixed_phase) phases[k] = rng.uniform(0.0, two_pi);
  return execute_with_phases(seq, signal, phases, readout_params, rng.next_u64());
}

ExecutionResult Engine::execute_with_phases(const PulseSequence& seq,
                                            const sig::AcSignal& signal,
                                            std::span<const double> phases,
                                            const readout::ReadoutParams* readout_params,
                                            std::uint64_t seed) const {
  seq.validate();
  signal.validate();
  if (phases.size() != signal.tones.size())
    throw std::invalid_argument("execute: one phase per tone required");

  Rng rng(seed);
  DensityMatrix rho = initial_state();
  ExecutionResult result;
  result.p = rho.electron_population(0);
  bool p_measured = false;

  double cursor = 0.0;
  bool in_window = false;
  double window_start = 0.0;
  std::vector<double> toggles;

  double readout_start = -1.0;
  for (const auto& m : seq.markers)
    if (m.label == kMarkerReadoutTrain) readout_start = m.time_s;

  std::size_t next_marker = 0;
  auto flush_markers = [&](double now) {
    while (next_marker < seq.markers.size() &&
           seq.markers[next_marker].time_s <= now + 1e-15) {
      if (seq.markers[next_marker].label == kMarkerMeasureP) {
        result.p = rho.electron_population(0);
        p_measured = true;
      }
      ++next_marker;
    }
  };

  auto advance = [&](double to) {
    if (to <= cursor) return;
    const double dt = to - cursor;
    rho = qsys::unitary_evolution(rho, dt, h_rot_);
    if (in_window)
      rho = qsys::apply_t1_relaxation(rho, dt, relax_, relax_.t1_nuclear_dark);
    else
      rho = qsys::apply_relaxation(rho, dt, relax_, relax_.t1_nuclear_dark);
    cursor = to;
  };

  auto window_phase = [&](double t_close) {
    if (options_.phase_mode == sig::PhaseMode::first_harmonic) {
      return (2.0 * field_.gamma_e * (t_close - window_start) / pi) *
             signal.value(window_start, phases);
    }
    return sig::accumulated_phase_toggled(signal, window_start, t_close, toggles,
                                          phases, field_.gamma_e);
  };

  const double angle_tol = 1e-9;
  for (const auto& e : seq.events) {
    if (readout_start >= 0.0 && e.start_s >= readout_start - 1e-15) break;
    advance(e.start_s);
    flush_markers(cursor);
    switch (e.channel) {
      case Channel::laser: {
        rho = qsys::laser_reinit(rho, options_.laser_init_fidelity);
        if (e.duration_s > 0.0) {
          rho = qsys::unitary_evolution(rho, e.duration_s, h_rot_);
          rho = qsys::apply_relaxation(rho, e.duration_s, relax_,
                                       relax_.t1_nuclear_readout);
          cursor = e.end_s();
        }
        break;
      }
      case Channel::microwave:
      case Channel::rf: {
        if (e.transition) {
          const double eff = e.channel == Channel::microwave ? efficiencies_.cnot_e
                                                             : efficiencies_.cnot_n;
          rho = qsys::selective_rotation(rho, table_.line(*e.transition), e.angle_rad,
                                         e.phase_rad, eff);
        } else if (std::abs(e.angle_rad - 0.5 * pi) < angle_tol) {
          // Unconditional pi/2 pulses open and close sensing windows.
          if (!in_window) {
            in_window = true;
            window_start = e.start_s;
            toggles.clear();
            rho = qsys::electron_pulse(rho, e.angle_rad, e.phase_rad);
          } else {
            rho = qsys::phase_gate(rho, window_phase(e.start_s));
            rho = qsys::electron_pulse(rho, e.angle_rad, e.phase_rad);
            in_window = false;
          }
        } else {
          rho = qsys::electron_pulse(rho, e.angle_rad, e.phase_rad);
          if (in_window) toggles.push_back(e.start_s);
        }
        break;
      }
      case Channel::wait:
        advance(e.end_s());
        break;
      case Channel::detector_gate:
        // Only reached when the sequence lacks a readout marker; treat the
        // first gate as the train start.
        readout_start = e.start_s;
        break;
    }
    flush_markers(cursor);
    if (readout_start >= 0.0 && cursor >= readout_start - 1e-15) break;
  }

  if (readout_start >= 0.0) {
    advance(readout_start);
  } else {
    advance(seq.total_duration_s);
  }
  flush_markers(cursor);
  if (!p_measured) result.p = rho.electron_population(0);
  result.nuclear_p0 = rho.nuclear_population(table_.memory_zero_nuclear_index);
  if (readout_start >= 0.0 && readout_params)
    result.photon_counts =
        readout::repetitive_readout(result.nuclear_p0, *readout_params, rng).counts;
  return result;
}

}  // namespace qsa::proto
