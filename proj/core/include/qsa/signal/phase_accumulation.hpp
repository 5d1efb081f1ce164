#pragma once

#include <span>
#include <vector>

#include "qsa/signal/ac_signal.hpp"

namespace qsa::sig {

// One multipulse sensing window: pi pulses spaced tau with half spacings at
// the edges, total measurement time t_meas = n_pulses * tau.
struct SensingWindow {
  double t_start = 0.0;
  double tau = 0.0;
  int n_pulses = 0;

  double t_meas() const { return n_pulses * tau; }
  double t_end() const { return t_start + t_meas(); }

  // Sign-toggle boundaries of the decoupling modulation, relative to
  // t_start: tau/2, 3tau/2, ..., (first and last intervals are tau/2).
  std::vector<double> toggle_offsets() const {
    std::vector<double> v(n_pulses);
    for (int k = 0; k < n_pulses; ++k) v[k] = (k + 0.5) * tau;
    return v;
  }
};

enum class PhaseMode { first_harmonic, exact };

// Phase accumulated by the electron during one sensing window:
//   first_harmonic: (2 gamma_e t_meas / pi) * V(t_start)
//   exact:          gamma_e * integral of s(t) V(t) with s toggling at each
//                   pi pulse (closed-form per interval)
// On resonance (f = 1/(2 tau)) the two coincide for any signal phase.
double accumulated_phase(const AcSignal& signal, const SensingWindow& window,
                         PhaseMode mode, std::span<const double> phases,
                         double gamma_e);

// Exact sign-toggled integral over [t_start, t_end] with toggles at the
// given absolute times (ascending, inside the interval). Used by the
// executor, which works from actual pulse event times.
double accumulated_phase_toggled(const AcSignal& signal, double t_start,
                                 double t_end,
                                 std::span<const double> toggle_times,
                                 std::span<const double> phases, double gamma_e);

}  // namespace qsa::sig
