#pragma once

#include "qsa/protocol/pulse_sequence.hpp"

namespace qsa::proto {

// XY8 train parameters. When built from a target frequency the spacing is
// tau = 1 / (2 f_target), placing the filter's first harmonic on the signal.
struct Xy8Params {
  int n_pulses = 8;           // multiple of 8
  double tau_s = 0.0;         // interpulse spacing
  double f_target_hz = 0.0;   // 0 if constructed from tau directly

  double t_meas() const { return n_pulses * tau_s; }

  void validate() const;

  static Xy8Params from_frequency(int n_pulses, double f_target_hz);
  static Xy8Params from_tau(int n_pulses, double tau_s);
};

struct Xy8BuildOptions {
  double carrier_hz = 0.0;
  double mw_pulse_s = 0.0;          // dead-time bookkeeping per pulse
  double opening_phase_rad = 0.0;   // pi/2 pulse axes flanking the train
  double closing_phase_rad = qsa::pi / 2.0;
};

// Standard XY8 block: opening pi/2, N pi pulses with the X-Y-X-Y-Y-X-Y-X
// phase pattern at offsets (k + 1/2) tau, closing pi/2 at N tau.
PulseSequence build_xy8(const Xy8Params& params, double t_start,
                        const Xy8BuildOptions& opts = {});

}  // namespace qsa::proto
