#pragma once

#include "qsa/protocol/composites.hpp"
#include "qsa/protocol/xy8.hpp"

namespace qsa::proto {

struct GateEfficiencies {
  double cnot_e = 1.0;
  double cnot_n = 1.0;

  void validate() const;
};

struct ProtocolConfig {
  bool memory_enabled = true;
  RetrieveVariant retrieve_variant = RetrieveVariant::double_cnot;
  int readout_repeats = 1;
  GateEfficiencies gate_efficiencies;
  CompositeTimings timings;
  double init_laser_s = 2e-6;
  double readout_period_s = 12e-6;
  double max_wait_s = 0.1;  // guard against runaway runs

  void validate() const;
};

// Block boundary times of the assembled sequence (Fig. 2 style):
// first sensing window [t_a, t_b], second [t_c, t_d].
struct ProtocolTimings {
  double t_a = 0.0, t_b = 0.0, t_c = 0.0, t_d = 0.0;
};

// Full correlation sequence:
//   init -> sensing block 1 -> store -> wait t -> retrieve ->
//   sensing block 2 -> store -> n repetitive readouts
// With memory disabled the store/wait/retrieve section collapses to a bare
// electron wait of the same t. The closing pi/2 of block 2 is phase
// inverted relative to block 1 so that the protocol realizes
// p = 1/2 (1 - <sin Phi1 sin Phi2>).
PulseSequence correlation_protocol(const ProtocolConfig& cfg, const Xy8Params& xy8,
                                   double t, const qsys::TransitionTable& table,
                                   ProtocolTimings* timings_out = nullptr);

}  // namespace qsa::proto
