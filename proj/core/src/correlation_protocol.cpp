#include "qsa/protocol/correlation_protocol.hpp"

#include <stdexcept>

#include "qsa/constants.hpp"

namespace qsa::proto {

void GateEfficiencies::validate() const {
  if (!(cnot_e >= 0.0 && cnot_e <= 1.0 && cnot_n >= 0.0 && cnot_n <= 1.0))
    throw std::invalid_argument("GateEfficiencies: values must lie in [0,1]");
}

void ProtocolConfig::validate() const {
  gate_efficiencies.validate();
  if (readout_repeats < 1 || readout_repeats > 10000)
    throw std::invalid_argument("ProtocolConfig: readout_repeats must be in [1, 10^4]");
  if (!(max_wait_s > 0.0)) throw std::invalid_argument("ProtocolConfig: max_wait must be > 0");
  if (!(init_laser_s >= 0.0) || !(readout_period_s > 0.0))
    throw std::invalid_argument("ProtocolConfig: invalid timing");
  if (readout_period_s < timings.mw_pulse_s + timings.laser_pulse_s)
    throw std::invalid_argument("ProtocolConfig: readout period shorter than one readout unit");
}

PulseSequence correlation_protocol(const ProtocolConfig& cfg, const Xy8Params& xy8,
                                   double t, const qsys::TransitionTable& table,
                                   ProtocolTimings* timings_out) {
  cfg.validate();
  xy8.validate();
  if (t < 0.0) throw std::invalid_argument("correlation_protocol: negative waiting time");
  if (t > cfg.max_wait_s)
    throw std::invalid_argument("correlation_protocol: waiting time exceeds max_wait guard");

  PulseSequence seq;
  seq.name = "correlation";
  ProtocolTimings tm;

  // Initialization.
  PulseEvent init;
  init.channel = Channel::laser;
  init.start_s = 0.0;
  init.duration_s = cfg.init_laser_s;
  seq.append(init);

  Xy8BuildOptions block;
  block.carrier_hz = table.mw1.frequency_hz;
  block.mw_pulse_s = 0.0;  // sensing pulses are fast; no dead time bookkeeping
  block.opening_phase_rad = 0.0;
  block.closing_phase_rad = 0.5 * pi;

  // Sensing block 1.
  tm.t_a = cfg.init_laser_s;
  seq.append(build_xy8(xy8, tm.t_a, block));
  tm.t_b = tm.t_a + xy8.t_meas();

  double cursor = tm.t_b;
  if (cfg.memory_enabled) {
    seq.append(store_composite(table, cursor, cfg.timings));
    cursor += cfg.timings.double_cnot_access_s();
    PulseEvent wait;
    wait.channel = Channel::wait;
    wait.start_s = cursor;
    wait.duration_s = t;
    seq.append(wait);
    cursor += t;
    seq.append(retrieve_composite(cfg.retrieve_variant, table, cursor, cfg.timings));
    cursor += cfg.retrieve_variant == RetrieveVariant::double_cnot
                  ? cfg.timings.double_cnot_access_s()
                  : cfg.timings.single_cnot_access_s();
  } else {
    PulseEvent wait;
    wait.channel = Channel::wait;
    wait.start_s = cursor;
    wait.duration_s = t;
    seq.append(wait);
    cursor += t;
  }

  // Sensing block 2; readout quadrature inverted.
  block.closing_phase_rad = -0.5 * pi;
  tm.t_c = cursor;
  seq.append(build_xy8(xy8, tm.t_c, block));
  tm.t_d = tm.t_c + xy8.t_meas();
  cursor = tm.t_d;

  // The protocol's transition probability is defined here, before the
  // final store and readout.
  seq.mark(cursor, kMarkerMeasureP);

  seq.append(store_composite(table, cursor, cfg.timings));
  cursor += cfg.timings.double_cnot_access_s();

  seq.mark(cursor, kMarkerReadoutTrain);
  for (int r = 0; r < cfg.readout_repeats; ++r) {
    const double t0 = cursor + r * cfg.readout_period_s;
    PulseEvent cnot = {};
    cnot.channel = Channel::microwave;
    cnot.start_s = t0;
    cnot.duration_s = cfg.timings.mw_pulse_s;
    cnot.carrier_hz = table.line(readout_cnot_line()).frequency_hz;
    cnot.phase_rad = 0.0;
    cnot.transition = readout_cnot_line();
    cnot.angle_rad = pi;
    seq.append(cnot);
    PulseEvent laser = {};
    laser.channel = Channel::laser;
    laser.start_s = t0 + cfg.timings.mw_pulse_s;
    laser.duration_s = cfg.timings.laser_pulse_s;
    seq.append(laser);
    PulseEvent gate = {};
    gate.channel = Channel::detector_gate;
    gate.start_s = laser.start_s;
    gate.duration_s = laser.duration_s;
    seq.append(gate);
  }
  seq.total_duration_s = cursor + cfg.readout_repeats * cfg.readout_period_s;

  if (timings_out) *timings_out = tm;
  seq.finish();
  return seq;
}

}  // namespace qsa::proto
