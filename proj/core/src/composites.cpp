#include "qsa/protocol/composites.hpp"

#include <stdexcept>

#include "qsa/constants.hpp"

namespace qsa::proto {

RetrieveVariant retrieve_variant_from_string(const std::string& s) {
  if (s == "double_cnot") return RetrieveVariant::double_cnot;
  if (s == "single_cnot_reinit") return RetrieveVariant::single_cnot_reinit;
  throw std::invalid_argument("unknown retrieve variant: " + s);
}

const char* to_string(RetrieveVariant v) {
  return v == RetrieveVariant::double_cnot ? "double_cnot" : "single_cnot_reinit";
}

namespace {

PulseEvent selective_pi(Channel channel, qsys::Transition t,
                        const qsys::TransitionTable& table, double start,
                        double duration, double phase) {
  PulseEvent e;
  e.channel = channel;
  e.start_s = start;
  e.duration_s = duration;
  e.carrier_hz = table.line(t).frequency_hz;
  e.phase_rad = phase;
  e.transition = t;
  e.angle_rad = pi;
  return e;
}

}  // namespace

PulseSequence store_composite(const qsys::TransitionTable& table, double t_start,
                              const CompositeTimings& timings) {
  PulseSequence seq;
  seq.name = "store";
  seq.append(selective_pi(Channel::microwave, qsys::Transition::mw1, table, t_start,
                          timings.mw_pulse_s, 0.0));
  seq.append(selective_pi(Channel::rf, qsys::Transition::rf1, table,
                          t_start + timings.mw_pulse_s, timings.rf_pulse_s, 0.0));
  seq.total_duration_s = t_start + timings.double_cnot_access_s();
  return seq;
}

qsys::Transition readout_cnot_line() { return qsys::Transition::mw2; }

PulseSequence retrieve_composite(RetrieveVariant variant,
                                 const qsys::TransitionTable& table, double t_start,
                                 const CompositeTimings& timings) {
  PulseSequence seq;
  seq.name = "retrieve";
  if (variant == RetrieveVariant::double_cnot) {
    seq.append(selective_pi(Channel::rf, qsys::Transition::rf1, table, t_start,
                            timings.rf_pulse_s, pi));
    seq.append(selective_pi(Channel::microwave, qsys::Transition::mw1, table,
                            t_start + timings.rf_pulse_s + timings.rf_ringing_s,
                            timings.mw_pulse_s, pi));
    seq.total_duration_s = t_start + timings.double_cnot_access_s();
  } else {
    PulseEvent laser;
    laser.channel = Channel::laser;
    laser.start_s = t_start;
    laser.duration_s = timings.laser_pulse_s;
    seq.append(laser);
    seq.append(selective_pi(Channel::microwave, readout_cnot_line(), table,
                            t_start + timings.laser_pulse_s, timings.mw_pulse_s, pi));
    seq.total_duration_s = t_start + timings.single_cnot_access_s();
  }
  return seq;
}

}  // namespace qsa::proto
