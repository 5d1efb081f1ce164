#pragma once

#include "qsa/protocol/pulse_sequence.hpp"

namespace qsa::proto {

// Dead-time bookkeeping for the selective pulses and laser, seconds.
struct CompositeTimings {
  double mw_pulse_s = 0.7e-6;
  double rf_pulse_s = 30e-6;
  double rf_ringing_s = 1.5e-6;   // amplifier ringing delay after rf pulses
  double laser_pulse_s = 1.3e-6;

  double double_cnot_access_s() const { return mw_pulse_s + rf_pulse_s + rf_ringing_s; }
  double single_cnot_access_s() const { return laser_pulse_s + mw_pulse_s; }
};

enum class RetrieveVariant { double_cnot, single_cnot_reinit };

RetrieveVariant retrieve_variant_from_string(const std::string& s);
const char* to_string(RetrieveVariant v);

// c-NOT_e followed by c-NOT_n (selective pi rotations on mw1 then rf1).
// Acting on |0_e>|alpha_n> this moves the nuclear state onto the electron
// and leaves the memory polarized.
PulseSequence store_composite(const qsys::TransitionTable& table, double t_start,
                              const CompositeTimings& timings);

// Inverse composite. The double-c-NOT variant applies the phase-inverted
// pi rotations in reversed order, making retrieve the exact inverse of
// store. The single-c-NOT variant re-initializes the electron with a laser
// pulse and applies one electron c-NOT on the line that maps the memory's
// logical 0 to the bright electron state; it leaves nuclear populations
// untouched, so it can be repeated.
PulseSequence retrieve_composite(RetrieveVariant variant,
                                 const qsys::TransitionTable& table, double t_start,
                                 const CompositeTimings& timings);

// The electron line whose selective pi pulse maps "memory in logical 0" to
// the bright |0_e> readout outcome (the complement of mw1).
qsys::Transition readout_cnot_line();

}  // namespace qsa::proto
