#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsa/qsys/hamiltonian.hpp"

namespace qsa::proto {

enum class Channel { laser, microwave, rf, wait, detector_gate };

const char* to_string(Channel c);

// One timed event on one control channel. Gates act at `start`; `duration`
// is dead-time bookkeeping (pulse length, amplifier ringing).
struct PulseEvent {
  Channel channel = Channel::wait;
  double start_s = 0.0;
  double duration_s = 0.0;
  double carrier_hz = 0.0;                       // mw / rf only
  double phase_rad = 0.0;                        // rotation axis
  std::optional<qsys::Transition> transition;    // selective pulses only
  double angle_rad = 0.0;

  double end_s() const { return start_s + duration_s; }
};

// Named point in the schedule consumed by the executor (e.g. where the
// protocol's transition probability is defined, or where the repetitive
// readout train begins).
struct Marker {
  double time_s = 0.0;
  std::string label;
};

inline constexpr const char* kMarkerMeasureP = "measure_p";
inline constexpr const char* kMarkerReadoutTrain = "readout_train";

struct PulseSequence {
  std::vector<PulseEvent> events;
  std::vector<Marker> markers;
  double total_duration_s = 0.0;
  std::string name;

  void append(PulseEvent e);
  void append(const PulseSequence& fragment);
  void mark(double time_s, std::string label);
  double end_time() const;
  void finish();  // sorts, sets total_duration_s, validates

  // Throws on unsorted events, negative times, or same-channel overlap.
  void validate() const;

  // Line-oriented text schedule, one event per line:
  //   channel start_ns duration_ns carrier_hz phase_deg transition angle_deg
  std::string serialize() const;
};

}  // namespace qsa::proto
