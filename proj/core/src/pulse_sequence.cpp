#include "qsa/protocol/pulse_sequence.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "qsa/constants.hpp"

namespace qsa::proto {

const char* to_string(Channel c) {
  switch (c) {
    case Channel::laser: return "laser";
    case Channel::microwave: return "mw";
    case Channel::rf: return "rf";
    case Channel::wait: return "wait";
    default: return "detector";
  }
}

void PulseSequence::append(PulseEvent e) { events.push_back(std::move(e)); }

void PulseSequence::append(const PulseSequence& fragment) {
  events.insert(events.end(), fragment.events.begin(), fragment.events.end());
  markers.insert(markers.end(), fragment.markers.begin(), fragment.markers.end());
}

void PulseSequence::mark(double time_s, std::string label) {
  markers.push_back({time_s, std::move(label)});
}

double PulseSequence::end_time() const {
  double t = 0.0;
  for (const auto& e : events) t = std::max(t, e.end_s());
  return t;
}

void PulseSequence::finish() {
  std::stable_sort(events.begin(), events.end(),
                   [](const PulseEvent& a, const PulseEvent& b) { return a.start_s < b.start_s; });
  std::stable_sort(markers.begin(), markers.end(),
                   [](const Marker& a, const Marker& b) { return a.time_s < b.time_s; });
  total_duration_s = std::max(total_duration_s, end_time());
  validate();
}

void PulseSequence::validate() const {
  double last_start = 0.0;
  for (const auto& e : events) {
    if (e.start_s < 0.0 || e.duration_s < 0.0)
      throw std::invalid_argument("PulseSequence: negative start or duration");
    if (e.start_s < last_start)
      throw std::invalid_argument("PulseSequence: events not sorted by start time");
    last_start = e.start_s;
    const bool selective_channel = e.channel == Channel::microwave || e.channel == Channel::rf;
    if (e.transition && !selective_channel)
      throw std::invalid_argument("PulseSequence: transition label on non-pulse channel");
  }
  if (total_duration_s + 1e-15 < end_time())
    throw std::invalid_argument("PulseSequence: total_duration shorter than last event");
  // No overlap of [start, end) intervals on the same channel.
  for (std::size_t i = 0; i < events.size(); ++i) {
    for (std::size_t j = i + 1; j < events.size(); ++j) {
      if (events[j].start_s >= events[i].end_s()) break;
      if (events[j].channel == events[i].channel && events[i].duration_s > 0.0)
        throw std::invalid_argument("PulseSequence: overlapping events on channel " +
                                    std::string(to_string(events[i].channel)));
    }
  }
}

std::string PulseSequence::serialize() const {
  std::string out;
  char line[256];
  for (const auto& e : events) {
    std::snprintf(line, sizeof(line), "%s %.4f %.4f %.3f %.4f %s %.4f\n",
                  to_string(e.channel), e.start_s * 1e9, e.duration_s * 1e9,
                  e.carrier_hz, e.phase_rad * 180.0 / pi,
                  e.transition ? qsys::to_string(*e.transition) : "-",
                  e.angle_rad * 180.0 / pi);
    out += line;
  }
  return out;
}

}  // namespace qsa::proto
