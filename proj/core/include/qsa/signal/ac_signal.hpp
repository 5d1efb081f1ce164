#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "qsa/constants.hpp"

namespace qsa::sig {

// One tone V0*cos(2*pi*f*t + phase). A tone without a fixed phase models an
// unsynchronized source: the phase is drawn (or averaged) per run.
struct Tone {
  double amplitude_tesla = 0.0;
  double frequency_hz = 0.0;
  std::optional<double> fixed_phase;  // rad; nullopt = uniform random
};

// External test signal; multi-tone signals are sums of independent tones.
struct AcSignal {
  std::vector<Tone> tones;

  void validate() const {
    for (const auto& t : tones) {
      if (!(t.amplitude_tesla >= 0.0))
        throw std::invalid_argument("AcSignal: amplitude must be >= 0");
      if (!(t.frequency_hz >= 0.0))
        throw std::invalid_argument("AcSignal: frequency must be >= 0");
    }
  }

  bool unsynchronized() const {
    for (const auto& t : tones)
      if (!t.fixed_phase) return true;
    return false;
  }

  // Field value at time t given one sampled phase per tone.
  double value(double t, std::span<const double> phases) const {
    if (phases.size() != tones.size())
      throw std::invalid_argument("AcSignal::value: one phase per tone required");
    double v = 0.0;
    for (std::size_t k = 0; k < tones.size(); ++k)
      v += tones[k].amplitude_tesla *
           std::cos(two_pi * tones[k].frequency_hz * t + phases[k]);
    return v;
  }

  // Phases for a run: fixed ones pass through, free ones default to 0.
  std::vector<double> default_phases() const {
    std::vector<double> p(tones.size(), 0.0);
    for (std::size_t k = 0; k < tones.size(); ++k)
      if (tones[k].fixed_phase) p[k] = *tones[k].fixed_phase;
    return p;
  }

  static AcSignal single_tone(double v0_tesla, double f_hz,
                              std::optional<double> phase = std::nullopt) {
    AcSignal s;
    s.tones.push_back({v0_tesla, f_hz, phase});
    return s;
  }
};

}  // namespace qsa::sig
