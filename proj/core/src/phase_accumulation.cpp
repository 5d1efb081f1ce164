#include "qsa/signal/phase_accumulation.hpp"

#include <cmath>
#include <stdexcept>

namespace qsa::sig {

namespace {

// Integral of cos(w u + phi) over [a, b].
double cos_integral(double w, double phi, double a, double b) {
  if (std::abs(w) < 1e-9) return std::cos(phi) * (b - a);
  return (std::sin(w * b + phi) - std::sin(w * a + phi)) / w;
}

}  // namespace

double accumulated_phase_toggled(const AcSignal& signal, double t_start,
                                 double t_end,
                                 std::span<const double> toggle_times,
                                 std::span<const double> phases, double gamma_e) {
  signal.validate();
  if (phases.size() != signal.tones.size())
    throw std::invalid_argument("accumulated_phase: one phase per tone required");
  if (t_end < t_start)
    throw std::invalid_argument("accumulated_phase: window ends before it starts");

  double phi_total = 0.0;
  for (std::size_t k = 0; k < signal.tones.size(); ++k) {
    const auto& tone = signal.tones[k];
    if (tone.amplitude_tesla == 0.0) continue;
    const double w = two_pi * tone.frequency_hz;
    const double phi0 = phases[k];
    double acc = 0.0;
    double sign = 1.0;
    double prev = t_start;
    for (double toggle : toggle_times) {
      acc += sign * cos_integral(w, phi0, prev, toggle);
      sign = -sign;
      prev = toggle;
    }
    acc += sign * cos_integral(w, phi0, prev, t_end);
    phi_total += gamma_e * tone.amplitude_tesla * acc;
  }
  return phi_total;
}

double accumulated_phase(const AcSignal& signal, const SensingWindow& window,
                         PhaseMode mode, std::span<const double> phases,
                         double gamma_e) {
  signal.validate();
  if (window.n_pulses <= 0 || !(window.tau > 0.0))
    throw std::invalid_argument("accumulated_phase: window requires n_pulses > 0 and tau > 0");
  if (phases.size() != signal.tones.size())
    throw std::invalid_argument("accumulated_phase: one phase per tone required");

  if (mode == PhaseMode::first_harmonic) {
    return (2.0 * gamma_e * window.t_meas() / pi) *
           signal.value(window.t_start, phases);
  }

  std::vector<double> toggles = window.toggle_offsets();
  for (double& x : toggles) x += window.t_start;
  return accumulated_phase_toggled(signal, window.t_start, window.t_end(), toggles,
                                   phases, gamma_e);
}

}  // namespace qsa::sig
