#include "qsa/signal/correlation.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace qsa::sig {

namespace {

// Legendre nodes on [-1, 1] by Newton iteration, then mapped to [0, 2*pi).
Quadrature build_quadrature(int n) {
  Quadrature q;
  q.nodes.resize(n);
  q.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    q.nodes[i] = pi * (x + 1.0);             // map [-1,1] -> [0, 2*pi)
    q.weights[i] = 1.0 / ((1.0 - x * x) * pp * pp);  // w/2: normalized below
  }
  double sum = 0.0;
  for (double w : q.weights) sum += w;
  for (double& w : q.weights) w /= sum;
  return q;
}

}  // namespace

const Quadrature& phase_quadrature(int order) {
  static std::mutex mutex;
  static std::map<int, Quadrature> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, build_quadrature(order)).first;
  return it->second;
}

double weak_signal_amplitude(double v0_tesla, double t_meas, double gamma_e) {
  const double x = gamma_e * v0_tesla * t_meas;
  return 2.0 * x * x / (pi * pi);
}

double analytic_p_weak(const AcSignal& signal, const SensingWindow& window,
                       double t, double gamma_e) {
  signal.validate();
  double corr = 0.0;
  for (const auto& tone : signal.tones)
    corr += weak_signal_amplitude(tone.amplitude_tesla, window.t_meas(), gamma_e) *
            std::cos(two_pi * tone.frequency_hz * t);
  return 0.5 * (1.0 - corr);
}

double correlation_integrand(const AcSignal& signal, const SensingWindow& window,
                             double t, double gamma_e, PhaseMode mode,
                             std::span<const double> phases) {
  SensingWindow second = window;
  second.t_start = window.t_start + window.t_meas() + t;
  const double phi1 = accumulated_phase(signal, window, mode, phases, gamma_e);
  const double phi2 = accumulated_phase(signal, second, mode, phases, gamma_e);
  return std::sin(phi1) * std::sin(phi2);
}

double general_correlation(const AcSignal& signal, const SensingWindow& window,
                           double t, double gamma_e, PhaseMode mode,
                           int quadrature_order) {
  signal.validate();
  if (t < 0.0) throw std::invalid_argument("general_correlation: negative waiting time");

  std::vector<std::size_t> free_tones;
  std::vector<double> phases(signal.tones.size(), 0.0);
  for (std::size_t k = 0; k < signal.tones.size(); ++k) {
    if (signal.tones[k].fixed_phase) phases[k] = *signal.tones[k].fixed_phase;
    else free_tones.push_back(k);
  }

  if (free_tones.empty()) {
    return 0.5 * (1.0 - correlation_integrand(signal, window, t, gamma_e, mode, phases));
  }

  const Quadrature& q = phase_quadrature(quadrature_order);
  // Product quadrature over the independent free phases.
  double mean = 0.0;
  std::vector<std::size_t> idx(free_tones.size(), 0);
  while (true) {
    double w = 1.0;
    for (std::size_t d = 0; d < free_tones.size(); ++d) {
      phases[free_tones[d]] = q.nodes[idx[d]];
      w *= q.weights[idx[d]];
    }
    mean += w * correlation_integrand(signal, window, t, gamma_e, mode, phases);
    std::size_t d = 0;
    for (; d < idx.size(); ++d) {
      if (++idx[d] < q.nodes.size()) break;
      idx[d] = 0;
    }
    if (d == idx.size()) break;
  }
  return 0.5 * (1.0 - mean);
}

}  // namespace qsa::sig
