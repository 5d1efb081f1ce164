#include "qsa/qsys/trajectory.hpp"

#include <cmath>
#include <stdexcept>

namespace qsa::qsys {

int LabelTrajectory::state_at(double t) const {
  for (std::size_t k = 1; k < boundaries.size(); ++k)
    if (t < boundaries[k]) return states[k - 1];
  return final_state();
}

LabelTrajectory sample_flip_trajectory(double duration, double rate,
                                       int initial_state, int n_states,
                                       Rng& rng) {
  if (duration < 0.0) throw std::invalid_argument("sample_flip_trajectory: negative duration");
  if (rate < 0.0) throw std::invalid_argument("sample_flip_trajectory: negative rate");
  if (n_states < 1 || initial_state < 0 || initial_state >= n_states)
    throw std::invalid_argument("sample_flip_trajectory: bad state arguments");

  LabelTrajectory traj;
  traj.boundaries.push_back(0.0);
  traj.states.push_back(initial_state);
  double t = rng.exponential(rate);
  while (t < duration) {
    const int next = static_cast<int>(rng.uniform01() * n_states);
    traj.boundaries.push_back(t);
    traj.states.push_back(next < n_states ? next : n_states - 1);
    t += rng.exponential(rate);
  }
  traj.boundaries.push_back(duration);
  return traj;
}

Eigen::Matrix2cd expm_2x2(const Eigen::Matrix2cd& h, double dt) {
  // h = c*I + v.sigma with v real for Hermitian h.
  const std::complex<double> im(0.0, 1.0);
  const double c = 0.5 * (h(0, 0).real() + h(1, 1).real());
  const double vz = 0.5 * (h(0, 0).real() - h(1, 1).real());
  const double vx = h(0, 1).real();
  const double vy = -h(0, 1).imag();
  const double v = std::sqrt(vx * vx + vy * vy + vz * vz);
  const std::complex<double> phase = std::exp(-im * c * dt);
  Eigen::Matrix2cd u;
  if (v * dt < 1e-300) {
    u = Eigen::Matrix2cd::Identity();
  } else {
    const double cv = std::cos(v * dt);
    const double sv = std::sin(v * dt);
    const double nx = vx / v, ny = vy / v, nz = vz / v;
    u(0, 0) = cv - im * sv * nz;
    u(0, 1) = -im * sv * (nx - im * ny);
    u(1, 0) = -im * sv * (nx + im * ny);
    u(1, 1) = cv + im * sv * nz;
  }
  return phase * u;
}

Eigen::Matrix2cd conditional_propagator(const LabelTrajectory& traj,
                                        const std::vector<Eigen::Matrix2cd>& hams) {
  Eigen::Matrix2cd u = Eigen::Matrix2cd::Identity();
  for (std::size_t k = 0; k < traj.states.size(); ++k) {
    const double dt = traj.boundaries[k + 1] - traj.boundaries[k];
    if (dt <= 0.0) continue;
    const int label = traj.states[k];
    if (label < 0 || static_cast<std::size_t>(label) >= hams.size())
      throw std::invalid_argument("conditional_propagator: label without Hamiltonian");
    u = expm_2x2(hams[label], dt) * u;
  }
  return u;
}

}  // namespace qsa::qsys
