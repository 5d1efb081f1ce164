#include "qsa/qsys/gates.hpp"

#include <cmath>
#include <stdexcept>

namespace qsa::qsys {

using std::complex;

Eigen::MatrixXcd two_level_rotation(int dim, int i, int j, double angle,
                                    double axis_phase) {
  if (i == j || i < 0 || j < 0 || i >= dim || j >= dim)
    throw std::invalid_argument("two_level_rotation: invalid level pair");
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  const double c = std::cos(0.5 * angle);
  const double s = std::sin(0.5 * angle);
  const complex<double> im(0.0, 1.0);
  u(i, i) = c;
  u(j, j) = c;
  u(i, j) = -im * s * std::exp(-im * axis_phase);
  u(j, i) = -im * s * std::exp(im * axis_phase);
  return u;
}

DensityMatrix selective_rotation(const DensityMatrix& rho,
                                 const TransitionTable::Line& line,
                                 double angle, double axis_phase,
                                 double efficiency) {
  if (!(efficiency >= 0.0 && efficiency <= 1.0))
    throw std::invalid_argument("selective_rotation: efficiency outside [0,1]");
  if (!std::isfinite(angle) || !std::isfinite(axis_phase))
    throw std::invalid_argument("selective_rotation: non-finite angle");
  const int dim = rho.dimension();
  const Eigen::MatrixXcd u =
      two_level_rotation(dim, line.lower, line.upper, angle, axis_phase);
  Eigen::MatrixXcd rotated = u * rho.matrix() * u.adjoint();
  if (efficiency < 1.0)
    rotated = efficiency * rotated + (1.0 - efficiency) * rho.matrix();
  DensityMatrix out(rho.basis(), std::move(rotated));
  out.symmetrize();
  return out;
}

DensityMatrix phase_gate(const DensityMatrix& rho, double phi) {
  if (!std::isfinite(phi)) throw std::invalid_argument("phase_gate: non-finite phase");
  const auto& basis = rho.basis();
  const int dim = rho.dimension();
  Eigen::MatrixXcd m = rho.matrix();
  const complex<double> f = std::exp(complex<double>(0.0, phi));
  // Diagonal unitary: |1_e> manifold picks up e^{i phi}.
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const bool ei = basis.electron_index(i) == 1;
      const bool ej = basis.electron_index(j) == 1;
      if (ei && !ej) m(i, j) *= f;
      else if (!ei && ej) m(i, j) *= std::conj(f);
    }
  }
  return DensityMatrix(rho.basis(), std::move(m));
}

DensityMatrix electron_pulse(const DensityMatrix& rho, double angle,
                             double axis_phase) {
  const auto& basis = rho.basis();
  const int dim = rho.dimension();
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  const double c = std::cos(0.5 * angle);
  const double s = std::sin(0.5 * angle);
  const complex<double> im(0.0, 1.0);
  for (int n = 0; n < basis.n_nuclear(); ++n) {
    const int i = basis.index_of(0, n);
    const int j = basis.index_of(1, n);
    u(i, i) = c;
    u(j, j) = c;
    u(i, j) = -im * s * std::exp(-im * axis_phase);
    u(j, i) = -im * s * std::exp(im * axis_phase);
  }
  DensityMatrix out(rho.basis(), u * rho.matrix() * u.adjoint());
  out.symmetrize();
  return out;
}

DensityMatrix laser_reinit(const DensityMatrix& rho, double fidelity) {
  if (!(fidelity >= 0.0 && fidelity <= 1.0))
    throw std::invalid_argument("laser_reinit: fidelity outside [0,1]");
  const auto& basis = rho.basis();
  const int nn = basis.n_nuclear();
  const int dim = rho.dimension();
  Eigen::MatrixXcd reset = Eigen::MatrixXcd::Zero(dim, dim);
  reset.block(0, 0, nn, nn) = rho.partial_trace_electron();
  Eigen::MatrixXcd m = fidelity * reset + (1.0 - fidelity) * rho.matrix();
  DensityMatrix out(rho.basis(), std::move(m));
  out.symmetrize();
  return out;
}

}  // namespace qsa::qsys
