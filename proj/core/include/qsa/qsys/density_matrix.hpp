#pragma once

#include <complex>

#include <Eigen/Dense>

#include "qsa/qsys/spin_basis.hpp"

namespace qsa::qsys {

// Density matrix over a SpinBasis product space. The single source of truth
// for quantum state in the engine. Invariants (checked by validate()):
// Hermitian to 1e-12, unit trace to 1e-12, smallest eigenvalue >= -1e-10.
class DensityMatrix {
 public:
  DensityMatrix(SpinBasis basis, Eigen::MatrixXcd m);

  // |e=0> x |n> for the given nuclear index.
  static DensityMatrix ground(const SpinBasis& basis, int nuclear_index = 0);
  static DensityMatrix pure(const SpinBasis& basis, const Eigen::VectorXcd& psi);
  static DensityMatrix basis_state(const SpinBasis& basis, int e, int n);
  // Electron in |0_e>, nucleus maximally mixed.
  static DensityMatrix electron_ground_nuclear_thermal(const SpinBasis& basis);

  const SpinBasis& basis() const { return basis_; }
  const Eigen::MatrixXcd& matrix() const { return m_; }
  Eigen::MatrixXcd& matrix() { return m_; }
  int dimension() const { return static_cast<int>(m_.rows()); }

  double population(int basis_index) const { return m_(basis_index, basis_index).real(); }
  double population(int e, int n) const { return population(basis_.index_of(e, n)); }
  double electron_population(int e) const;
  double nuclear_population(int n) const;

  Eigen::MatrixXcd partial_trace_electron() const;  // -> nuclear space
  Eigen::MatrixXcd partial_trace_nuclear() const;   // -> electron space

  double trace() const { return m_.trace().real(); }
  double purity() const { return (m_ * m_).trace().real(); }

  // Removes accumulated floating-point asymmetry; exact maps are Hermitian.
  void symmetrize();

  // Throws std::runtime_error naming the violated invariant.
  void validate(double herm_tol = 1e-12, double trace_tol = 1e-12,
                double min_eig = -1e-10) const;

 private:
  SpinBasis basis_;
  Eigen::MatrixXcd m_;
};

}  // namespace qsa::qsys
