#include "qsa/qsys/density_matrix.hpp"

#include <stdexcept>

namespace qsa::qsys {

DensityMatrix::DensityMatrix(SpinBasis basis, Eigen::MatrixXcd m)
    : basis_(std::move(basis)), m_(std::move(m)) {
  if (m_.rows() != basis_.dimension() || m_.cols() != basis_.dimension())
    throw std::invalid_argument("DensityMatrix: matrix does not match basis dimension");
}

DensityMatrix DensityMatrix::ground(const SpinBasis& basis, int nuclear_index) {
  return basis_state(basis, 0, nuclear_index);
}

DensityMatrix DensityMatrix::basis_state(const SpinBasis& basis, int e, int n) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(basis.dimension(), basis.dimension());
  const int i = basis.index_of(e, n);
  m(i, i) = 1.0;
  return DensityMatrix(basis, std::move(m));
}

DensityMatrix DensityMatrix::pure(const SpinBasis& basis, const Eigen::VectorXcd& psi) {
  if (psi.size() != basis.dimension())
    throw std::invalid_argument("DensityMatrix::pure: vector dimension mismatch");
  const double n2 = psi.squaredNorm();
  if (n2 <= 0.0) throw std::invalid_argument("DensityMatrix::pure: zero vector");
  Eigen::VectorXcd v = psi / std::sqrt(n2);
  return DensityMatrix(basis, v * v.adjoint());
}

DensityMatrix DensityMatrix::electron_ground_nuclear_thermal(const SpinBasis& basis) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(basis.dimension(), basis.dimension());
  const double w = 1.0 / basis.n_nuclear();
  for (int n = 0; n < basis.n_nuclear(); ++n) {
    const int i = basis.index_of(0, n);
    m(i, i) = w;
  }
  return DensityMatrix(basis, std::move(m));
}

double DensityMatrix::electron_population(int e) const {
  double p = 0.0;
  for (int n = 0; n < basis_.n_nuclear(); ++n) p += population(e, n);
  return p;
}

double DensityMatrix::nuclear_population(int n) const {
  double p = 0.0;
  for (int e = 0; e < basis_.n_electron(); ++e) p += population(e, n);
  return p;
}

Eigen::MatrixXcd DensityMatrix::partial_trace_electron() const {
  const int nn = basis_.n_nuclear();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(nn, nn);
  for (int e = 0; e < basis_.n_electron(); ++e)
    out += m_.block(e * nn, e * nn, nn, nn);
  return out;
}

Eigen::MatrixXcd DensityMatrix::partial_trace_nuclear() const {
  const int ne = basis_.n_electron();
  const int nn = basis_.n_nuclear();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(ne, ne);
  for (int e = 0; e < ne; ++e)
    for (int f = 0; f < ne; ++f)
      out(e, f) = m_.block(e * nn, f * nn, nn, nn).trace();
  return out;
}

void DensityMatrix::symmetrize() {
  m_ = 0.5 * (m_ + m_.adjoint()).eval();
}

void DensityMatrix::validate(double herm_tol, double trace_tol, double min_eig) const {
  const double herm = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > herm_tol)
    throw std::runtime_error("DensityMatrix: Hermiticity violated by " + std::to_string(herm));
  const double tr = std::abs(m_.trace() - std::complex<double>(1.0, 0.0));
  if (tr > trace_tol)
    throw std::runtime_error("DensityMatrix: trace deviates by " + std::to_string(tr));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (m_ + m_.adjoint()),
                                                     Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues().minCoeff();
  if (lo < min_eig)
    throw std::runtime_error("DensityMatrix: negative eigenvalue " + std::to_string(lo));
}

}  // namespace qsa::qsys
