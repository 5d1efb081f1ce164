#include "qsa/qsys/evolution.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qsa::qsys {

using std::complex;

DensityMatrix unitary_evolution(const DensityMatrix& rho, double duration,
                                const Eigen::MatrixXcd& h) {
  if (duration < 0.0) throw std::invalid_argument("unitary_evolution: negative duration");
  if (duration == 0.0) return rho;
  const int dim = rho.dimension();
  if (h.rows() != dim || h.cols() != dim)
    throw std::invalid_argument("unitary_evolution: Hamiltonian dimension mismatch");

  const double scale = h.cwiseAbs().maxCoeff();
  Eigen::MatrixXcd off = h;
  off.diagonal().setZero();
  const complex<double> im(0.0, 1.0);
  if (off.cwiseAbs().maxCoeff() <= 1e-14 * std::max(scale, 1.0)) {
    // Diagonal Hamiltonian: pure phase evolution.
    Eigen::VectorXcd phases(dim);
    for (int i = 0; i < dim; ++i)
      phases(i) = std::exp(-im * h(i, i).real() * duration);
    Eigen::MatrixXcd m = phases.asDiagonal() * rho.matrix() * phases.conjugate().asDiagonal();
    return DensityMatrix(rho.basis(), std::move(m));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  Eigen::VectorXcd phases(dim);
  for (int i = 0; i < dim; ++i)
    phases(i) = std::exp(-im * es.eigenvalues()(i) * duration);
  const Eigen::MatrixXcd u =
      es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
  DensityMatrix out(rho.basis(), u * rho.matrix() * u.adjoint());
  out.symmetrize();
  return out;
}

namespace {

// Population mix toward the maximally mixed state on one tensor factor plus
// coherence damping on that factor. k_pop and k_coh are the survival
// factors exp(-t/T1) and the coherence factor.
Eigen::MatrixXcd factor_channel(const Eigen::MatrixXcd& m, const SpinBasis& basis,
                                bool electron_factor, double k_pop, double k_coh) {
  const int ne = basis.n_electron();
  const int nn = basis.n_nuclear();
  const int n_levels = electron_factor ? ne : nn;
  if (k_pop >= 1.0 && k_coh >= 1.0) return m;

  Eigen::MatrixXcd out = m;
  const int dim = basis.dimension();
  // Coherence damping between different levels of the factor.
  for (int i = 0; i < dim; ++i) {
    const int li = electron_factor ? basis.electron_index(i) : basis.nuclear_index(i);
    for (int j = 0; j < dim; ++j) {
      const int lj = electron_factor ? basis.electron_index(j) : basis.nuclear_index(j);
      if (li != lj) out(i, j) *= k_coh;
    }
  }
  // Population relaxation: blocks diagonal in the factor mix toward their
  // average, preserving the other factor's operator content.
  if (k_pop < 1.0) {
    const int other = electron_factor ? nn : ne;
    auto block_of = [&](Eigen::MatrixXcd& mat, int level) {
      // Returns the (level, level) sub-block as an `other` x `other` map.
      Eigen::MatrixXcd b(other, other);
      for (int a = 0; a < other; ++a)
        for (int c = 0; c < other; ++c) {
          const int ia = electron_factor ? basis.index_of(level, a) : basis.index_of(a, level);
          const int ic = electron_factor ? basis.index_of(level, c) : basis.index_of(c, level);
          b(a, c) = mat(ia, ic);
        }
      return b;
    };
    std::vector<Eigen::MatrixXcd> blocks(n_levels);
    Eigen::MatrixXcd avg = Eigen::MatrixXcd::Zero(other, other);
    for (int l = 0; l < n_levels; ++l) {
      blocks[l] = block_of(out, l);
      avg += blocks[l];
    }
    avg /= static_cast<double>(n_levels);
    for (int l = 0; l < n_levels; ++l) {
      const Eigen::MatrixXcd updated = avg + (blocks[l] - avg) * k_pop;
      for (int a = 0; a < other; ++a)
        for (int c = 0; c < other; ++c) {
          const int ia = electron_factor ? basis.index_of(l, a) : basis.index_of(a, l);
          const int ic = electron_factor ? basis.index_of(l, c) : basis.index_of(c, l);
          out(ia, ic) = updated(a, c);
        }
    }
  }
  return out;
}

DensityMatrix relax_impl(const DensityMatrix& rho, double duration,
                         const RelaxationParams& relax, double t1_nuclear,
                         bool t1_only) {
  if (duration < 0.0) throw std::invalid_argument("apply_relaxation: negative duration");
  if (duration == 0.0) return rho;
  relax.validate();

  const double k1e = std::exp(-duration / relax.t1_electron);
  const double k1n = std::exp(-duration / t1_nuclear);
  // T1-only mode keeps coherences at the complete-positivity bound
  // (1 + exp(-t/T1)) / 2, the minimal damping compatible with the
  // population channel.
  const double k2e = t1_only ? 0.5 * (1.0 + k1e)
                             : std::exp(-duration / relax.t2_electron);
  const double t2n = relax.effective_t2_nuclear();
  const double k2n = t1_only ? 0.5 * (1.0 + k1n)
                             : std::exp(-duration / t2n);

  Eigen::MatrixXcd m = rho.matrix();
  m = factor_channel(m, rho.basis(), true, k1e, k2e);
  m = factor_channel(m, rho.basis(), false, k1n, k2n);
  DensityMatrix out(rho.basis(), std::move(m));
  out.symmetrize();
  return out;
}

}  // namespace

DensityMatrix apply_relaxation(const DensityMatrix& rho, double duration,
                               const RelaxationParams& relax, double t1_nuclear) {
  return relax_impl(rho, duration, relax, t1_nuclear, false);
}

DensityMatrix apply_t1_relaxation(const DensityMatrix& rho, double duration,
                                  const RelaxationParams& relax, double t1_nuclear) {
  return relax_impl(rho, duration, relax, t1_nuclear, true);
}

DensityMatrix free_evolution(const DensityMatrix& rho, double duration,
                             const Eigen::MatrixXcd& h,
                             const RelaxationParams& relax) {
  if (duration < 0.0) throw std::invalid_argument("free_evolution: negative duration");
  if (duration == 0.0) return rho;
  DensityMatrix out = unitary_evolution(rho, duration, h);
  return apply_relaxation(out, duration, relax, relax.t1_nuclear_dark);
}

}  // namespace qsa::qsys
