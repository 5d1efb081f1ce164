#include "qsa/qsys/hamiltonian.hpp"

#include <cmath>
#include <stdexcept>

namespace qsa::qsys {

namespace {

Eigen::MatrixXcd assemble(const FieldConfig& field, const HyperfineParams& hf,
                          const SpinBasis& basis, bool include_electron_terms) {
  field.validate();
  hf.validate();
  const int dim = basis.dimension();
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  const double b = field.b0_tesla;
  for (int e = 0; e < basis.n_electron(); ++e) {
    const double ms = basis.electron_ms(e);
    const double electron_part =
        include_electron_terms
            ? field.zero_field_splitting * ms * ms + field.gamma_e * b * ms
            : 0.0;
    for (int n = 0; n < basis.n_nuclear(); ++n) {
      const double mi = basis.nuclear_mi(n);
      const int i = basis.index_of(e, n);
      h(i, i) = electron_part - field.gamma_n * b * mi + hf.a_parallel * ms * mi;
    }
    // a_perp couples the nuclear levels within one electron manifold
    // (Sz * Ix is electron-diagonal).
    const int i0 = basis.index_of(e, 0);
    const int i1 = basis.index_of(e, 1);
    const double off = 0.5 * hf.a_perp * ms;
    h(i0, i1) += off;
    h(i1, i0) += off;
  }
  return h;
}

}  // namespace

Eigen::MatrixXcd build_hamiltonian(const FieldConfig& field,
                                   const HyperfineParams& hf,
                                   const SpinBasis& basis) {
  return assemble(field, hf, basis, true);
}

Eigen::MatrixXcd rotating_frame_hamiltonian(const FieldConfig& field,
                                            const HyperfineParams& hf,
                                            const SpinBasis& basis) {
  return assemble(field, hf, basis, false);
}

Eigen::Matrix2cd conditional_nuclear_hamiltonian(const FieldConfig& field,
                                                 const HyperfineParams& hf,
                                                 double m_s) {
  const double z = -field.gamma_n * field.b0_tesla + hf.a_parallel * m_s;
  const double x = hf.a_perp * m_s;
  Eigen::Matrix2cd h;
  h << 0.5 * z, 0.5 * x,
       0.5 * x, -0.5 * z;
  return h;
}

double conditional_nuclear_frequency_hz(const FieldConfig& field,
                                        const HyperfineParams& hf, double m_s) {
  const double z = -field.gamma_n * field.b0_tesla + hf.a_parallel * m_s;
  const double x = hf.a_perp * m_s;
  return std::hypot(z, x) / two_pi;
}

TransitionTable transition_frequencies(const Eigen::MatrixXcd& h,
                                       const SpinBasis& basis,
                                       double degeneracy_tol_hz) {
  if (basis.n_electron() != 2)
    throw std::invalid_argument("transition_frequencies: requires the 2-level electron basis");
  if (h.rows() != basis.dimension() || h.cols() != basis.dimension())
    throw std::invalid_argument("transition_frequencies: dimension mismatch");
  const double scale = h.cwiseAbs().maxCoeff();
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-9 * std::max(scale, 1.0))
    throw std::invalid_argument("transition_frequencies: H not Hermitian");

  const int nn = basis.n_nuclear();
  if (h.block(0, nn, nn, nn).cwiseAbs().maxCoeff() > 1e-9 * std::max(scale, 1.0))
    throw std::invalid_argument("transition_frequencies: H couples electron manifolds");

  // Exact eigenlevels per electron manifold; each eigenstate is matched to
  // its dominant nuclear basis state so the table can address level pairs.
  struct Manifold {
    std::array<double, 2> energy;     // by nuclear index
    std::array<int, 2> level_index;   // basis index carrying that branch
  };
  std::array<Manifold, 2> manifolds;
  for (int e = 0; e < 2; ++e) {
    Eigen::Matrix2cd block = h.block(e * nn, e * nn, nn, nn);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(block);
    const auto& vecs = es.eigenvectors();
    int dom0 = std::abs(vecs(0, 0)) >= std::abs(vecs(1, 0)) ? 0 : 1;
    const int dom1 = 1 - dom0;
    manifolds[e].energy[dom0] = es.eigenvalues()(0);
    manifolds[e].energy[dom1] = es.eigenvalues()(1);
    manifolds[e].level_index[dom0] = basis.index_of(e, dom0);
    manifolds[e].level_index[dom1] = basis.index_of(e, dom1);
  }

  auto make_line = [&](int e_a, int n_a, int e_b, int n_b) {
    TransitionTable::Line line;
    const double ea = manifolds[e_a].energy[n_a];
    const double eb = manifolds[e_b].energy[n_b];
    const int ia = basis.index_of(e_a, n_a);
    const int ib = basis.index_of(e_b, n_b);
    line.lower = ea <= eb ? ia : ib;
    line.upper = ea <= eb ? ib : ia;
    line.frequency_hz = std::abs(eb - ea) / two_pi;
    return line;
  };

  TransitionTable table;
  // Electron lines: one per conserved nuclear branch.
  TransitionTable::Line mw_n0 = make_line(0, 0, 1, 0);
  TransitionTable::Line mw_n1 = make_line(0, 1, 1, 1);
  table.mw_degenerate =
      std::abs(mw_n0.frequency_hz - mw_n1.frequency_hz) < degeneracy_tol_hz;
  if (!table.mw_degenerate && mw_n1.frequency_hz < mw_n0.frequency_hz) {
    table.mw1 = mw_n1;
    table.mw2 = mw_n0;
    table.memory_zero_nuclear_index = 1;
  } else {
    table.mw1 = mw_n0;
    table.mw2 = mw_n1;
    table.memory_zero_nuclear_index = 0;
  }
  // Nuclear lines: rf1 lives in the m_S = 0 manifold, rf2 in m_S = -1.
  table.rf1 = make_line(0, 0, 0, 1);
  table.rf2 = make_line(1, 0, 1, 1);
  table.rf_degenerate =
      std::abs(table.rf1.frequency_hz - table.rf2.frequency_hz) < degeneracy_tol_hz;
  return table;
}

const char* to_string(Transition t) {
  switch (t) {
    case Transition::mw1: return "mw1";
    case Transition::mw2: return "mw2";
    case Transition::rf1: return "rf1";
    default: return "rf2";
  }
}

}  // namespace qsa::qsys
