#pragma once

#include <vector>

namespace qsa::qsys {

// Product basis of the electron spin levels and one I=1/2 nucleus.
// Index layout is fixed: index = electron_index * n_nuclear + nuclear_index,
// electron levels in the listed m_S order, nuclear levels {+1/2, -1/2}.
class SpinBasis {
 public:
  // Default sensing subspace m_S in {0, -1}.
  static SpinBasis two_level_electron();
  // Full S=1 electron {0, -1, +1}; used to study single-transition
  // decoupling leakage, not enabled in the standard protocol.
  static SpinBasis three_level_electron();

  int n_electron() const { return static_cast<int>(electron_ms_.size()); }
  int n_nuclear() const { return static_cast<int>(nuclear_mi_.size()); }
  int dimension() const { return n_electron() * n_nuclear(); }

  double electron_ms(int e) const { return electron_ms_[e]; }
  double nuclear_mi(int n) const { return nuclear_mi_[n]; }

  int index_of(int e, int n) const { return e * n_nuclear() + n; }
  int electron_index(int basis_index) const { return basis_index / n_nuclear(); }
  int nuclear_index(int basis_index) const { return basis_index % n_nuclear(); }

  bool operator==(const SpinBasis&) const = default;

 private:
  SpinBasis(std::vector<double> ms, std::vector<double> mi)
      : electron_ms_(std::move(ms)), nuclear_mi_(std::move(mi)) {}

  std::vector<double> electron_ms_;
  std::vector<double> nuclear_mi_;
};

}  // namespace qsa::qsys
