#include "qsa/qsys/spin_basis.hpp"

namespace qsa::qsys {

SpinBasis SpinBasis::two_level_electron() {
  return SpinBasis({0.0, -1.0}, {+0.5, -0.5});
}

SpinBasis SpinBasis::three_level_electron() {
  return SpinBasis({0.0, -1.0, +1.0}, {+0.5, -0.5});
}

}  // namespace qsa::qsys
