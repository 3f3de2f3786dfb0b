#include "kinkxxz/spin_algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace kinkxxz {

std::int64_t ladder_radicand(HalfInt spin, HalfInt m, Ladder dir) {
  const std::int64_t tj = spin.twice();
  const std::int64_t tm = m.twice();
  if (tj < 0 || tm < -tj || tm > tj || (tj - tm) % 2 != 0)
    throw std::invalid_argument("m=" + m.to_string() + " is not a level of spin " + spin.to_string());
  // Both factors are even in doubled units.
  if (dir == Ladder::up) return ((tj - tm) / 2) * ((tj + tm + 2) / 2);
  return ((tj + tm) / 2) * ((tj - tm + 2) / 2);
}

double ladder_coefficient(HalfInt spin, HalfInt m, Ladder dir) {
  return std::sqrt(static_cast<double>(ladder_radicand(spin, m, dir)));
}

SpinMatrices spin_matrices(HalfInt spin) {
  if (spin.twice() < 1) throw std::invalid_argument("spin_matrices needs J >= 1/2");
  const int d = static_cast<int>(spin.twice()) + 1;
  SpinMatrices out{{Eigen::MatrixXd::Zero(d, d)}, {Eigen::MatrixXd::Zero(d, d)}, {Eigen::MatrixXd::Zero(d, d)}};
  for (int a = 0; a < d; ++a) {
    const HalfInt m = spin - HalfInt::from_int(a);
    out.s3.entries(a, a) = m.value();
    // S+|m> lands on row a-1 (m+1), S-|m> on row a+1 (m-1).
    if (a > 0) out.splus.entries(a - 1, a) = ladder_coefficient(spin, m, Ladder::up);
    if (a + 1 < d) out.sminus.entries(a + 1, a) = ladder_coefficient(spin, m, Ladder::down);
  }
  return out;
}

}  // namespace kinkxxz
