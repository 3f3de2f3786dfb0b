#pragma once

#include <memory>
#include <vector>

#include "kinkxxz/sector_basis.hpp"

namespace kinkxxz {

/// Delta = (q + 1/q) / 2 with q in (0, 1].
struct QParameter {
  double q = 1.0;
  double delta = 1.0;
};

/// Root of Delta = (q + 1/q)/2 in (0, 1]. Throws for delta < 1.
QParameter q_from_delta(double delta);

/// A state restricted to one sector, amplitude per config rank.
struct SectorVector {
  std::shared_ptr<const SectorBasis> basis;
  std::vector<double> amplitudes;
  double norm = 0.0;
};

/// The kink ground state
///   psi_M(c) ~ prod_alpha binom(2J, J - m_alpha)^{1/2} q^{alpha (J - m_alpha)},
/// built in log space, shifted by its maximum, then normalized.
/// Requires delta > 1.
SectorVector groundstate_vector(std::shared_ptr<const SectorBasis> basis, double delta);
SectorVector groundstate_vector(HalfInt spin, int length, HalfInt magnetization, double delta);

/// <S^3_alpha> for alpha = -L..L of a normalized sector vector.
std::vector<double> magnetization_profile(const SectorVector& v);

}  // namespace kinkxxz
