#include "kinkxxz/kink_groundstate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "kinkxxz/kernels.hpp"

namespace kinkxxz {

QParameter q_from_delta(double delta) {
  if (!(delta >= 1.0)) throw std::invalid_argument("delta must be >= 1, got " + std::to_string(delta));
  // 1/(delta + sqrt(delta^2-1)) avoids the cancellation in delta - sqrt(...)
  return {1.0 / (delta + std::sqrt((delta - 1.0) * (delta + 1.0))), delta};
}

SectorVector groundstate_vector(std::shared_ptr<const SectorBasis> basis, double delta) {
  if (!(delta > 1.0)) throw std::invalid_argument("groundstate_vector requires delta > 1");
  const QParameter qp = q_from_delta(delta);
  SectorVector v;
  v.amplitudes = kernels::omp::log_amplitudes(*basis, std::log(qp.q));
  const double top = *std::max_element(v.amplitudes.begin(), v.amplitudes.end());
  for (double& a : v.amplitudes) a = std::exp(a - top);
  const double n = kernels::omp::norm(v.amplitudes);
  if (!(n > 0.0) || !std::isfinite(n)) throw std::runtime_error("ground state amplitudes underflowed");
  kernels::omp::scale(1.0 / n, v.amplitudes);
  v.norm = kernels::omp::norm(v.amplitudes);
  v.basis = std::move(basis);
  return v;
}

SectorVector groundstate_vector(HalfInt spin, int length, HalfInt magnetization, double delta) {
  return groundstate_vector(std::make_shared<const SectorBasis>(spin, length, magnetization), delta);
}

std::vector<double> magnetization_profile(const SectorVector& v) {
  return kernels::omp::site_magnetization(*v.basis, v.amplitudes);
}

}  // namespace kinkxxz
