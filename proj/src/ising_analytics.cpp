#include "kinkxxz/ising_analytics.hpp"

#include <limits>
#include <stdexcept>

#include "kinkxxz/kernels.hpp"

namespace kinkxxz {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

IsingConfig config_from(HalfInt spin, int length, const std::vector<HalfInt>& v) {
  return IsingConfig(spin, length, v);
}

std::vector<HalfInt> kink_profile(HalfInt spin, int length, int x) {
  // -J left of x, +J from x on; caller overwrites site x.
  std::vector<HalfInt> v(static_cast<std::size_t>(2 * length + 1));
  for (int a = -length; a <= length; ++a) v[static_cast<std::size_t>(a + length)] = a < x ? -spin : spin;
  return v;
}

HalfInt& at(std::vector<HalfInt>& v, int length, int alpha) { return v[static_cast<std::size_t>(alpha + length)]; }

}  // namespace

GroundDescriptor ground_descriptor(HalfInt spin, int length, HalfInt magnetization) {
  if (sector_dimension(spin, length, magnetization) == 0)
    throw std::invalid_argument("unreachable sector M=" + magnetization.to_string());
  const std::int64_t tj = spin.twice();
  const std::int64_t tm = magnetization.twice();
  // largest x with m = M + 2Jx <= J, which puts m in (-J, J]
  std::int64_t x = floor_div(tj - tm, 2 * tj);
  if (x == length + 1) return {length, -spin, true};
  return {static_cast<int>(x), HalfInt::from_twice(tm + 2 * tj * x), true};
}

IsingConfig ground_config(HalfInt spin, int length, const GroundDescriptor& g) {
  auto v = kink_profile(spin, length, g.x + 1);
  at(v, length, g.x) = g.m;
  return config_from(spin, length, v);
}

bool is_bulk_sector(HalfInt spin, int length, HalfInt magnetization) {
  const GroundDescriptor g = ground_descriptor(spin, length, magnetization);
  if (g.x >= -length + 1 && g.x <= length - 1) return true;
  // (L, J) is also (L-1, -J)
  return g.x == length && g.m == spin;
}

std::int64_t localized_kink_energy(HalfInt spin, HalfInt m, KinkSign sign, int n) {
  const HalfInt shift = sign == KinkSign::plus ? spin + m : spin - m;
  return static_cast<std::int64_t>(n) * n + (shift.twice() / 2) * n;
}

KinkExcitation kink_excitation(HalfInt spin, int length, int x, HalfInt m, KinkSign sign, int n) {
  const HalfInt room = sign == KinkSign::plus ? spin - m : spin + m;
  if (n < 1 || HalfInt::from_int(n) > room)
    throw std::invalid_argument("n=" + std::to_string(n) + " outside [1, " + room.to_string() + "]");
  auto v = kink_profile(spin, length, x + 1);
  if (sign == KinkSign::plus) {
    if (x < -length || x + 1 > length) throw std::invalid_argument("Psi+ needs sites x, x+1 inside the chain");
    at(v, length, x) = m + HalfInt::from_int(n);
    at(v, length, x + 1) = spin - HalfInt::from_int(n);
  } else {
    if (x - 1 < -length || x > length) throw std::invalid_argument("Psi- needs sites x-1, x inside the chain");
    at(v, length, x - 1) = -spin + HalfInt::from_int(n);
    at(v, length, x) = m - HalfInt::from_int(n);
  }
  return {sign, n, localized_kink_energy(spin, m, sign, n), config_from(spin, length, v)};
}

ExcitationSets excitation_sets(HalfInt spin, HalfInt m) {
  if (m < -spin || m > spin) throw std::invalid_argument("m outside [-J, J]");
  ExcitationSets out;
  const std::int64_t band = spin.twice();
  for (KinkSign sign : {KinkSign::plus, KinkSign::minus}) {
    const std::int64_t top = (sign == KinkSign::plus ? spin - m : spin + m).twice() / 2;
    auto& dst = sign == KinkSign::plus ? out.plus : out.minus;
    for (int n = 1; n <= top; ++n) {
      const std::int64_t e = localized_kink_energy(spin, m, sign, n);
      if (e < band) dst.push_back({n, e});
    }
  }
  return out;
}

std::optional<std::vector<SpectralLevel>> predicted_low_spectrum(HalfInt spin, int length, HalfInt magnetization) {
  if (!is_bulk_sector(spin, length, magnetization)) return std::nullopt;
  const GroundDescriptor g = ground_descriptor(spin, length, magnetization);
  std::map<std::int64_t, int> levels{{0, 1}};
  const ExcitationSets k = excitation_sets(spin, g.m);
  for (const auto& l : k.plus) ++levels[l.energy];
  for (const auto& l : k.minus) ++levels[l.energy];
  std::vector<SpectralLevel> out;
  for (auto [e, mult] : levels) out.push_back({e, mult});
  return out;
}

IsolationDistance isolation_distance(HalfInt spin, int length, HalfInt magnetization, std::int64_t energy,
                                     std::uint64_t enumeration_cap) {
  const std::uint64_t dim = sector_dimension(spin, length, magnetization);
  if (dim == 0) throw std::invalid_argument("unreachable sector M=" + magnetization.to_string());
  if (dim > enumeration_cap) {
    bool known = energy == 0;
    if (auto low = predicted_low_spectrum(spin, length, magnetization))
      for (const auto& l : *low) known = known || l.energy == energy;
    if (!known)
      throw std::invalid_argument("energy " + std::to_string(energy) + " is not a certified Ising level of the sector");
    return {1, false};
  }
  const auto counts = ising_level_counts(SectorBasis(spin, length, magnetization));
  if (!counts.contains(energy))
    throw std::invalid_argument("energy " + std::to_string(energy) + " is not in the Ising spectrum of the sector");
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& [e, c] : counts)
    if (e != energy) best = std::min(best, e > energy ? e - energy : energy - e);
  return {best, true};
}

std::vector<DegeneratePair> degenerate_pairs(HalfInt spin) {
  if (spin.twice() < 1) throw std::invalid_argument("spin must be >= 1/2");
  const std::int64_t tj = spin.twice();
  std::vector<DegeneratePair> out;
  for (std::int64_t a = 2; a * a <= tj; ++a) {
    if (tj % a != 0) continue;
    const std::int64_t b = tj / a;
    const HalfInt m = spin + HalfInt::from_int(a - b - 2);
    const std::int64_t e = tj - 1 + a - b;
    out.push_back({static_cast<int>(a), static_cast<int>(b), m, e, false});
    if (m != HalfInt{}) out.push_back({static_cast<int>(a), static_cast<int>(b), -m, e, true});
  }
  return out;
}

std::vector<IsingConfig> band_edge_configs(HalfInt spin, int length, HalfInt magnetization) {
  const GroundDescriptor g = ground_descriptor(spin, length, magnetization);
  std::vector<IsingConfig> out;
  const HalfInt one = HalfInt::from_int(1);
  if (g.m == -spin) return out;  // fully polarized down, one-dimensional

  // y to the left of the kink, relative to Psi_0(x, m): site x drops by one
  for (int y = -length; y <= g.x - 2; ++y) {
    auto v = kink_profile(spin, length, g.x + 1);
    at(v, length, g.x) = g.m - one;
    at(v, length, y) = -spin + one;
    out.push_back(config_from(spin, length, v));
  }
  if (g.m == spin) {
    // right side relative to Psi_0(x-1, -J)
    const int x = g.x - 1;
    if (x >= -length) {
      for (int y = x + 2; y <= length; ++y) {
        auto v = kink_profile(spin, length, x + 1);
        at(v, length, x) = -spin + one;
        at(v, length, y) = spin - one;
        out.push_back(config_from(spin, length, v));
      }
    }
  } else {
    for (int y = g.x + 2; y <= length; ++y) {
      auto v = kink_profile(spin, length, g.x + 1);
      at(v, length, g.x) = g.m + one;
      at(v, length, y) = spin - one;
      out.push_back(config_from(spin, length, v));
    }
  }
  return out;
}

std::uint64_t band_edge_multiplicity_lower_bound(HalfInt spin, int length, HalfInt magnetization) {
  return band_edge_configs(spin, length, magnetization).size();
}

bool has_high_energy_pattern(const IsingConfig& c) {
  const auto v = c.values();
  const HalfInt spin = c.spin();
  for (std::size_t p = 0; p + 1 < v.size(); ++p)
    if (v[p] > v[p + 1]) return true;
  for (std::size_t p = 1; p + 1 < v.size(); ++p)
    if (v[p - 1] > -spin && v[p + 1] < spin) return true;
  return false;
}

std::map<std::int64_t, std::uint64_t> ising_level_counts(const SectorBasis& basis) {
  std::map<std::int64_t, std::uint64_t> counts;
  for (std::int64_t e : kernels::omp::ising_energies(basis)) ++counts[e];
  return counts;
}

}  // namespace kinkxxz
