#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>

#include "kinkxxz/half_int.hpp"
#include "kinkxxz/sector_basis.hpp"
#include "kinkxxz/sparse.hpp"

namespace kinkxxz {

/// e^k(m, m') = (J + m)(J - m'). Nonnegative integer.
std::int64_t ising_bond_energy(HalfInt spin, HalfInt m, HalfInt m_right);

/// E^k(c): sum of the 2L bond energies.
std::int64_t ising_config_energy(const IsingConfig& c);

/// Which operator to restrict to a sector.
///   kink       H^k(d)   = H^k(0) + d H1 + (1 - sqrt(1-d^2)) H2
///   antikink   H^ak(d)  = H(d) + sqrt(1-d^2) H2
///   ising_kink H^k(0)   diagonal, entries E^k
///   ising_free H(0)     = H^k(0) + H2
///   h1         H1 = -sum (S+S- + S-S+)/2, hopping only
///   h2         H2 = J (S3_L - S3_{-L}), diagonal
enum class Variant { kink, antikink, ising_kink, ising_free, h1, h2 };

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view name);

/// A Hamiltonian restricted to one magnetization sector; rows are config
/// ranks in the basis it was built on.
struct SectorOperator {
  std::shared_ptr<const SectorBasis> basis;
  Variant variant = Variant::kink;
  double delta_inv = 0.0;
  CsrMatrix matrix;

  const SectorKey& key() const { return basis->key(); }
  std::uint64_t dim() const { return matrix.rows; }
  /// y = H x (row-parallel).
  void apply(std::span<const double> x, std::span<double> y) const;
};

/// Throws std::invalid_argument for delta_inv outside [0, 1].
SectorOperator build_sector_operator(std::shared_ptr<const SectorBasis> basis, Variant variant,
                                     double delta_inv = 0.0);
SectorOperator build_sector_operator(HalfInt spin, int length, HalfInt magnetization, Variant variant,
                                     double delta_inv = 0.0);

/// Diagonal of kink/antikink/ising_free computed from the original
/// boundary-field form sum(J^2 - m m') -/+ J sqrt(1-d^2)(m_{-L} - m_L)
/// instead of the expansion. Used to cross-check the builder.
double direct_diagonal(const IsingConfig& c, Variant variant, double delta_inv);

}  // namespace kinkxxz
