#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "kinkxxz/half_int.hpp"

namespace kinkxxz {

/// (J, L, M): spin, half-length of the chain [-L, L], total magnetization.
struct SectorKey {
  HalfInt spin;
  int length = 0;
  HalfInt magnetization;

  int sites() const { return 2 * length + 1; }
  std::string to_string() const;
  friend bool operator==(const SectorKey&, const SectorKey&) = default;
};

/// An Ising basis label: one local S^3 eigenvalue per site alpha in [-L, L].
class IsingConfig {
 public:
  /// `values[i]` is m at site alpha = i - L. Throws std::invalid_argument if
  /// the length is not 2L+1 or a value is not a level of spin J.
  IsingConfig(HalfInt spin, int length, std::vector<HalfInt> values);

  HalfInt spin() const { return spin_; }
  int length() const { return length_; }
  int sites() const { return 2 * length_ + 1; }

  /// m at site alpha in [-L, L].
  HalfInt m(int alpha) const;
  std::span<const HalfInt> values() const { return values_; }
  HalfInt magnetization() const;

  /// k_alpha = J - m_alpha in [0, 2J], the site's "down quanta".
  std::vector<int> quanta() const;
  static IsingConfig from_quanta(HalfInt spin, int length, std::span<const int> quanta);

  std::string to_string() const;
  friend bool operator==(const IsingConfig&, const IsingConfig&) = default;

 private:
  HalfInt spin_;
  int length_;
  std::vector<HalfInt> values_;
};

/// Number of configurations with sum m_alpha = M. Exact; throws
/// std::overflow_error past 2^64. Unreachable M gives 0.
std::uint64_t sector_dimension(HalfInt spin, int length, HalfInt magnetization);

/// Every valid M for (J, L), ascending: -J(2L+1), ..., J(2L+1).
std::vector<HalfInt> sector_magnetizations(HalfInt spin, int length);

/// Ordered enumeration of one magnetization sector.
///
/// Order: lexicographic over (m_{-L}, ..., m_L), site -L most significant,
/// larger m first. Internally a config is its quanta vector k = J - m, so
/// the order is plain ascending-lexicographic in k with sum(k) fixed.
/// Ranking uses a per-site offset table so rank() is O(sites) and
/// unrank() O(sites * (2J+1)).
class SectorBasis {
 public:
  SectorBasis(HalfInt spin, int length, HalfInt magnetization);

  const SectorKey& key() const { return key_; }
  HalfInt spin() const { return key_.spin; }
  int length() const { return key_.length; }
  int sites() const { return key_.sites(); }
  HalfInt magnetization() const { return key_.magnetization; }
  std::uint64_t dim() const { return dim_; }
  int two_j() const { return two_j_; }
  /// sum of quanta over the chain.
  int total_quanta() const { return total_; }

  std::uint64_t rank(const IsingConfig& c) const;
  IsingConfig unrank(std::uint64_t index) const;
  std::vector<IsingConfig> members() const;

  // Quanta-level access for the kernels. `quanta` has sites() entries.
  std::uint64_t rank_quanta(std::span<const int> quanta) const;
  void unrank_quanta(std::uint64_t index, std::span<int> quanta) const;
  /// Advances to the lexicographic successor; false past the last member.
  bool next_quanta(std::span<int> quanta) const;
  /// Rank contribution of value k at site position `pos` (0-based from -L)
  /// when `remaining` quanta are left for positions pos..sites()-1.
  std::uint64_t offset(int pos, int remaining, int k) const {
    return offsets_[(static_cast<std::size_t>(pos) * (total_ + 1) + remaining) * (two_j_ + 2) + k];
  }

 private:
  SectorKey key_;
  int two_j_;
  int total_;
  std::uint64_t dim_ = 0;
  // offsets_[pos][rem][k] = number of members whose quanta at `pos` is < k,
  // given `rem` quanta left for positions pos.., counted over completions.
  std::vector<std::uint64_t> offsets_;
};

inline SectorBasis enumerate_sector(HalfInt spin, int length, HalfInt magnetization) {
  return SectorBasis(spin, length, magnetization);
}

}  // namespace kinkxxz
