#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "kinkxxz/half_int.hpp"
#include "kinkxxz/sector_basis.hpp"

namespace kinkxxz {

/// Label (x, m) of the unique Ising ground configuration Psi_0(x, m) of a
/// sector: m_alpha = -J left of x, m at x, +J right of x, M = -2Jx + m.
///
/// Psi_0(x-1, -J) and Psi_0(x, J) are the same configuration; the canonical
/// label keeps m in (-J, J]. The only sector that needs m = -J is the fully
/// polarized down one, labelled (L, -J).
struct GroundDescriptor {
  int x = 0;
  HalfInt m;
  bool canonical = true;
  friend bool operator==(const GroundDescriptor&, const GroundDescriptor&) = default;
};

enum class KinkSign { plus, minus };

/// A localized kink excitation Psi_n^{+/-}(x, m).
struct KinkExcitation {
  KinkSign sign = KinkSign::plus;
  int n = 1;
  std::int64_t energy = 0;
  IsingConfig config;
};

struct ExcitationLevel {
  int n = 0;
  std::int64_t energy = 0;
  friend bool operator==(const ExcitationLevel&, const ExcitationLevel&) = default;
};

/// K_+(m) and K_-(m): the n with 1 <= n <= J -/+ m and E_{+/-}(m, n) < 2J.
struct ExcitationSets {
  std::vector<ExcitationLevel> plus;
  std::vector<ExcitationLevel> minus;
};

struct SpectralLevel {
  std::int64_t energy = 0;
  int multiplicity = 0;
  friend bool operator==(const SpectralLevel&, const SpectralLevel&) = default;
};

struct IsolationDistance {
  std::int64_t value = 1;
  /// false when the sector was too large to enumerate and `value` is the
  /// general lower bound 1.
  bool exact = true;
};

struct DegeneratePair {
  int a = 0;
  int b = 0;
  HalfInt m;
  std::int64_t energy = 0;
  /// true for the spin-flipped partner (Psi_1^- vs Psi_{a-1}^+ at -m).
  bool mirrored = false;
};

/// Canonical ground label; throws std::invalid_argument for unreachable M.
GroundDescriptor ground_descriptor(HalfInt spin, int length, HalfInt magnetization);
IsingConfig ground_config(HalfInt spin, int length, const GroundDescriptor& g);

/// Bulk sector: some label (x, m) has x in [-L+1, L-1], so the kink has a
/// neighbour on both sides.
bool is_bulk_sector(HalfInt spin, int length, HalfInt magnetization);

/// E_{+/-}(m, n) = n^2 + (J +/- m) n.
std::int64_t localized_kink_energy(HalfInt spin, HalfInt m, KinkSign sign, int n);

/// Psi_n^{+/-}(x, m). Throws std::invalid_argument if n is outside
/// [1, J -/+ m] or the pattern does not fit on [-L, L].
KinkExcitation kink_excitation(HalfInt spin, int length, int x, HalfInt m, KinkSign sign, int n);

ExcitationSets excitation_sets(HalfInt spin, HalfInt m);

/// Ising-limit spectrum on [0, 2J) for a bulk sector: the ground level plus
/// the merged K_+ and K_- energies. nullopt for edge sectors, where the
/// excitation patterns do not fit and only numerics apply.
std::optional<std::vector<SpectralLevel>> predicted_low_spectrum(HalfInt spin, int length, HalfInt magnetization);

/// Distance from E to the nearest other Ising energy in the sector.
/// Throws std::invalid_argument if E is not an Ising energy of the sector.
IsolationDistance isolation_distance(HalfInt spin, int length, HalfInt magnetization, std::int64_t energy,
                                     std::uint64_t enumeration_cap = 1'000'000);

/// Factorizations 2J = ab, 2 <= a <= b, and the pair each one degenerates.
std::vector<DegeneratePair> degenerate_pairs(HalfInt spin);

/// Explicit energy-2J configurations: the kink site shifted by one quantum,
/// compensated by a single flipped spin at some y away from the kink (one
/// config per admissible y on either side).
std::vector<IsingConfig> band_edge_configs(HalfInt spin, int length, HalfInt magnetization);
std::uint64_t band_edge_multiplicity_lower_bound(HalfInt spin, int length, HalfInt magnetization);

/// A pattern that forces energy >= 2J: a strict descent m_x > m_{x+1}, or
/// m_{x-1} > -J and m_{x+1} < J for some interior x.
bool has_high_energy_pattern(const IsingConfig& c);

/// Histogram of Ising energies over the whole sector.
std::map<std::int64_t, std::uint64_t> ising_level_counts(const SectorBasis& basis);

}  // namespace kinkxxz
