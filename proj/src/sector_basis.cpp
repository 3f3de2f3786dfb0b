#include "kinkxxz/sector_basis.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace kinkxxz {

namespace {

void check_chain(HalfInt spin, int length) {
  if (spin.twice() < 1) throw std::invalid_argument("spin must be >= 1/2, got " + spin.to_string());
  if (length < 1) throw std::invalid_argument("length L must be >= 1");
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("sector count exceeds 64 bits");
  return r;
}

/// Total quanta sum(J - m) for the sector, or -1 if M is unreachable.
std::int64_t sector_quanta(HalfInt spin, int length, HalfInt magnetization) {
  const std::int64_t sites = 2 * static_cast<std::int64_t>(length) + 1;
  const std::int64_t twice = spin.twice() * sites - magnetization.twice();
  if (twice < 0 || twice % 2 != 0 || twice > 2 * spin.twice() * sites) return -1;
  return twice / 2;
}

/// ways[s][r]: fillings of s sites with quanta in [0, 2J] summing to r.
std::vector<std::vector<std::uint64_t>> suffix_counts(int two_j, int sites, int total) {
  std::vector<std::vector<std::uint64_t>> ways(sites + 1, std::vector<std::uint64_t>(total + 1, 0));
  ways[0][0] = 1;
  for (int s = 1; s <= sites; ++s)
    for (int r = 0; r <= total; ++r) {
      std::uint64_t acc = 0;
      for (int k = 0; k <= std::min(two_j, r); ++k) acc = checked_add(acc, ways[s - 1][r - k]);
      ways[s][r] = acc;
    }
  return ways;
}

}  // namespace

std::string SectorKey::to_string() const {
  return "(J=" + spin.to_string() + ", L=" + std::to_string(length) + ", M=" + magnetization.to_string() + ")";
}

IsingConfig::IsingConfig(HalfInt spin, int length, std::vector<HalfInt> values)
    : spin_(spin), length_(length), values_(std::move(values)) {
  check_chain(spin, length);
  if (static_cast<int>(values_.size()) != sites())
    throw std::invalid_argument("config needs " + std::to_string(sites()) + " sites, got " +
                                std::to_string(values_.size()));
  for (HalfInt m : values_)
    if (m < -spin || m > spin || (spin - m).twice() % 2 != 0)
      throw std::invalid_argument("m=" + m.to_string() + " is not a level of spin " + spin.to_string());
}

HalfInt IsingConfig::m(int alpha) const {
  if (alpha < -length_ || alpha > length_) throw std::out_of_range("site outside [-L, L]");
  return values_[static_cast<std::size_t>(alpha + length_)];
}

HalfInt IsingConfig::magnetization() const {
  HalfInt total;
  for (HalfInt m : values_) total += m;
  return total;
}

std::vector<int> IsingConfig::quanta() const {
  std::vector<int> k(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) k[i] = static_cast<int>((spin_ - values_[i]).twice() / 2);
  return k;
}

IsingConfig IsingConfig::from_quanta(HalfInt spin, int length, std::span<const int> quanta) {
  std::vector<HalfInt> v(quanta.size());
  for (std::size_t i = 0; i < quanta.size(); ++i) v[i] = spin - HalfInt::from_int(quanta[i]);
  return IsingConfig(spin, length, std::move(v));
}

std::string IsingConfig::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) s += ",";
    s += values_[i].to_string();
  }
  return s + ")";
}

std::uint64_t sector_dimension(HalfInt spin, int length, HalfInt magnetization) {
  check_chain(spin, length);
  const std::int64_t total = sector_quanta(spin, length, magnetization);
  if (total < 0) return 0;
  const int sites = 2 * length + 1;
  // One-row rolling DP.
  const int two_j = static_cast<int>(spin.twice());
  std::vector<std::uint64_t> cur(static_cast<std::size_t>(total) + 1, 0), next(cur.size());
  cur[0] = 1;
  for (int s = 0; s < sites; ++s) {
    std::fill(next.begin(), next.end(), 0);
    for (std::int64_t r = 0; r <= total; ++r) {
      if (cur[r] == 0) continue;
      for (int k = 0; k <= two_j && r + k <= total; ++k) next[r + k] = checked_add(next[r + k], cur[r]);
    }
    std::swap(cur, next);
  }
  return cur[static_cast<std::size_t>(total)];
}

std::vector<HalfInt> sector_magnetizations(HalfInt spin, int length) {
  check_chain(spin, length);
  const std::int64_t top = spin.twice() * (2 * static_cast<std::int64_t>(length) + 1);
  std::vector<HalfInt> out;
  for (std::int64_t t = -top; t <= top; t += 2) out.push_back(HalfInt::from_twice(t));
  return out;
}

SectorBasis::SectorBasis(HalfInt spin, int length, HalfInt magnetization)
    : key_{spin, length, magnetization}, two_j_(0), total_(0) {
  check_chain(spin, length);
  const std::int64_t total = sector_quanta(spin, length, magnetization);
  if (total < 0)
    throw std::invalid_argument("unreachable sector " + key_.to_string());
  if (spin.twice() > 250 || total > std::numeric_limits<int>::max() / 2)
    throw std::invalid_argument("sector too large: " + key_.to_string());
  two_j_ = static_cast<int>(spin.twice());
  total_ = static_cast<int>(total);

  const int n = sites();
  const auto ways = suffix_counts(two_j_, n, total_);
  dim_ = ways[n][total_];

  offsets_.assign(static_cast<std::size_t>(n) * (total_ + 1) * (two_j_ + 2), 0);
  for (int pos = 0; pos < n; ++pos) {
    const int tail = n - 1 - pos;
    for (int rem = 0; rem <= total_; ++rem) {
      std::uint64_t acc = 0;
      std::size_t base = (static_cast<std::size_t>(pos) * (total_ + 1) + rem) * (two_j_ + 2);
      offsets_[base] = 0;
      for (int k = 0; k <= two_j_; ++k) {
        if (k <= rem) acc = checked_add(acc, ways[tail][rem - k]);
        offsets_[base + k + 1] = acc;
      }
    }
  }
}

std::uint64_t SectorBasis::rank_quanta(std::span<const int> quanta) const {
  if (static_cast<int>(quanta.size()) != sites()) throw std::invalid_argument("rank: wrong number of sites");
  std::uint64_t r = 0;
  int rem = total_;
  for (int pos = 0; pos < sites(); ++pos) {
    const int k = quanta[pos];
    if (k < 0 || k > two_j_ || k > rem) throw std::invalid_argument("rank: config is not in sector " + key_.to_string());
    r += offset(pos, rem, k);
    rem -= k;
  }
  if (rem != 0) throw std::invalid_argument("rank: config is not in sector " + key_.to_string());
  return r;
}

void SectorBasis::unrank_quanta(std::uint64_t index, std::span<int> quanta) const {
  if (index >= dim_)
    throw std::out_of_range("unrank: index " + std::to_string(index) + " outside [0, " + std::to_string(dim_) + ")");
  int rem = total_;
  for (int pos = 0; pos < sites(); ++pos) {
    // largest k with offset(pos, rem, k) <= index
    int k = 0;
    while (k < two_j_ && k < rem && offset(pos, rem, k + 1) <= index) ++k;
    index -= offset(pos, rem, k);
    quanta[pos] = k;
    rem -= k;
  }
}

bool SectorBasis::next_quanta(std::span<int> quanta) const {
  const int n = sites();
  int suffix = quanta[n - 1];
  for (int i = n - 2; i >= 0; --i) {
    if (quanta[i] < two_j_ && suffix >= 1) {
      ++quanta[i];
      int rem = suffix - 1;
      // smallest tail: pack quanta to the right
      for (int j = n - 1; j > i; --j) {
        quanta[j] = std::min(rem, two_j_);
        rem -= quanta[j];
      }
      return true;
    }
    suffix += quanta[i];
  }
  return false;
}

std::uint64_t SectorBasis::rank(const IsingConfig& c) const {
  if (c.spin() != key_.spin || c.length() != key_.length)
    throw std::invalid_argument("rank: config chain does not match sector " + key_.to_string());
  if (c.magnetization() != key_.magnetization)
    throw std::invalid_argument("rank: config " + c.to_string() + " has M=" + c.magnetization().to_string() +
                                ", sector " + key_.to_string());
  const auto k = c.quanta();
  return rank_quanta(k);
}

IsingConfig SectorBasis::unrank(std::uint64_t index) const {
  std::vector<int> k(static_cast<std::size_t>(sites()));
  unrank_quanta(index, k);
  return IsingConfig::from_quanta(key_.spin, key_.length, k);
}

std::vector<IsingConfig> SectorBasis::members() const {
  std::vector<IsingConfig> out;
  out.reserve(static_cast<std::size_t>(dim_));
  std::vector<int> k(static_cast<std::size_t>(sites()));
  unrank_quanta(0, k);
  do {
    out.push_back(IsingConfig::from_quanta(key_.spin, key_.length, k));
  } while (next_quanta(k));
  return out;
}

}  // namespace kinkxxz
