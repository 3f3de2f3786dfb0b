#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "kinkxxz/sector_basis.hpp"

using namespace kinkxxz;

namespace {
HalfInt h2(int twice) { return HalfInt::from_twice(twice); }

IsingConfig cfg(int two_j, int length, std::vector<int> twice_m) {
  std::vector<HalfInt> v;
  for (int t : twice_m) v.push_back(h2(t));
  return IsingConfig(h2(two_j), length, v);
}
}  // namespace

TEST_CASE("dimensions from brute-force enumeration") {
  CHECK(sector_dimension(h2(1), 2, h2(5)) == 1);
  CHECK(sector_dimension(h2(1), 2, h2(3)) == 5);
  CHECK(sector_dimension(h2(2), 1, h2(0)) == 7);
  CHECK(sector_dimension(h2(2), 1, h2(1)) == 0);
  CHECK(sector_dimension(h2(2), 1, h2(8)) == 0);
  CHECK_THROWS_AS(SectorBasis(h2(2), 1, h2(1)), std::invalid_argument);
}

TEST_CASE("J=1 L=1 M=0 ordering") {
  const SectorBasis b(h2(2), 1, h2(0));
  const std::vector<std::vector<int>> expect{{2, 0, -2}, {2, -2, 0}, {0, 2, -2}, {0, 0, 0},
                                             {0, -2, 2}, {-2, 2, 0}, {-2, 0, 2}};
  const auto members = b.members();
  REQUIRE(members.size() == expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i) {
    CHECK(members[i] == cfg(2, 1, expect[i]));
    CHECK(b.rank(members[i]) == i);
  }
}

TEST_CASE("rank example") {
  const SectorBasis b(h2(1), 1, h2(1));
  CHECK(b.rank(cfg(1, 1, {-1, 1, 1})) == 2);
  CHECK_THROWS(b.rank(cfg(1, 1, {1, 1, 1})));
}

TEST_CASE("sector dimensions add up to the full space and are symmetric in M") {
  for (int tj = 1; tj <= 4; ++tj)
    for (int length = 1; length <= 3; ++length) {
      CAPTURE(tj);
      CAPTURE(length);
      std::uint64_t total = 0;
      for (HalfInt m : sector_magnetizations(h2(tj), length)) {
        const auto d = sector_dimension(h2(tj), length, m);
        CHECK(d > 0);
        CHECK(d == sector_dimension(h2(tj), length, -m));
        total += d;
      }
      std::uint64_t full = 1;
      for (int s = 0; s < 2 * length + 1; ++s) full *= static_cast<std::uint64_t>(tj + 1);
      CHECK(total == full);
    }
}

TEST_CASE("rank/unrank round trip and strictly increasing enumeration") {
  for (int tj = 1; tj <= 4; ++tj)
    for (int length = 1; length <= 3; ++length)
      for (HalfInt m : sector_magnetizations(h2(tj), length)) {
        const SectorBasis b(h2(tj), length, m);
        std::vector<int> q(static_cast<std::size_t>(b.sites())), prev;
        b.unrank_quanta(0, q);
        std::uint64_t i = 0;
        do {
          REQUIRE(b.rank_quanta(q) == i);
          std::vector<int> back(q.size());
          b.unrank_quanta(i, back);
          REQUIRE(back == q);
          if (!prev.empty()) REQUIRE(prev < q);
          int sum = 0;
          for (int k : q) sum += k;
          REQUIRE(sum == b.total_quanta());
          prev = q;
          ++i;
        } while (b.next_quanta(q));
        CHECK(i == b.dim());
        CHECK(b.unrank(b.dim() - 1).magnetization() == m);
        CHECK_THROWS(b.unrank(b.dim()));
      }
}

TEST_CASE("config validation and accessors") {
  CHECK_THROWS_AS(cfg(1, 1, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(cfg(2, 1, {1, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(cfg(2, 1, {4, 0, 0}), std::invalid_argument);
  const IsingConfig c = cfg(3, 1, {-3, 1, 3});
  CHECK(c.m(-1) == h2(-3));
  CHECK(c.m(1) == h2(3));
  CHECK(c.magnetization() == h2(1));
  CHECK(c.quanta() == std::vector<int>{3, 1, 0});
  CHECK(IsingConfig::from_quanta(h2(3), 1, c.quanta()) == c);
}

TEST_CASE("dimension overflow is reported") {
  CHECK_THROWS_AS(sector_dimension(HalfInt::from_int(50), 30, HalfInt::from_int(0)), std::overflow_error);
}
