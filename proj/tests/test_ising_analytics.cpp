#include <doctest.h>

#include <map>
#include <set>

#include "kinkxxz/hamiltonian.hpp"
#include "kinkxxz/ising_analytics.hpp"

using namespace kinkxxz;

namespace {
HalfInt h2(int twice) { return HalfInt::from_twice(twice); }

std::vector<SpectralLevel> observed_low(const SectorBasis& b) {
  std::vector<SpectralLevel> out;
  for (auto [e, n] : ising_level_counts(b))
    if (e < b.two_j()) out.push_back({e, static_cast<int>(n)});
  return out;
}
}  // namespace

TEST_CASE("ground descriptors") {
  CHECK(ground_descriptor(h2(3), 3, h2(-3)) == GroundDescriptor{1, h2(3), true});
  CHECK(ground_descriptor(h2(1), 2, h2(5)) == GroundDescriptor{-2, h2(1), true});
  CHECK(ground_descriptor(h2(3), 3, h2(-21)) == GroundDescriptor{3, h2(-3), true});
  CHECK_THROWS_AS(ground_descriptor(h2(2), 2, h2(1)), std::invalid_argument);
}

TEST_CASE("the two labels of a divisible sector give one configuration") {
  // M - J = 0 mod 2J
  for (int tj = 1; tj <= 6; ++tj)
    for (int length = 1; length <= 3; ++length)
      for (HalfInt m : sector_magnetizations(h2(tj), length)) {
        const GroundDescriptor g = ground_descriptor(h2(tj), length, m);
        const IsingConfig c = ground_config(h2(tj), length, g);
        CHECK(c.magnetization() == m);
        CHECK(ising_config_energy(c) == 0);
        CHECK((g.m > -h2(tj) || (g.x == length && g.m == -h2(tj))));
        if (g.m == h2(tj) && g.x > -length)
          CHECK(ground_config(h2(tj), length, GroundDescriptor{g.x - 1, -h2(tj), false}) == c);
      }
}

TEST_CASE("excitation sets") {
  const ExcitationSets half = excitation_sets(h2(1), h2(1));
  CHECK(half.plus.empty());
  CHECK(half.minus.empty());
  CHECK(excitation_sets(h2(1), h2(-1)).minus.empty());
  const ExcitationSets one = excitation_sets(h2(2), h2(0));
  CHECK(one.plus.empty());
  CHECK(one.minus.empty());
  const ExcitationSets two = excitation_sets(h2(4), h2(0));
  CHECK(two.plus == std::vector<ExcitationLevel>{{1, 3}});
  CHECK(two.minus == std::vector<ExcitationLevel>{{1, 3}});
  const ExcitationSets top = excitation_sets(h2(3), h2(3));
  CHECK(top.plus.empty());
  CHECK(top.minus == std::vector<ExcitationLevel>{{1, 1}});
  CHECK_THROWS_AS(excitation_sets(h2(1), h2(3)), std::invalid_argument);
}

TEST_CASE("predicted low spectra") {
  CHECK(*predicted_low_spectrum(h2(3), 3, h2(-3)) == std::vector<SpectralLevel>{{0, 1}, {1, 1}});
  CHECK(*predicted_low_spectrum(h2(4), 3, h2(0)) == std::vector<SpectralLevel>{{0, 1}, {3, 2}});
  for (HalfInt m : sector_magnetizations(h2(1), 3))
    if (auto p = predicted_low_spectrum(h2(1), 3, m)) CHECK(*p == std::vector<SpectralLevel>{{0, 1}});
  CHECK_FALSE(predicted_low_spectrum(h2(3), 3, h2(21)).has_value());
  CHECK_FALSE(predicted_low_spectrum(h2(3), 3, h2(-21)).has_value());
}

TEST_CASE("predictions match the enumerated Ising spectrum in bulk sectors") {
  for (int tj = 1; tj <= 6; ++tj)
    for (int length : {2, 3})
      for (HalfInt m : sector_magnetizations(h2(tj), length)) {
        auto p = predicted_low_spectrum(h2(tj), length, m);
        if (!p) continue;
        CAPTURE(tj);
        CAPTURE(length);
        CAPTURE(m.twice());
        CHECK(*p == observed_low(SectorBasis(h2(tj), length, m)));
      }
}

TEST_CASE("first excitation is a doublet exactly for integer J > 1 and M = 0 mod 2J") {
  for (int tj = 1; tj <= 6; ++tj)
    for (int length : {2, 3})
      for (HalfInt m : sector_magnetizations(h2(tj), length)) {
        auto p = predicted_low_spectrum(h2(tj), length, m);
        if (!p || p->size() < 2) continue;
        const bool expect_double = tj % 2 == 0 && tj > 2 && m.twice() % (2 * tj) == 0;
        CAPTURE(tj);
        CAPTURE(m.twice());
        CHECK(((*p)[1].multiplicity == 2) == expect_double);
        for (const auto& l : *p) CHECK(l.multiplicity <= 2);
      }
}

TEST_CASE("kink energies") {
  for (int tj = 1; tj <= 8; ++tj)
    for (int tm = -tj; tm <= tj; tm += 2)
      for (KinkSign s : {KinkSign::plus, KinkSign::minus})
        for (int n = 1; n < 6; ++n)
          CHECK(localized_kink_energy(h2(tj), h2(tm), s, n + 1) > localized_kink_energy(h2(tj), h2(tm), s, n));
  CHECK(localized_kink_energy(h2(3), h2(3), KinkSign::minus, 1) == 1);
  CHECK(localized_kink_energy(h2(4), h2(0), KinkSign::plus, 1) == 3);
}

TEST_CASE("excitation configurations reproduce the closed-form energies") {
  for (int tj = 1; tj <= 6; ++tj)
    for (int length : {2, 3})
      for (int x = -length + 1; x <= length - 1; ++x)
        for (int tm = -tj + 2; tm <= tj; tm += 2)
          for (KinkSign s : {KinkSign::plus, KinkSign::minus}) {
            const int top = (s == KinkSign::plus ? tj - tm : tj + tm) / 2;
            for (int n = 1; n <= top; ++n) {
              const KinkExcitation k = kink_excitation(h2(tj), length, x, h2(tm), s, n);
              CHECK(ising_config_energy(k.config) == k.energy);
              CHECK(k.config.magnetization() == ground_config(h2(tj), length, {x, h2(tm), true}).magnetization());
            }
            CHECK_THROWS_AS(kink_excitation(h2(tj), length, x, h2(tm), s, top + 1), std::invalid_argument);
          }
}

TEST_CASE("isolation distances") {
  const IsolationDistance d = isolation_distance(h2(3), 3, h2(-3), 1);
  CHECK(d.value == 1);
  CHECK(d.exact);
  CHECK_THROWS_AS(isolation_distance(h2(3), 3, h2(-3), 2), std::invalid_argument);
  for (int tj = 1; tj <= 5; ++tj)
    for (HalfInt m : sector_magnetizations(h2(tj), 2)) {
      const SectorBasis b(h2(tj), 2, m);
      const auto counts = ising_level_counts(b);
      for (auto [e, n] : counts) {
        const IsolationDistance dist = isolation_distance(h2(tj), 2, m, e);
        if (counts.size() > 1) CHECK(dist.value >= 1);
      }
    }
  const IsolationDistance big = isolation_distance(h2(3), 3, h2(-3), 1, 10);
  CHECK(big.value == 1);
  CHECK_FALSE(big.exact);
}

TEST_CASE("degenerate pairs") {
  CHECK(degenerate_pairs(h2(2)).empty());
  CHECK(degenerate_pairs(h2(1)).empty());
  const auto j2 = degenerate_pairs(h2(4));
  REQUIRE(j2.size() == 1);
  CHECK(j2[0].a == 2);
  CHECK(j2[0].b == 2);
  CHECK(j2[0].m == h2(0));
  CHECK(j2[0].energy == 3);
  const auto j3 = degenerate_pairs(h2(6));
  REQUIRE(j3.size() == 1);
  CHECK(j3[0].m == h2(0));
  CHECK(j3[0].energy == 4);
  CHECK(localized_kink_energy(h2(6), h2(0), KinkSign::plus, 1) == 4);
  CHECK(localized_kink_energy(h2(6), h2(0), KinkSign::minus, 1) == 4);
}

TEST_CASE("degenerate pairs are exactly the K+/K- collisions") {
  for (int tj = 1; tj <= 24; ++tj) {
    CAPTURE(tj);
    std::set<std::pair<int, std::int64_t>> collisions, catalog;
    for (int tm = -tj; tm <= tj; tm += 2) {
      const ExcitationSets s = excitation_sets(h2(tj), h2(tm));
      for (const auto& p : s.plus)
        for (const auto& q : s.minus)
          if (p.energy == q.energy) collisions.insert({tm, p.energy});
      std::map<std::int64_t, int> seen;
      for (const auto& p : s.plus) CHECK(++seen[p.energy] == 1);
    }
    for (const auto& d : degenerate_pairs(h2(tj))) {
      catalog.insert({static_cast<int>(d.m.twice()), d.energy});
      const ExcitationSets s = excitation_sets(h2(tj), d.m);
      const int plus_n = d.mirrored ? d.a - 1 : 1;
      const int minus_n = d.mirrored ? 1 : d.a - 1;
      CHECK(localized_kink_energy(h2(tj), d.m, KinkSign::plus, plus_n) == d.energy);
      CHECK(localized_kink_energy(h2(tj), d.m, KinkSign::minus, minus_n) == d.energy);
    }
    CHECK(collisions == catalog);
  }
}

TEST_CASE("band-edge bound") {
  for (int tj = 1; tj <= 5; ++tj) {
    std::uint64_t prev_mid = 0;
    for (int length = 2; length <= 4; ++length) {
      for (HalfInt m : sector_magnetizations(h2(tj), length)) {
        const std::uint64_t bound = band_edge_multiplicity_lower_bound(h2(tj), length, m);
        const SectorBasis b(h2(tj), length, m);
        CHECK(bound <= b.dim() - 1);
        std::set<std::uint64_t> ranks;
        for (const IsingConfig& c : band_edge_configs(h2(tj), length, m)) {
          CHECK(ising_config_energy(c) == tj);
          ranks.insert(b.rank(c));
        }
        CHECK(ranks.size() == bound);
        if (length <= 3) {
          const auto counts = ising_level_counts(b);
          CHECK(bound <= (counts.contains(tj) ? counts.at(tj) : 0));
        }
      }
      // grows with L
      const std::uint64_t mid = band_edge_multiplicity_lower_bound(h2(tj), length, h2(tj % 2));
      CHECK(mid > prev_mid);
      prev_mid = mid;
    }
  }
}

TEST_CASE("configurations with a high-energy pattern cost at least 2J") {
  for (int tj = 1; tj <= 4; ++tj)
    for (int length = 1; length <= 2; ++length)
      for (HalfInt m : sector_magnetizations(h2(tj), length))
        for (const IsingConfig& c : SectorBasis(h2(tj), length, m).members())
          if (has_high_energy_pattern(c)) CHECK(ising_config_energy(c) >= tj);
}
