#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <memory>

#include "kinkxxz/eigensolver.hpp"

using namespace kinkxxz;

namespace {
HalfInt h2(int twice) { return HalfInt::from_twice(twice); }
}  // namespace

TEST_CASE("grouping") {
  const std::vector<double> v{0.0, 3.0 - 1e-12, 3.0 + 1e-12};
  const auto c = group_multiplicities(v, 1e-9);
  REQUIRE(c.size() == 2);
  CHECK(c[0].value == 0.0);
  CHECK(c[0].multiplicity == 1);
  CHECK(c[1].value == doctest::Approx(3.0));
  CHECK(c[1].multiplicity == 2);
  const std::vector<double> w{0, 1, 1, 1, 1, 3, 3, 4};
  const auto d = group_multiplicities(w);
  REQUIRE(d.size() == 4);
  CHECK(d[1].multiplicity == 4);
  CHECK(d[2].multiplicity == 2);
  const std::vector<double> spread{0.0, 0.1, 0.25, 0.3, 1.0, 1.05, 2.0};
  std::size_t last = spread.size() + 1;
  for (double tol : {0.0, 0.01, 0.05, 0.06, 0.2, 1.0}) {
    const auto g = group_multiplicities(spread, tol);
    CHECK(g.size() <= last);
    last = g.size();
  }
  CHECK(group_multiplicities(std::vector<double>{}).empty());
}

TEST_CASE("dense spectrum") {
  const auto ising = build_sector_operator(h2(1), 2, h2(3), Variant::kink, 0.0);
  const SpectrumRecord r = dense_spectrum(ising);
  CHECK(r.eigenvalues == std::vector<double>{0, 1, 1, 1, 1});
  CHECK(r.solver == "dense");
  const auto big = build_sector_operator(h2(3), 2, h2(-3), Variant::kink, 0.4);
  CHECK_THROWS_AS(dense_spectrum(big, {100, false}), std::length_error);
  const SpectrumRecord s = dense_spectrum(big);
  const double scale = 1.0 + big.matrix.inf_norm();
  for (double res : s.residuals) CHECK(res <= 1e-10 * scale);
  CHECK(std::is_sorted(s.eigenvalues.begin(), s.eigenvalues.end()));
  CHECK(s.eigenvalues.front() >= -1e-10);
}

TEST_CASE("lanczos agrees with dense") {
  struct Case {
    int two_j, length, two_m;
  };
  for (const Case c : {Case{1, 3, 1}, Case{2, 2, 0}, Case{3, 2, -1}, Case{4, 2, 0}, Case{2, 4, 2}})
    for (double dinv : {0.0, 0.4, 0.9}) {
      CAPTURE(c.two_j);
      CAPTURE(c.length);
      CAPTURE(c.two_m);
      CAPTURE(dinv);
      const auto op = build_sector_operator(h2(c.two_j), c.length, h2(c.two_m), Variant::kink, dinv);
      if (op.dim() > 2000) continue;
      const SpectrumRecord d = dense_spectrum(op);
      LanczosOptions o;
      o.k = 6;
      o.seed = 3;
      const SpectrumRecord l = lanczos_lowest(op, o);
      REQUIRE(l.eigenvalues.size() == 6);
      for (int i = 0; i < 6; ++i) CHECK(std::abs(l.eigenvalues[i] - d.eigenvalues[i]) < 1e-8);
      for (double res : l.residuals) CHECK(res <= o.tol * (1.0 + op.matrix.inf_norm()));
    }
}

TEST_CASE("degenerate Ising doublet is resolved") {
  const auto op = build_sector_operator(h2(4), 2, h2(0), Variant::kink, 0.0);
  LanczosOptions o;
  o.k = 3;
  const SpectrumRecord r = lanczos_lowest(op, o);
  CHECK(std::abs(r.eigenvalues[0]) < 1e-9);
  CHECK(r.eigenvalues[1] == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(r.eigenvalues[2] == doctest::Approx(3.0).epsilon(1e-10));
  REQUIRE(r.clusters.size() == 2);
  CHECK(r.clusters[1].multiplicity == 2);
}

TEST_CASE("ground energy zero and determinism") {
  const auto op = build_sector_operator(h2(3), 3, h2(-3), Variant::kink, 0.5);
  LanczosOptions o;
  o.k = 2;
  o.seed = 42;
  o.vectors = true;
  const SpectrumRecord a = lanczos_lowest(op, o);
  const SpectrumRecord b = lanczos_lowest(op, o);
  CHECK(std::abs(a.eigenvalues[0]) < 1e-9);
  CHECK(a.eigenvalues == b.eigenvalues);
  CHECK(a.residuals == b.residuals);
  CHECK(a.eigenvectors == b.eigenvectors);
  o.seed = 43;
  const SpectrumRecord c = lanczos_lowest(op, o);
  CHECK(c.eigenvalues[1] == doctest::Approx(a.eigenvalues[1]).epsilon(1e-9));
}

TEST_CASE("lanczos errors") {
  const auto op = build_sector_operator(h2(3), 3, h2(-3), Variant::kink, 0.5);
  LanczosOptions o;
  o.k = static_cast<int>(op.dim());
  CHECK_THROWS_AS(lanczos_lowest(op, o), std::invalid_argument);
  o.k = 2;
  o.max_iter = 3;
  try {
    lanczos_lowest(op, o);
    FAIL("expected LanczosError");
  } catch (const LanczosError& e) {
    CHECK(e.converged == 0);
    CHECK(std::isfinite(e.best_value));
    CHECK(e.best_residual > 0.0);
  }
}

TEST_CASE("lowest_spectrum dispatch") {
  const auto op = build_sector_operator(h2(1), 2, h2(3), Variant::kink, 0.3);
  const SpectrumRecord r = lowest_spectrum(op, 10, SolverChoice::lanczos, 1e-10, 0);
  CHECK(r.eigenvalues.size() == 5);  // clamped to dim
  CHECK(r.solver == "dense");
  const auto ising = build_sector_operator(h2(3), 3, h2(-3), Variant::kink, 0.0);
  const SpectrumRecord d = lowest_spectrum(ising, 4, SolverChoice::lanczos, 1e-10, 0, true);
  CHECK(d.solver == "diagonal");
  CHECK(d.eigenvalues == std::vector<double>{0, 1, 3, 3});
  CHECK(d.residuals == std::vector<double>{0, 0, 0, 0});
  CHECK(d.eigenvectors[1][ising.basis->rank(IsingConfig(h2(3), 3, {h2(-3), h2(-3), h2(-3), h2(-1), h2(1), h2(3), h2(3)}))] == 1.0);
  const auto big = build_sector_operator(h2(3), 3, h2(-3), Variant::kink, 0.3);
  CHECK(lowest_spectrum(big, 3, SolverChoice::automatic, 1e-10, 0, false, 100).solver == "lanczos");
  CHECK(lowest_spectrum(big, 3, SolverChoice::automatic, 1e-10, 0).solver == "lanczos");
  CHECK_THROWS_AS(lowest_spectrum(big, 3, SolverChoice::dense, 1e-10, 0, false, 1000), std::length_error);
  const auto mid = build_sector_operator(h2(4), 2, h2(0), Variant::kink, 0.3);
  CHECK(lowest_spectrum(mid, 3, SolverChoice::dense, 1e-10, 0).solver == "dense");
  CHECK(lowest_spectrum(mid, 3, SolverChoice::automatic, 1e-10, 0).solver == "dense");
  CHECK(parse_solver("auto") == SolverChoice::automatic);
  CHECK_THROWS_AS(parse_solver("qr"), std::invalid_argument);
}

TEST_CASE("kink sector M and antikink sector -M are unitarily equivalent") {
  for (int tj : {1, 3})
    for (int tm : {tj, tj + 2 * tj, -tj})
      for (double dinv : {0.0, 0.4}) {
        const auto k = dense_spectrum(build_sector_operator(h2(tj), 2, h2(tm), Variant::kink, dinv));
        const auto a = dense_spectrum(build_sector_operator(h2(tj), 2, h2(-tm), Variant::antikink, dinv));
        REQUIRE(k.eigenvalues.size() == a.eigenvalues.size());
        for (std::size_t i = 0; i < k.eigenvalues.size(); ++i)
          CHECK(std::abs(k.eigenvalues[i] - a.eigenvalues[i]) < 1e-10);
      }
}
