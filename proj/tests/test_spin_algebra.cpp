#include <doctest.h>

#include <cmath>

#include "kinkxxz/spin_algebra.hpp"

using namespace kinkxxz;

TEST_CASE("commutators and Casimir up to J = 4") {
  for (int tj = 1; tj <= 8; ++tj) {
    CAPTURE(tj);
    const HalfInt spin = HalfInt::from_twice(tj);
    const double j = spin.value();
    const SpinMatrices s = spin_matrices(spin);
    const auto& z = s.s3.entries;
    const auto& p = s.splus.entries;
    const auto& m = s.sminus.entries;
    CHECK(s.s3.dim() == tj + 1);
    CHECK((p * m - m * p - 2.0 * z).norm() < 1e-12);
    CHECK((z * p - p * z - p).norm() < 1e-12);
    CHECK((z * m - m * z + m).norm() < 1e-12);
    const Eigen::MatrixXd cas = z * z + 0.5 * (p * m + m * p);
    CHECK((cas - j * (j + 1) * Eigen::MatrixXd::Identity(tj + 1, tj + 1)).norm() < 1e-12);
    CHECK((m - p.transpose()).norm() == 0.0);
    // m-descending order
    for (int a = 0; a <= tj; ++a) CHECK(z(a, a) == doctest::Approx(j - a));
  }
}

TEST_CASE("ladder radicands") {
  const HalfInt half = HalfInt::from_twice(1);
  CHECK(ladder_radicand(half, -half, Ladder::up) == 1);
  CHECK(ladder_radicand(half, half, Ladder::up) == 0);
  CHECK(ladder_radicand(half, -half, Ladder::down) == 0);
  const HalfInt two = HalfInt::from_int(2);
  CHECK(ladder_radicand(two, HalfInt::from_int(0), Ladder::up) == 6);
  CHECK(ladder_radicand(two, HalfInt::from_int(1), Ladder::down) == 6);
  CHECK(ladder_coefficient(two, HalfInt::from_int(1), Ladder::up) == doctest::Approx(2.0));
}

TEST_CASE("up from m and down from m+1 agree") {
  for (int tj = 1; tj <= 9; ++tj) {
    const HalfInt spin = HalfInt::from_twice(tj);
    for (int tm = -tj; tm < tj; tm += 2) {
      const HalfInt m = HalfInt::from_twice(tm);
      CHECK(ladder_radicand(spin, m, Ladder::up) == ladder_radicand(spin, m + HalfInt::from_int(1), Ladder::down));
    }
  }
}

TEST_CASE("invalid levels are rejected") {
  const HalfInt one = HalfInt::from_int(1);
  CHECK_THROWS_AS(ladder_radicand(one, HalfInt::from_twice(1), Ladder::up), std::invalid_argument);
  CHECK_THROWS_AS(ladder_radicand(one, HalfInt::from_int(2), Ladder::up), std::invalid_argument);
  CHECK_THROWS_AS(spin_matrices(HalfInt::from_int(0)), std::invalid_argument);
}
