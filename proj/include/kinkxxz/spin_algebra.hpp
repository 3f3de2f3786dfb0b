#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "kinkxxz/half_int.hpp"

namespace kinkxxz {

enum class Ladder { up, down };

/// Integer radicand of the ladder coefficient: (J-m)(J+m+1) for up,
/// (J+m)(J-m+1) for down. Zero at the annihilated edge.
std::int64_t ladder_radicand(HalfInt spin, HalfInt m, Ladder dir);

/// sqrt(J(J+1) - m(m±1)); throws std::invalid_argument for m outside [-J, J].
double ladder_coefficient(HalfInt spin, HalfInt m, Ladder dir);

/// Single-site operator on C^{2J+1}. Row/column a holds m = J - a, i.e. the
/// basis is ordered by m descending; every module uses this order.
struct LocalOperator {
  Eigen::MatrixXd entries;
  int dim() const { return static_cast<int>(entries.rows()); }
};

struct SpinMatrices {
  LocalOperator s3;
  LocalOperator splus;
  LocalOperator sminus;
};

/// S^3, S^+ and S^- for spin J >= 1/2. S^1, S^2 are never formed: the
/// transverse coupling is always written as (S+S- + S-S+)/2.
SpinMatrices spin_matrices(HalfInt spin);

}  // namespace kinkxxz
