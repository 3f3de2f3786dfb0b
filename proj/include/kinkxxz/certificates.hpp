#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "kinkxxz/half_int.hpp"

namespace kinkxxz {

/// Outcome of the "A >= 0, Ker A in Ker B  =>  -cA <= B <= cA" check.
struct RelativeBound {
  /// ||B|| / lambda_1, lambda_1 the smallest eigenvalue of A above tol
  double constant = 0.0;
  /// smallest c with -cA <= B <= cA: max |mu| over B v = mu A v on Ker(A)^perp
  double sharp_constant = 0.0;
  double lambda1 = 0.0;
  double norm_b = 0.0;
  int kernel_dim = 0;
  /// min eigenvalue of constant*A - B and constant*A + B
  double margin_minus = 0.0;
  double margin_plus = 0.0;
};

class KernelContainmentError : public std::runtime_error {
 public:
  KernelContainmentError(int vector_index, double image_norm)
      : std::runtime_error("kernel vector " + std::to_string(vector_index) + " of A is not annihilated by B (||Bv|| = " +
                           std::to_string(image_norm) + ")"),
        vector_index(vector_index),
        image_norm(image_norm) {}
  int vector_index;
  double image_norm;
};

/// Relative bound constant for dense symmetric A (PSD up to tol) and B.
/// tol is relative to max(1, ||A||) for kernel detection and to ||B|| for
/// the containment check. Throws KernelContainmentError or
/// std::invalid_argument (A not PSD).
RelativeBound relative_bound_constant(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, double tol = 1e-10);

/// Two-site operators on C^{2J+1} (x) C^{2J+1}, m-descending order per site.
Eigen::MatrixXd two_site_ising(HalfInt spin);    // h(0) = J^2 - S3 S3
Eigen::MatrixXd two_site_hopping(HalfInt spin);  // h1 = (S+S- + S-S+)/2

/// min over +/- of the smallest eigenvalue of J h(0) +/- h1.
double local_inequality_margin(HalfInt spin);

/// Scalar sufficient condition for analyticity of the spectral projection
/// around an isolated Ising level E with isolation distance d.
struct Certificate {
  HalfInt spin;
  double energy = 0.0;
  double distance = 0.0;
  bool distance_exact = true;
  double c1 = 0.0;
  double c2 = 0.0;
  double delta_star = 0.0;
  double delta_simple = 0.0;  // 18 J^{5/2}
};

/// Needs E in (0, 2J) and d >= 1 (std::invalid_argument otherwise; d <= 0
/// in particular).
Certificate certificate_constants(HalfInt spin, double energy, double distance, bool distance_exact = true);

/// C1/Delta + C2 (1 - sqrt(1 - 1/Delta^2)); < 1 means the resolvent series
/// converges uniformly on the contour.
double perturbation_series_bound(const Certificate& c, double delta);

struct BoundCheck {
  double max_ratio = 0.0;
  int worst_trial = -1;
  int trials = 0;
};

class BoundViolation : public std::runtime_error {
 public:
  BoundViolation(int trial, double ratio)
      : std::runtime_error("relative bound violated at trial " + std::to_string(trial) +
                           " (ratio " + std::to_string(ratio) + ")"),
        trial(trial),
        ratio(ratio) {}
  int trial;
  double ratio;
};

/// Draws `trials` unit vectors in the sector (per-trial seeds derived from
/// `seed`) and checks ||H1 psi|| <= sqrt(J^2+2J^3) (||H^k(0) psi|| + 2J^2).
/// Returns the largest left/right ratio; throws BoundViolation past
/// 1 + 1e-10.
BoundCheck random_vector_bound_check(HalfInt spin, int length, HalfInt magnetization, int trials, std::uint64_t seed);

/// max |diag H2| over the sector.
double boundary_operator_norm(HalfInt spin, int length, HalfInt magnetization);

}  // namespace kinkxxz
