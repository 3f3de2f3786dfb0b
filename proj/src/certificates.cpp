#include "kinkxxz/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>

#include "kinkxxz/hamiltonian.hpp"
#include "kinkxxz/kernels.hpp"
#include "kinkxxz/spin_algebra.hpp"

namespace kinkxxz {

namespace {

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

double min_eigenvalue(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

double spectral_norm(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return std::max(std::abs(es.eigenvalues()(0)), std::abs(es.eigenvalues()(es.eigenvalues().size() - 1)));
}

}  // namespace

RelativeBound relative_bound_constant(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, double tol) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw std::invalid_argument("relative_bound_constant: A and B must be square and of equal size");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  const Eigen::VectorXd& lam = es.eigenvalues();
  const double scale_a = std::max(1.0, std::max(std::abs(lam(0)), std::abs(lam(lam.size() - 1))));
  const double thr = tol * scale_a;
  if (lam(0) < -thr) throw std::invalid_argument("relative_bound_constant: A is not positive semidefinite");

  RelativeBound out;
  out.norm_b = spectral_norm(b);

  std::vector<Eigen::Index> range;
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    if (lam(i) < thr) {
      ++out.kernel_dim;
      const double image = (b * es.eigenvectors().col(i)).norm();
      if (image > tol * std::max(1.0, out.norm_b)) throw KernelContainmentError(static_cast<int>(i), image);
    } else {
      range.push_back(i);
    }
  }
  if (range.empty()) return out;  // A = 0 forces B = 0

  out.lambda1 = lam(range.front());
  out.constant = out.norm_b / out.lambda1;

  // whitened B on Ker(A)^perp
  Eigen::MatrixXd u(a.rows(), static_cast<Eigen::Index>(range.size()));
  for (std::size_t c = 0; c < range.size(); ++c)
    u.col(static_cast<Eigen::Index>(c)) = es.eigenvectors().col(range[c]) / std::sqrt(lam(range[c]));
  out.sharp_constant = spectral_norm(u.transpose() * b * u);

  out.margin_minus = min_eigenvalue(out.constant * a - b);
  out.margin_plus = min_eigenvalue(out.constant * a + b);
  return out;
}

Eigen::MatrixXd two_site_ising(HalfInt spin) {
  const SpinMatrices s = spin_matrices(spin);
  const auto d = s.s3.dim();
  const double j = spin.value();
  return j * j * Eigen::MatrixXd::Identity(d * d, d * d) - kron(s.s3.entries, s.s3.entries);
}

Eigen::MatrixXd two_site_hopping(HalfInt spin) {
  const SpinMatrices s = spin_matrices(spin);
  return 0.5 * (kron(s.splus.entries, s.sminus.entries) + kron(s.sminus.entries, s.splus.entries));
}

double local_inequality_margin(HalfInt spin) {
  const Eigen::MatrixXd h0 = two_site_ising(spin);
  const Eigen::MatrixXd h1 = two_site_hopping(spin);
  const double j = spin.value();
  return std::min(min_eigenvalue(j * h0 + h1), min_eigenvalue(j * h0 - h1));
}

Certificate certificate_constants(HalfInt spin, double energy, double distance, bool distance_exact) {
  const double j = spin.value();
  if (!(distance > 0.0)) throw std::invalid_argument("isolation distance must be positive");
  if (distance < 1.0) throw std::invalid_argument("isolation distance below the certified minimum 1");
  if (!(energy > 0.0 && energy < 2.0 * j)) throw std::invalid_argument("energy must lie in (0, 2J)");
  Certificate c;
  c.spin = spin;
  c.energy = energy;
  c.distance = distance;
  c.distance_exact = distance_exact;
  const double root = std::sqrt(j * j + 2.0 * j * j * j);
  c.c1 = root * (1.0 + (2.0 * energy / distance + 1.0 + 4.0 * j * j / distance));
  c.c2 = 4.0 * j * j / distance;
  c.delta_star = (c.c1 * c.c1 + c.c2 * c.c2) /
                 (c.c2 * std::sqrt(c.c1 * c.c1 + 2.0 * c.c2 - 1.0) + c.c1 - c.c1 * c.c2);
  c.delta_simple = 18.0 * std::pow(j, 2.5);
  return c;
}

double perturbation_series_bound(const Certificate& c, double delta) {
  const double x = 1.0 / delta;
  return c.c1 * x + c.c2 * (1.0 - std::sqrt(1.0 - x * x));
}

BoundCheck random_vector_bound_check(HalfInt spin, int length, HalfInt magnetization, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  auto basis = std::make_shared<const SectorBasis>(spin, length, magnetization);
  const SectorOperator h1 = build_sector_operator(basis, Variant::h1);
  const std::vector<std::int64_t> ising = kernels::omp::ising_energies(*basis);
  const auto n = static_cast<std::size_t>(basis->dim());
  const double j = spin.value();
  const double root = std::sqrt(j * j + 2.0 * j * j * j);

  std::vector<double> ratio(static_cast<std::size_t>(trials));
#pragma omp parallel
  {
    std::vector<double> psi(n), out(n);
#pragma omp for schedule(static)
    for (int t = 0; t < trials; ++t) {
      std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(t)};
      std::mt19937_64 rng(seq);
      std::normal_distribution<double> normal;
      for (double& x : psi) x = normal(rng);
      const double nrm = kernels::serial::dot(psi, psi);
      for (double& x : psi) x /= std::sqrt(nrm);

      kernels::serial::matvec(h1.matrix, psi, out);
      const double lhs = std::sqrt(kernels::serial::dot(out, out));
      double ising_sq = 0.0;
      for (std::size_t i = 0; i < n; ++i) ising_sq += static_cast<double>(ising[i] * ising[i]) * psi[i] * psi[i];
      ratio[static_cast<std::size_t>(t)] = lhs / (root * (std::sqrt(ising_sq) + 2.0 * j * j));
    }
  }
  BoundCheck out;
  out.trials = trials;
  for (int t = 0; t < trials; ++t) {
    if (ratio[t] > out.max_ratio) {
      out.max_ratio = ratio[t];
      out.worst_trial = t;
    }
    if (ratio[t] > 1.0 + 1e-10) throw BoundViolation(t, ratio[t]);
  }
  return out;
}

double boundary_operator_norm(HalfInt spin, int length, HalfInt magnetization) {
  const SectorOperator h2 = build_sector_operator(spin, length, magnetization, Variant::h2);
  double best = 0.0;
  for (double v : h2.matrix.values) best = std::max(best, std::abs(v));
  return best;
}

}  // namespace kinkxxz
