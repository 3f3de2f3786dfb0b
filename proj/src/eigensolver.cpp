#include "kinkxxz/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <Eigen/Eigenvalues>

#include "kinkxxz/kernels.hpp"

namespace kinkxxz {

namespace k = kernels::omp;

std::vector<Cluster> group_multiplicities(std::span<const double> values, double cluster_tol) {
  std::vector<Cluster> out;
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i + 1;
    double sum = values[i];
    while (j < values.size() && values[j] - values[j - 1] <= cluster_tol) sum += values[j++];
    out.push_back({sum / static_cast<double>(j - i), static_cast<int>(j - i)});
    i = j;
  }
  return out;
}

std::vector<Cluster> group_multiplicities(std::span<const double> values) {
  std::vector<Cluster> out;
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i + 1;
    double sum = values[i];
    while (j < values.size() && values[j] - values[j - 1] <= 1e-8 * (1.0 + std::abs(values[j]))) sum += values[j++];
    out.push_back({sum / static_cast<double>(j - i), static_cast<int>(j - i)});
    i = j;
  }
  return out;
}

namespace {

double residual_norm(const SectorOperator& op, std::span<const double> v, double lambda, std::vector<double>& work) {
  op.apply(v, work);
  k::axpy(-lambda, v, work);
  return k::norm(work);
}

SpectrumRecord make_record(const SectorOperator& op, std::string solver) {
  SpectrumRecord r;
  r.key = op.key();
  r.variant = op.variant;
  r.delta_inv = op.delta_inv;
  r.solver = std::move(solver);
  return r;
}

/// Removes the components along `basis` from w, two passes.
void orthogonalize(std::span<double> w, const std::vector<std::vector<double>>& basis) {
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& u : basis) k::axpy(-k::dot(u, w), u, w);
}

}  // namespace

SpectrumRecord dense_spectrum(const SectorOperator& op, const DenseOptions& opts) {
  if (op.dim() > opts.cap)
    throw std::length_error("dense_spectrum: dim " + std::to_string(op.dim()) + " exceeds cap " +
                            std::to_string(opts.cap));
  SpectrumRecord rec = make_record(op, "dense");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(op.matrix.to_dense());
  if (es.info() != Eigen::Success) throw std::runtime_error("dense eigensolver failed");
  const auto n = static_cast<Eigen::Index>(op.dim());
  std::vector<double> v(static_cast<std::size_t>(n)), work(v.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    const double lambda = es.eigenvalues()(i);
    for (Eigen::Index r = 0; r < n; ++r) v[r] = es.eigenvectors()(r, i);
    rec.eigenvalues.push_back(lambda);
    rec.residuals.push_back(residual_norm(op, v, lambda, work));
    if (opts.vectors) rec.eigenvectors.push_back(v);
  }
  rec.clusters = group_multiplicities(rec.eigenvalues);
  return rec;
}

SpectrumRecord lanczos_lowest(const SectorOperator& op, const LanczosOptions& opts) {
  const std::uint64_t dim = op.dim();
  if (opts.k < 1 || static_cast<std::uint64_t>(opts.k) >= dim)
    throw std::invalid_argument("lanczos_lowest needs 1 <= k < dim (k=" + std::to_string(opts.k) +
                                ", dim=" + std::to_string(dim) + ")");
  const auto n = static_cast<std::size_t>(dim);
  const double tol_abs = opts.tol * (1.0 + op.matrix.inf_norm());
  const double breakdown = 1e-14 * (1.0 + op.matrix.inf_norm());

  std::vector<std::vector<double>> locked;
  std::vector<double> locked_values, locked_residuals;
  std::vector<double> w(n), work(n);

  for (int run = 0; run < opts.k; ++run) {
    std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                      static_cast<std::uint32_t>(run)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal;
    std::vector<double> start(n);
    for (double& x : start) x = normal(rng);
    orthogonalize(start, locked);

    const std::uint64_t room = dim - locked.size();
    int matvecs = 0;
    double best_value = 0.0, best_res = INFINITY;
    bool done = false;

    while (!done) {
      const double s0 = k::norm(start);
      if (!(s0 > 0.0)) throw LanczosError("lanczos: start vector vanished", best_value, best_res, run);
      k::scale(1.0 / s0, start);

      std::vector<std::vector<double>> v{start};
      std::vector<double> alpha, beta;
      std::vector<double> ritz(n);

      for (int j = 0;; ++j) {
        op.apply(v[j], w);
        ++matvecs;
        const double a = k::dot(v[j], w);
        k::axpy(-a, v[j], w);
        if (j > 0) k::axpy(-beta[j - 1], v[j - 1], w);
        orthogonalize(w, locked);
        orthogonalize(w, v);
        const double b = k::norm(w);
        alpha.push_back(a);

        const auto m = static_cast<Eigen::Index>(alpha.size());
        Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), m);
        Eigen::VectorXd sub = m > 1 ? Eigen::VectorXd(Eigen::Map<Eigen::VectorXd>(beta.data(), m - 1))
                                    : Eigen::VectorXd();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
        tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);

        const double estimate = std::abs(b * tri.eigenvectors()(m - 1, 0));

        const bool exhausted = b < breakdown || static_cast<std::uint64_t>(m) >= room;
        const bool full = m >= opts.krylov_max || matvecs >= opts.max_iter;
        if (estimate <= tol_abs || exhausted || full) {
          std::fill(ritz.begin(), ritz.end(), 0.0);
          for (Eigen::Index i = 0; i < m; ++i) k::axpy(tri.eigenvectors()(i, 0), v[i], ritz);
          orthogonalize(ritz, locked);
          k::scale(1.0 / k::norm(ritz), ritz);
          op.apply(ritz, work);
          const double rq = k::dot(ritz, work);
          k::axpy(-rq, ritz, work);
          const double res = k::norm(work);
          if (res < best_res) {
            best_res = res;
            best_value = rq;
          }
          if (res <= tol_abs) {
            locked.push_back(ritz);
            locked_values.push_back(rq);
            locked_residuals.push_back(res);
            done = true;
            break;
          }
          if (matvecs >= opts.max_iter)
            throw LanczosError("lanczos: no convergence for eigenpair " + std::to_string(run) + " within " +
                                   std::to_string(opts.max_iter) + " matvecs (best residual " +
                                   std::to_string(best_res) + ")",
                               best_value, best_res, run);
          if (exhausted || full) {
            start = ritz;  // explicit restart from the current Ritz vector
            break;
          }
        }
        v.emplace_back(w);
        k::scale(1.0 / b, v.back());
        beta.push_back(b);
      }
    }
  }

  std::vector<std::size_t> order(locked.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return locked_values[a] < locked_values[b]; });
  SpectrumRecord rec = make_record(op, "lanczos");
  for (auto i : order) {
    rec.eigenvalues.push_back(locked_values[i]);
    rec.residuals.push_back(locked_residuals[i]);
    if (opts.vectors) rec.eigenvectors.push_back(std::move(locked[i]));
  }
  rec.clusters = group_multiplicities(rec.eigenvalues);
  return rec;
}

SolverChoice parse_solver(const std::string& name) {
  if (name == "dense") return SolverChoice::dense;
  if (name == "lanczos") return SolverChoice::lanczos;
  if (name == "auto") return SolverChoice::automatic;
  throw std::invalid_argument("unknown solver '" + name + "' (dense|lanczos|auto)");
}

SpectrumRecord lowest_spectrum(const SectorOperator& op, int k_wanted, SolverChoice solver, double tol,
                               std::uint64_t seed, bool vectors, std::uint64_t dense_cap) {
  const int k = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(std::max(k_wanted, 1)), op.dim()));
  if (op.matrix.is_diagonal()) {
    // Ising limit: the spectrum is the diagonal itself, exactly
    std::vector<std::uint64_t> order(op.dim());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](auto a, auto b) { return op.matrix.diagonal(a) < op.matrix.diagonal(b); });
    SpectrumRecord rec = make_record(op, "diagonal");
    for (int i = 0; i < k; ++i) {
      rec.eigenvalues.push_back(op.matrix.diagonal(order[i]));
      rec.residuals.push_back(0.0);
      if (vectors) {
        rec.eigenvectors.emplace_back(op.dim(), 0.0);
        rec.eigenvectors.back()[order[i]] = 1.0;
      }
    }
    rec.clusters = group_multiplicities(rec.eigenvalues);
    return rec;
  }
  const bool dense = solver == SolverChoice::dense ||
                     (solver == SolverChoice::automatic && op.dim() <= std::min(dense_cap, kAutoDenseLimit)) ||
                     static_cast<std::uint64_t>(k) >= op.dim();
  SpectrumRecord rec;
  if (dense) {
    rec = dense_spectrum(op, {dense_cap, vectors});
    rec.eigenvalues.resize(static_cast<std::size_t>(k));
    rec.residuals.resize(static_cast<std::size_t>(k));
    if (vectors) rec.eigenvectors.resize(static_cast<std::size_t>(k));
    rec.clusters = group_multiplicities(rec.eigenvalues);
  } else {
    LanczosOptions o;
    o.k = k;
    o.tol = tol;
    o.seed = seed;
    o.vectors = vectors;
    rec = lanczos_lowest(op, o);
  }
  return rec;
}

}  // namespace kinkxxz
