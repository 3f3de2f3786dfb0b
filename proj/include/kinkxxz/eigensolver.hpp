#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "kinkxxz/hamiltonian.hpp"

namespace kinkxxz {

struct Cluster {
  double value = 0.0;
  int multiplicity = 0;
};

/// Eigenvalues of one sector operator with residuals ||Hv - lambda v||.
struct SpectrumRecord {
  SectorKey key;
  Variant variant = Variant::kink;
  double delta_inv = 0.0;
  std::string solver;
  std::vector<double> eigenvalues;  // ascending
  std::vector<double> residuals;
  std::vector<Cluster> clusters;
  /// Filled only when vectors were requested; eigenvectors[i] pairs with
  /// eigenvalues[i].
  std::vector<std::vector<double>> eigenvectors;
};

/// Greedy grouping of sorted values: neighbours closer than cluster_tol
/// join the same cluster, whose value is the mean.
std::vector<Cluster> group_multiplicities(std::span<const double> values, double cluster_tol);
/// Default tolerance: gaps <= 1e-8 (1 + |lambda|) merge.
std::vector<Cluster> group_multiplicities(std::span<const double> values);

struct DenseOptions {
  std::uint64_t cap = 4000;
  bool vectors = false;
};

/// Full spectrum by a direct symmetric eigensolver. Throws
/// std::length_error when dim exceeds the cap.
SpectrumRecord dense_spectrum(const SectorOperator& op, const DenseOptions& opts = {});

struct LanczosOptions {
  int k = 1;
  /// converged when ||Hv - theta v|| <= tol (1 + ||H||_inf)
  double tol = 1e-10;
  /// matvec budget per eigenpair
  int max_iter = 5000;
  std::uint64_t seed = 0;
  /// Krylov basis length before an explicit restart
  int krylov_max = 80;
  bool vectors = false;
};

class LanczosError : public std::runtime_error {
 public:
  LanczosError(const std::string& what, double best_value, double best_residual, int converged)
      : std::runtime_error(what), best_value(best_value), best_residual(best_residual), converged(converged) {}
  double best_value;
  double best_residual;
  int converged;
};

/// k lowest eigenpairs. Lanczos with full reorthogonalization; each pair is
/// found by a fresh run restricted to the orthogonal complement of the
/// pairs already locked, so degenerate levels come out with their full
/// multiplicity. Deterministic for a fixed seed. Requires k < dim.
SpectrumRecord lanczos_lowest(const SectorOperator& op, const LanczosOptions& opts);

enum class SolverChoice { dense, lanczos, automatic };
SolverChoice parse_solver(const std::string& name);

/// Largest dim for which `automatic` picks the dense solver.
inline constexpr std::uint64_t kAutoDenseLimit = 600;

/// k lowest eigenvalues with the chosen solver; `automatic` uses dense up to
/// min(dense_cap, kAutoDenseLimit) and Lanczos above. k is clamped to dim.
/// A diagonal operator is answered directly from its sorted diagonal
/// (solver tag "diagonal") whatever the choice.
SpectrumRecord lowest_spectrum(const SectorOperator& op, int k, SolverChoice solver, double tol, std::uint64_t seed,
                               bool vectors = false, std::uint64_t dense_cap = 4000);

}  // namespace kinkxxz
