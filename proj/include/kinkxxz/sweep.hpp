#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kinkxxz/certificates.hpp"
#include "kinkxxz/eigensolver.hpp"
#include "kinkxxz/half_int.hpp"
#include "kinkxxz/hamiltonian.hpp"
#include "kinkxxz/ising_analytics.hpp"

namespace kinkxxz {

/// One (sector, Delta^-1) grid of spectrum jobs.
struct SweepPlan {
  int two_j = 1;
  int length = 1;
  bool all_sectors = false;
  std::vector<int> two_m;  // ignored when all_sectors
  std::vector<double> delta_inv{0.0};
  int k = 4;
  SolverChoice solver = SolverChoice::automatic;
  double tol = 1e-10;
  std::uint64_t seed = 0;
  Variant variant = Variant::kink;
  std::uint64_t dense_cap = 4000;

  HalfInt spin() const { return HalfInt::from_twice(two_j); }
  /// Sectors in ascending two_m order (all_sectors expanded).
  std::vector<int> sectors() const;
};

/// Throws std::invalid_argument for grid points outside [0, 1], k < 1,
/// unreachable sectors or J < 1/2, L < 1.
void validate_plan(const SweepPlan& plan);

/// "start:stop:count" -> count evenly spaced points, endpoints included.
std::vector<double> parse_grid(const std::string& text);
/// "2.5,10" -> Delta^-1 values {0.4, 0.1}; "inf" gives 0.
std::vector<double> parse_delta_list(const std::string& list);

std::string to_string(SolverChoice s);

struct SweepRow {
  int two_j = 0;
  int length = 0;
  int two_m = 0;
  double delta_inv = 0.0;
  int eig_index = -1;  // -1 on a failed job
  double eigenvalue = 0.0;
  double residual = 0.0;
  int multiplicity_cluster = 0;
  double band_edge = 0.0;
  std::string status = "ok";
};

struct SweepResult {
  SweepPlan plan;
  std::vector<SweepRow> rows;  // (sector, delta_inv, eig_index) order
  int jobs = 0;
  int failed_jobs = 0;
  bool ok() const { return failed_jobs == 0; }
};

/// Jobs run in parallel, one per (sector, grid point); rows are assembled
/// afterwards in plan order. A failing job yields one row with an error
/// status and does not stop the others.
SweepResult run_sweep(const SweepPlan& plan);

std::string format_double(double v);
std::string sweep_csv(const SweepResult& r);
std::string sweep_json(const SweepResult& r);

// Exhaustive Ising-limit check of a whole chain.

struct SectorCheck {
  int two_m = 0;
  std::uint64_t dim = 0;
  GroundDescriptor ground;
  bool bulk = false;
  std::uint64_t zero_energy_configs = 0;
  std::vector<SpectralLevel> observed_low;  // levels in [0, 2J)
  std::optional<std::vector<SpectralLevel>> predicted_low;
  std::uint64_t pattern_configs = 0;     // configs with a high-energy pattern
  std::uint64_t pattern_violations = 0;  // ... of which below 2J
  std::uint64_t band_edge_observed = 0;
  std::uint64_t band_edge_bound = 0;

  bool unique_ground() const { return zero_energy_configs == 1; }
  /// true (vacuously) for edge sectors
  bool low_spectrum_match() const { return !predicted_low || *predicted_low == observed_low; }
  bool pattern_ok() const { return pattern_violations == 0; }
  bool band_edge_ok() const { return band_edge_observed >= band_edge_bound; }
  bool pass() const { return unique_ground() && low_spectrum_match() && pattern_ok() && band_edge_ok(); }
};

struct IsingReport {
  HalfInt spin;
  int length = 0;
  std::vector<SectorCheck> sectors;
  bool pass() const;
};

/// Throws std::length_error when (2J+1)^(2L+1) exceeds the budget.
IsingReport verify_ising_theorems(HalfInt spin, int length, std::uint64_t budget = 10'000'000);
std::string ising_report_json(const IsingReport& r);
std::string ising_report_csv(const IsingReport& r);

// Ground and first excited magnetization profiles.

struct ProfileResult {
  SectorKey key;
  double delta = 0.0;
  std::vector<double> ground;
  /// ||H psi|| of the closed-form ground state
  double ground_residual = 0.0;
  std::optional<std::vector<double>> excited;
  double excited_energy = 0.0;
  int excited_multiplicity = 0;
};

/// Requires delta > 1. The excited profile comes from the numerically
/// computed first excited eigenvector (absent when dim == 1).
ProfileResult emit_profile(HalfInt spin, int length, HalfInt magnetization, double delta, SolverChoice solver,
                           double tol, std::uint64_t seed);
std::string profile_csv(const ProfileResult& p);
std::string profile_json(const ProfileResult& p);

// Certificates for every low Ising level of a set of sectors.

struct LevelCertificate {
  int two_m = 0;
  Certificate cert;
  bool threshold_bracketed = false;  // series bound < 1 just above delta_star, >= 1 just below
  bool simple_dominates = false;     // delta_star <= 18 J^{5/2}
};

struct CertifyReport {
  HalfInt spin;
  int length = 0;
  std::vector<LevelCertificate> levels;
  double local_margin = 0.0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<std::pair<int, BoundCheck>> bound_checks;  // per sector, when trials > 0
  std::vector<std::pair<int, std::string>> bound_failures;
  std::vector<std::pair<int, double>> boundary_norms;
  bool pass() const;
};

CertifyReport certify(HalfInt spin, int length, const std::vector<int>& two_m, int trials, std::uint64_t seed);
std::string certify_json(const CertifyReport& r);

}  // namespace kinkxxz
