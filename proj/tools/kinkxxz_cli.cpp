// kinkxxz: spectra, sweeps and Ising-limit checks for the spin-J XXZ kink chain.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <omp.h>

#include <CLI11.hpp>

#include "kinkxxz/sweep.hpp"

using namespace kinkxxz;

namespace {

struct Common {
  std::string spin;
  int two_j = 0;
  int length = 0;
  std::vector<std::string> m;
  std::vector<int> two_m;
  bool all_sectors = false;
  std::string delta_inv;
  std::string delta;
  int k = 4;
  std::string solver = "auto";
  double tol = 1e-10;
  std::uint64_t seed = 0;
  std::string format = "csv";
  std::string out;
  int threads = 0;
  std::string variant = "kink";
};

void add_common(CLI::App* app, Common& c, bool sectors, bool grid) {
  auto* sp = app->add_option("-J,--spin", c.spin, "spin J as 3/2, 1.5 or 2");
  auto* tj = app->add_option("--two-j", c.two_j, "spin as the doubled integer 2J");
  sp->excludes(tj);
  app->add_option("-L,--length", c.length, "half-length L (sites -L..L)")->required();
  if (sectors) {
    auto* hm = app->add_option("-M,--m", c.m, "sector magnetization(s) as half-integers")->delimiter(',');
    auto* dm = app->add_option("--two-m", c.two_m, "sector magnetization(s) as doubled integers")->delimiter(',');
    auto* all = app->add_flag("--all-sectors", c.all_sectors, "every sector of the chain");
    all->excludes(hm)->excludes(dm);
    hm->excludes(dm);
  }
  if (grid) {
    auto* di = app->add_option("--delta-inv", c.delta_inv, "anisotropy grid start:stop:count on [0, 1]");
    auto* d = app->add_option("--delta", c.delta, "comma separated list of Delta >= 1 (inf allowed)");
    di->excludes(d);
    app->add_option("--k", c.k, "number of lowest eigenvalues")->check(CLI::PositiveNumber);
    app->add_option("--solver", c.solver, "dense|lanczos|auto")->check(CLI::IsMember({"dense", "lanczos", "auto"}));
    app->add_option("--tol", c.tol, "Lanczos residual tolerance")->check(CLI::PositiveNumber);
    app->add_option("--seed", c.seed, "seed for Lanczos start vectors / random trials");
  }
  app->add_option("--format", c.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  app->add_option("--out", c.out, "output file (stdout when absent)");
  app->add_option("--threads", c.threads, "OpenMP threads (0 = runtime default)")->check(CLI::NonNegativeNumber);
}

HalfInt spin_of(const Common& c) {
  if (!c.spin.empty()) return HalfInt::parse(c.spin);
  if (c.two_j < 1) throw std::invalid_argument("give the spin with -J/--spin or --two-j");
  return HalfInt::from_twice(c.two_j);
}

std::vector<int> sectors_of(const Common& c, HalfInt spin) {
  std::vector<int> out = c.two_m;
  for (const auto& s : c.m) out.push_back(static_cast<int>(HalfInt::parse(s).twice()));
  if (c.all_sectors) {
    out.clear();
    for (HalfInt m : sector_magnetizations(spin, c.length)) out.push_back(static_cast<int>(m.twice()));
  }
  return out;
}

std::vector<double> grid_of(const Common& c) {
  if (!c.delta.empty()) return parse_delta_list(c.delta);
  if (!c.delta_inv.empty()) return parse_grid(c.delta_inv);
  return {0.0};
}

void write(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream f(c.out, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open '" + c.out + "' for writing");
  f.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!f) throw std::runtime_error("write to '" + c.out + "' failed");
}

SweepPlan plan_of(const Common& c) {
  const HalfInt spin = spin_of(c);
  SweepPlan p;
  p.two_j = static_cast<int>(spin.twice());
  p.length = c.length;
  p.all_sectors = c.all_sectors;
  p.two_m = sectors_of(c, spin);
  p.delta_inv = grid_of(c);
  p.k = c.k;
  p.solver = parse_solver(c.solver);
  p.tol = c.tol;
  p.seed = c.seed;
  p.variant = parse_variant(c.variant);
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kinkxxz: spin-J XXZ chain with kink boundary conditions"};
  app.require_subcommand(1);

  Common spectrum_opts, sweep_opts, ising_opts, profile_opts, certify_opts;
  bool full = false;
  auto* spectrum = app.add_subcommand("spectrum", "lowest eigenvalues of one sector at one anisotropy");
  add_common(spectrum, spectrum_opts, true, true);
  spectrum->add_option("--variant", spectrum_opts.variant, "kink|antikink|ising-kink|ising-free|h1|h2");
  spectrum->add_flag("--full", full, "whole spectrum (dense)");

  auto* sweep = app.add_subcommand("sweep", "spectra over sectors x anisotropy grid");
  add_common(sweep, sweep_opts, true, true);
  sweep->add_option("--variant", sweep_opts.variant, "kink|antikink|ising-kink|ising-free|h1|h2");

  std::uint64_t budget = 10'000'000;
  auto* ising = app.add_subcommand("ising-check", "exhaustive Ising-limit checks of every sector");
  add_common(ising, ising_opts, false, false);
  ising->add_option("--budget", budget, "largest (2J+1)^(2L+1) to enumerate");

  auto* profile = app.add_subcommand("profile", "ground and first excited <S3> profiles");
  add_common(profile, profile_opts, true, true);

  int trials = 1000;
  auto* cert = app.add_subcommand("certify", "analyticity thresholds for the low Ising levels (JSON)");
  add_common(cert, certify_opts, true, true);
  cert->add_option("--trials", trials, "random vectors for the relative bound check (0 = skip)")
      ->check(CLI::NonNegativeNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    auto threads = [](const Common& c) {
      if (c.threads > 0) omp_set_num_threads(c.threads);
    };

    if (spectrum->parsed()) {
      Common& c = spectrum_opts;
      threads(c);
      SweepPlan p = plan_of(c);
      if (p.sectors().size() != 1 || p.delta_inv.size() != 1)
        throw std::invalid_argument("spectrum takes exactly one sector and one anisotropy value");
      if (full) {
        p.k = static_cast<int>(sector_dimension(p.spin(), p.length, HalfInt::from_twice(p.sectors()[0])));
        p.solver = SolverChoice::dense;
        p.dense_cap = std::max<std::uint64_t>(p.dense_cap, static_cast<std::uint64_t>(p.k));
      }
      const SweepResult r = run_sweep(p);
      write(c, c.format == "json" ? sweep_json(r) : sweep_csv(r));
      return r.ok() ? 0 : 1;
    }
    if (sweep->parsed()) {
      Common& c = sweep_opts;
      threads(c);
      const SweepResult r = run_sweep(plan_of(c));
      write(c, c.format == "json" ? sweep_json(r) : sweep_csv(r));
      if (!r.ok()) std::cerr << r.failed_jobs << " of " << r.jobs << " jobs failed\n";
      return r.ok() ? 0 : 1;
    }
    if (ising->parsed()) {
      Common& c = ising_opts;
      threads(c);
      const IsingReport r = verify_ising_theorems(spin_of(c), c.length, budget);
      write(c, c.format == "json" ? ising_report_json(r) : ising_report_csv(r));
      return r.pass() ? 0 : 1;
    }
    if (profile->parsed()) {
      Common& c = profile_opts;
      threads(c);
      const HalfInt spin = spin_of(c);
      const auto sectors = sectors_of(c, spin);
      const auto grid = grid_of(c);
      if (sectors.size() != 1 || grid.size() != 1 || !(grid[0] > 0.0 && grid[0] < 1.0))
        throw std::invalid_argument("profile takes one sector and one Delta > 1");
      const ProfileResult p = emit_profile(spin, c.length, HalfInt::from_twice(sectors[0]), 1.0 / grid[0],
                                           parse_solver(c.solver), c.tol, c.seed);
      write(c, c.format == "json" ? profile_json(p) : profile_csv(p));
      if (p.ground_residual > 1e-10) {
        std::cerr << "closed-form ground state residual " << p.ground_residual << " exceeds 1e-10\n";
        return 1;
      }
      return 0;
    }
    if (cert->parsed()) {
      Common& c = certify_opts;
      threads(c);
      const HalfInt spin = spin_of(c);
      const auto sectors = sectors_of(c, spin);
      if (sectors.empty()) throw std::invalid_argument("select sectors with -M, --two-m or --all-sectors");
      const CertifyReport r = certify(spin, c.length, sectors, trials, c.seed);
      write(c, certify_json(r));
      return r.pass() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
