#include "kinkxxz/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <memory>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "kinkxxz/kernels.hpp"
#include "kinkxxz/kink_groundstate.hpp"

namespace kinkxxz {

using json = nlohmann::ordered_json;

namespace {

double to_double(const std::string& s) {
  double v = 0.0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw std::invalid_argument("not a number: '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string csv_safe(std::string s) {
  for (char& c : s)
    if (c == ',' || c == '\n' || c == '\r' || c == '"') c = ';';
  return s;
}

json levels_json(const std::vector<SpectralLevel>& ls) {
  json a = json::array();
  for (const auto& l : ls) a.push_back({{"energy", l.energy}, {"multiplicity", l.multiplicity}});
  return a;
}

}  // namespace

std::vector<int> SweepPlan::sectors() const {
  if (!all_sectors) {
    std::vector<int> s = two_m;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  }
  std::vector<int> out;
  for (HalfInt m : sector_magnetizations(spin(), length)) out.push_back(static_cast<int>(m.twice()));
  return out;
}

void validate_plan(const SweepPlan& plan) {
  if (plan.two_j < 1) throw std::invalid_argument("spin must be >= 1/2");
  if (plan.length < 1) throw std::invalid_argument("length must be >= 1");
  if (plan.k < 1) throw std::invalid_argument("k must be >= 1");
  if (plan.delta_inv.empty()) throw std::invalid_argument("empty delta_inv grid");
  for (double d : plan.delta_inv)
    if (!(d >= 0.0 && d <= 1.0)) throw std::invalid_argument("delta_inv " + format_double(d) + " outside [0, 1]");
  if (!plan.all_sectors && plan.two_m.empty()) throw std::invalid_argument("no sector selected");
  for (int m : plan.sectors())
    if (sector_dimension(plan.spin(), plan.length, HalfInt::from_twice(m)) == 0)
      throw std::invalid_argument("unreachable sector two_m=" + std::to_string(m));
}

std::vector<double> parse_grid(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw std::invalid_argument("grid must be start:stop:count, got '" + text + "'");
  const double a = to_double(parts[0]);
  const double b = to_double(parts[1]);
  int n = 0;
  auto [p, ec] = std::from_chars(parts[2].data(), parts[2].data() + parts[2].size(), n);
  if (ec != std::errc() || p != parts[2].data() + parts[2].size() || n < 1)
    throw std::invalid_argument("grid count must be a positive integer, got '" + parts[2] + "'");
  if (n == 1) return {a};
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[i] = a + (b - a) * i / (n - 1);
  out.back() = b;
  return out;
}

std::vector<double> parse_delta_list(const std::string& list) {
  std::vector<double> out;
  for (const auto& tok : split(list, ',')) {
    if (tok == "inf" || tok == "Inf") {
      out.push_back(0.0);
      continue;
    }
    const double d = to_double(tok);
    if (!(d >= 1.0)) throw std::invalid_argument("delta must be >= 1, got '" + tok + "'");
    out.push_back(1.0 / d);
  }
  if (out.empty()) throw std::invalid_argument("empty delta list");
  return out;
}

std::string to_string(SolverChoice s) {
  switch (s) {
    case SolverChoice::dense: return "dense";
    case SolverChoice::lanczos: return "lanczos";
    case SolverChoice::automatic: return "auto";
  }
  return "auto";
}

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

SweepResult run_sweep(const SweepPlan& plan) {
  validate_plan(plan);
  const std::vector<int> sectors = plan.sectors();
  std::vector<std::shared_ptr<const SectorBasis>> bases;
  for (int m : sectors)
    bases.push_back(std::make_shared<const SectorBasis>(plan.spin(), plan.length, HalfInt::from_twice(m)));

  const int nd = static_cast<int>(plan.delta_inv.size());
  const int jobs = static_cast<int>(sectors.size()) * nd;
  std::vector<std::vector<SweepRow>> out(static_cast<std::size_t>(jobs));
  const double band = static_cast<double>(plan.two_j);

#pragma omp parallel for schedule(dynamic, 1)
  for (int j = 0; j < jobs; ++j) {
    const int s = j / nd;
    const double dinv = plan.delta_inv[static_cast<std::size_t>(j % nd)];
    SweepRow base;
    base.two_j = plan.two_j;
    base.length = plan.length;
    base.two_m = sectors[static_cast<std::size_t>(s)];
    base.delta_inv = dinv;
    base.band_edge = band;
    try {
      const SectorOperator op = build_sector_operator(bases[static_cast<std::size_t>(s)], plan.variant, dinv);
      const SpectrumRecord rec = lowest_spectrum(op, plan.k, plan.solver, plan.tol, plan.seed, false, plan.dense_cap);
      std::size_t i = 0;
      for (const Cluster& c : rec.clusters)
        for (int r = 0; r < c.multiplicity; ++r, ++i) {
          SweepRow row = base;
          row.eig_index = static_cast<int>(i);
          row.eigenvalue = rec.eigenvalues[i];
          row.residual = rec.residuals[i];
          row.multiplicity_cluster = c.multiplicity;
          out[static_cast<std::size_t>(j)].push_back(row);
        }
    } catch (const std::exception& e) {
      out[static_cast<std::size_t>(j)].clear();
      base.status = std::string("error: ") + e.what();
      out[static_cast<std::size_t>(j)].push_back(base);
    }
  }

  SweepResult r;
  r.plan = plan;
  r.jobs = jobs;
  for (auto& rows : out) {
    if (!rows.empty() && rows.front().eig_index < 0) ++r.failed_jobs;
    for (auto& row : rows) r.rows.push_back(std::move(row));
  }
  return r;
}

std::string sweep_csv(const SweepResult& r) {
  std::string s = "two_j,L,two_m,delta_inv,eig_index,eigenvalue,residual,multiplicity_cluster,band_edge,status\n";
  for (const auto& row : r.rows) {
    const bool ok = row.eig_index >= 0;
    s += std::to_string(row.two_j) + ',' + std::to_string(row.length) + ',' + std::to_string(row.two_m) + ',' +
         format_double(row.delta_inv) + ',' + (ok ? std::to_string(row.eig_index) : "") + ',' +
         (ok ? format_double(row.eigenvalue) : "") + ',' + (ok ? format_double(row.residual) : "") + ',' +
         (ok ? std::to_string(row.multiplicity_cluster) : "") + ',' + format_double(row.band_edge) + ',' +
         csv_safe(row.status) + '\n';
  }
  return s;
}

std::string sweep_json(const SweepResult& r) {
  const SweepPlan& p = r.plan;
  json header = {{"two_j", p.two_j},
                 {"L", p.length},
                 {"all_sectors", p.all_sectors},
                 {"two_m", p.sectors()},
                 {"delta_inv", p.delta_inv},
                 {"k", p.k},
                 {"solver", to_string(p.solver)},
                 {"tol", p.tol},
                 {"seed", p.seed},
                 {"variant", std::string(to_string(p.variant))},
                 {"dense_cap", p.dense_cap},
                 {"jobs", r.jobs},
                 {"failed_jobs", r.failed_jobs}};
  json rows = json::array();
  for (const auto& row : r.rows) {
    const bool ok = row.eig_index >= 0;
    json o = {{"two_j", row.two_j}, {"L", row.length}, {"two_m", row.two_m}, {"delta_inv", row.delta_inv}};
    o["eig_index"] = ok ? json(row.eig_index) : json(nullptr);
    o["eigenvalue"] = ok ? json(row.eigenvalue) : json(nullptr);
    o["residual"] = ok ? json(row.residual) : json(nullptr);
    o["multiplicity_cluster"] = ok ? json(row.multiplicity_cluster) : json(nullptr);
    o["band_edge"] = row.band_edge;
    o["status"] = row.status;
    rows.push_back(std::move(o));
  }
  json doc = {{"header", header}, {"rows", rows}};
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------

bool IsingReport::pass() const {
  return std::all_of(sectors.begin(), sectors.end(), [](const SectorCheck& s) { return s.pass(); });
}

IsingReport verify_ising_theorems(HalfInt spin, int length, std::uint64_t budget) {
  if (spin.twice() < 1) throw std::invalid_argument("spin must be >= 1/2");
  if (length < 1) throw std::invalid_argument("length must be >= 1");
  long double total = std::pow(static_cast<long double>(spin.twice() + 1), 2 * length + 1);
  if (total > static_cast<long double>(budget))
    throw std::length_error("state space (2J+1)^(2L+1) exceeds the exhaustive budget " + std::to_string(budget));

  const std::vector<HalfInt> ms = sector_magnetizations(spin, length);
  IsingReport rep;
  rep.spin = spin;
  rep.length = length;
  rep.sectors.resize(ms.size());
  const std::int64_t tj = spin.twice();

#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const SectorBasis basis(spin, length, ms[i]);
    SectorCheck& c = rep.sectors[i];
    c.two_m = static_cast<int>(ms[i].twice());
    c.dim = basis.dim();
    c.ground = ground_descriptor(spin, length, ms[i]);
    c.bulk = is_bulk_sector(spin, length, ms[i]);
    c.predicted_low = predicted_low_spectrum(spin, length, ms[i]);
    c.band_edge_bound = band_edge_multiplicity_lower_bound(spin, length, ms[i]);

    std::map<std::int64_t, std::uint64_t> counts;
    std::vector<int> q(static_cast<std::size_t>(basis.sites()));
    basis.unrank_quanta(0, q);
    do {
      std::int64_t e = 0;
      for (std::size_t p = 0; p + 1 < q.size(); ++p) e += (tj - q[p]) * q[p + 1];
      ++counts[e];
      if (has_high_energy_pattern(IsingConfig::from_quanta(spin, length, q))) {
        ++c.pattern_configs;
        if (e < tj) ++c.pattern_violations;
      }
    } while (basis.next_quanta(q));

    c.zero_energy_configs = counts.contains(0) ? counts[0] : 0;
    for (const auto& [e, n] : counts)
      if (e < tj) c.observed_low.push_back({e, static_cast<int>(n)});
    c.band_edge_observed = counts.contains(tj) ? counts[tj] : 0;
  }
  return rep;
}

std::string ising_report_json(const IsingReport& r) {
  json sectors = json::array();
  for (const auto& c : r.sectors) {
    json o = {{"two_m", c.two_m},
              {"dim", c.dim},
              {"ground", {{"x", c.ground.x}, {"two_m_site", c.ground.m.twice()}}},
              {"bulk", c.bulk},
              {"zero_energy_configs", c.zero_energy_configs},
              {"observed_low", levels_json(c.observed_low)}};
    o["predicted_low"] = c.predicted_low ? levels_json(*c.predicted_low) : json(nullptr);
    o["pattern_configs"] = c.pattern_configs;
    o["pattern_violations"] = c.pattern_violations;
    o["band_edge_observed"] = c.band_edge_observed;
    o["band_edge_bound"] = c.band_edge_bound;
    o["checks"] = {{"unique_ground", c.unique_ground()},
                   {"low_spectrum", c.predicted_low ? json(c.low_spectrum_match()) : json("not_covered")},
                   {"high_energy_patterns", c.pattern_ok()},
                   {"band_edge", c.band_edge_ok()}};
    o["pass"] = c.pass();
    sectors.push_back(std::move(o));
  }
  json doc = {{"two_j", r.spin.twice()}, {"L", r.length}, {"pass", r.pass()}, {"sectors", sectors}};
  return doc.dump(2) + "\n";
}

std::string ising_report_csv(const IsingReport& r) {
  std::string s =
      "two_j,L,two_m,dim,ground_x,ground_two_m,bulk,zero_energy_configs,low_levels,predicted_low_levels,"
      "pattern_violations,band_edge_observed,band_edge_bound,a_unique_ground,b_low_spectrum,c_patterns,d_band_edge\n";
  auto levels = [](const std::vector<SpectralLevel>& ls) {
    std::string t;
    for (const auto& l : ls) t += (t.empty() ? "" : " ") + std::to_string(l.energy) + "x" + std::to_string(l.multiplicity);
    return t;
  };
  auto pf = [](bool b) { return std::string(b ? "pass" : "fail"); };
  for (const auto& c : r.sectors) {
    s += std::to_string(r.spin.twice()) + ',' + std::to_string(r.length) + ',' + std::to_string(c.two_m) + ',' +
         std::to_string(c.dim) + ',' + std::to_string(c.ground.x) + ',' + std::to_string(c.ground.m.twice()) + ',' +
         (c.bulk ? "1" : "0") + ',' + std::to_string(c.zero_energy_configs) + ',' + levels(c.observed_low) + ',' +
         (c.predicted_low ? levels(*c.predicted_low) : std::string("n/a")) + ',' + std::to_string(c.pattern_violations) +
         ',' + std::to_string(c.band_edge_observed) + ',' + std::to_string(c.band_edge_bound) + ',' +
         pf(c.unique_ground()) + ',' + (c.predicted_low ? pf(c.low_spectrum_match()) : std::string("not_covered")) +
         ',' + pf(c.pattern_ok()) + ',' + pf(c.band_edge_ok()) + '\n';
  }
  return s;
}

// ---------------------------------------------------------------------------

ProfileResult emit_profile(HalfInt spin, int length, HalfInt magnetization, double delta, SolverChoice solver,
                           double tol, std::uint64_t seed) {
  if (!(delta > 1.0)) throw std::invalid_argument("profile needs delta > 1");
  auto basis = std::make_shared<const SectorBasis>(spin, length, magnetization);
  ProfileResult p;
  p.key = basis->key();
  p.delta = delta;

  const SectorVector g = groundstate_vector(basis, delta);
  p.ground = magnetization_profile(g);
  const SectorOperator op = build_sector_operator(basis, Variant::kink, 1.0 / delta);
  std::vector<double> hg(g.amplitudes.size());
  op.apply(g.amplitudes, hg);
  p.ground_residual = kernels::omp::norm(hg);

  if (basis->dim() > 1) {
    const SpectrumRecord rec = lowest_spectrum(op, 3, solver, tol, seed, true);
    SectorVector ex{basis, rec.eigenvectors[1], 1.0};
    p.excited = magnetization_profile(ex);
    p.excited_energy = rec.eigenvalues[1];
    std::size_t i = 0;
    for (const Cluster& c : rec.clusters) {
      if (1 < i + static_cast<std::size_t>(c.multiplicity)) {
        p.excited_multiplicity = c.multiplicity;
        break;
      }
      i += static_cast<std::size_t>(c.multiplicity);
    }
  }
  return p;
}

std::string profile_csv(const ProfileResult& p) {
  std::string s = "site,ground_profile,first_excited_profile\n";
  for (std::size_t i = 0; i < p.ground.size(); ++i)
    s += std::to_string(static_cast<int>(i) - p.key.length) + ',' + format_double(p.ground[i]) + ',' +
         (p.excited ? format_double((*p.excited)[i]) : std::string()) + '\n';
  return s;
}

std::string profile_json(const ProfileResult& p) {
  json rows = json::array();
  for (std::size_t i = 0; i < p.ground.size(); ++i) {
    json o = {{"site", static_cast<int>(i) - p.key.length}, {"ground_profile", p.ground[i]}};
    o["first_excited_profile"] = p.excited ? json((*p.excited)[i]) : json(nullptr);
    rows.push_back(std::move(o));
  }
  json header = {{"two_j", p.key.spin.twice()},
                 {"L", p.key.length},
                 {"two_m", p.key.magnetization.twice()},
                 {"delta", p.delta},
                 {"ground_residual", p.ground_residual}};
  header["first_excited_energy"] = p.excited ? json(p.excited_energy) : json(nullptr);
  header["first_excited_multiplicity"] = p.excited ? json(p.excited_multiplicity) : json(nullptr);
  json doc = {{"header", header}, {"rows", rows}};
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------

bool CertifyReport::pass() const {
  if (local_margin < -1e-12 || !bound_failures.empty()) return false;
  return std::all_of(levels.begin(), levels.end(),
                     [](const LevelCertificate& l) { return l.threshold_bracketed && l.simple_dominates; });
}

CertifyReport certify(HalfInt spin, int length, const std::vector<int>& two_m, int trials, std::uint64_t seed) {
  CertifyReport r;
  r.spin = spin;
  r.length = length;
  r.trials = trials;
  r.seed = seed;
  r.local_margin = local_inequality_margin(spin);
  const std::int64_t tj = spin.twice();
  for (int tm : two_m) {
    const HalfInt m = HalfInt::from_twice(tm);
    const SectorBasis basis(spin, length, m);
    for (const auto& [e, n] : ising_level_counts(basis)) {
      if (e <= 0 || e >= tj) continue;
      const IsolationDistance d = isolation_distance(spin, length, m, e);
      LevelCertificate lc;
      lc.two_m = tm;
      lc.cert = certificate_constants(spin, static_cast<double>(e), static_cast<double>(d.value), d.exact);
      lc.threshold_bracketed = perturbation_series_bound(lc.cert, lc.cert.delta_star * (1.0 + 1e-6)) < 1.0 &&
                               perturbation_series_bound(lc.cert, lc.cert.delta_star * (1.0 - 1e-6)) >= 1.0;
      lc.simple_dominates = lc.cert.delta_star <= lc.cert.delta_simple;
      r.levels.push_back(lc);
    }
    r.boundary_norms.emplace_back(tm, boundary_operator_norm(spin, length, m));
    if (trials > 0) {
      try {
        r.bound_checks.emplace_back(tm, random_vector_bound_check(spin, length, m, trials, seed));
      } catch (const BoundViolation& e) {
        r.bound_failures.emplace_back(tm, e.what());
      }
    }
  }
  return r;
}

std::string certify_json(const CertifyReport& r) {
  json certs = json::array();
  for (const auto& l : r.levels) {
    const Certificate& c = l.cert;
    certs.push_back({{"two_m", l.two_m},
                     {"J", c.spin.value()},
                     {"E", c.energy},
                     {"d", c.distance},
                     {"d_exact", c.distance_exact},
                     {"C1", c.c1},
                     {"C2", c.c2},
                     {"delta_star", c.delta_star},
                     {"delta_simple", c.delta_simple},
                     {"threshold_bracketed", l.threshold_bracketed},
                     {"delta_star_le_delta_simple", l.simple_dominates}});
  }
  json checks = json::array();
  for (const auto& [tm, b] : r.bound_checks)
    checks.push_back({{"two_m", tm}, {"trials", b.trials}, {"max_ratio", b.max_ratio}, {"worst_trial", b.worst_trial}});
  json fails = json::array();
  for (const auto& [tm, msg] : r.bound_failures) fails.push_back({{"two_m", tm}, {"error", msg}});
  json norms = json::array();
  for (const auto& [tm, v] : r.boundary_norms) norms.push_back({{"two_m", tm}, {"boundary_norm", v}});
  json doc = {{"two_j", r.spin.twice()},
              {"L", r.length},
              {"local_inequality_margin", r.local_margin},
              {"seed", r.seed},
              {"certificates", certs},
              {"relative_bound_checks", checks},
              {"relative_bound_failures", fails},
              {"boundary_norms", norms},
              {"pass", r.pass()}};
  return doc.dump(2) + "\n";
}

}  // namespace kinkxxz
