#include "chiralpol/scans.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "chiralpol/errors.hpp"
#include "chiralpol/hopfield.hpp"
#include "chiralpol/model.hpp"
#include "chiralpol/oracle.hpp"
#include "chiralpol/tavis_cummings.hpp"

namespace chiralpol {

namespace {

constexpr double kDefaultScanNXi = 3.712e-5;

Mat3 matrix_key(const Config& config, const std::string& key, const Mat3& fallback) {
  // Defaults are symmetric, so Eigen's storage order does not matter here.
  const std::vector<double> flat(fallback.data(), fallback.data() + 9);
  const auto v = config.get_list(key, flat);
  if (v.size() != 9) throw ConfigError(key, "expected 9 comma-separated values (row-major 3x3)");
  Mat3 m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = v[static_cast<std::size_t>(3 * r + c)];
  return m;
}

Handedness handedness_key(const Config& config) {
  const double l = config.get_double("lambda", 1.0);
  if (l == 1.0) return Handedness::left;
  if (l == -1.0) return Handedness::right;
  throw ConfigError("lambda", "must be 1 (left) or -1 (right)");
}

double positive_key(const Config& config, const std::string& key, double fallback) {
  const double v = config.get_double(key, fallback);
  if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError(key, "must be positive and finite");
  return v;
}

std::size_t points_key(const Config& config, const std::string& key, std::uint64_t fallback) {
  const std::uint64_t v = config.get_uint(key, fallback);
  if (v < 1) throw ConfigError(key, "must be at least 1");
  return static_cast<std::size_t>(v);
}

// Options every subcommand accepts. The seed only drives the oracle sampling;
// the scans are deterministic and merely echo it.
void common_keys(const Config& config, const std::string& subcommand) {
  const std::string s = config.get_string("subcommand", subcommand);
  if (s != subcommand) throw ConfigError("subcommand", "file is for '" + s + "', not '" + subcommand + "'");
  config.get_uint("seed", 0);
}

void finish(const Config& config, ScanTable& table) {
  for (const auto& [key, value] : config.resolved()) table.add_metadata(key, value);
}

std::vector<double> zero_row(std::size_t width) { return std::vector<double>(width, 0.0); }

}  // namespace

PhysicsSetup physics_from_config(const Config& config) {
  PhysicsSetup s;
  s.mode.handedness = handedness_key(config);
  s.mode.omega_k = positive_key(config, "omega_k", 0.09);
  s.mode.eta = config.get_double("eta", 1e-3);
  s.mode.z = config.get_double("z", 0.0);
  s.mode.k_z = config.get_double("k_z", s.mode.omega_k / kSpeedOfLight);

  s.emitter.omega_m = positive_key(config, "omega_m", 0.09);
  const auto mu = config.get_list("mu", {4.0, 0.0, 0.0});
  if (mu.size() != 3) throw ConfigError("mu", "expected 3 comma-separated values");
  s.emitter.mu = Vec3(mu[0], mu[1], mu[2]);
  s.emitter.xi_scale = config.get_double("xi", 0.0);
  s.emitter.xi_rotation = matrix_key(config, "xi_rotation", Mat3::Identity());
  s.emitter.roll_delta = config.get_double("roll_delta", 0.0);
  s.emitter.quadrupole = matrix_key(config, "quadrupole", Mat3::Zero());
  s.emitter.chi_m = matrix_key(config, "chi_m", Mat3::Zero());

  s.n_emitters = config.get_uint("n_emitters", 100);
  if (s.n_emitters < 1) throw ConfigError("n_emitters", "must be at least 1");

  try {
    s.mode.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError("omega_k/eta/k_z/z", e.what());
  }
  try {
    s.emitter.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError("omega_m/mu/xi/xi_rotation/roll_delta/quadrupole/chi_m", e.what());
  }
  return s;
}

std::vector<double> linear_grid(double lo, double hi, std::size_t n) {
  if (n == 0) return {};
  if (n == 1) return {0.5 * (lo + hi)};
  std::vector<double> out(n);
  const double last = static_cast<double>(n - 1);
  // Weighted form keeps the grid mirror-symmetric, so 0 is hit exactly for
  // symmetric ranges with an odd point count.
  for (std::size_t i = 0; i < n; ++i)
    out[i] = lo * (static_cast<double>(n - 1 - i) / last) + hi * (static_cast<double>(i) / last);
  return out;
}

double loglog_slope(const std::vector<double>& n, const std::vector<double>& y, double n_lo, double n_hi) {
  if (n.size() != y.size()) throw std::invalid_argument("loglog_slope: size mismatch");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i] < n_lo || n[i] > n_hi || !(n[i] > 0.0) || !(y[i] > 0.0)) continue;
    const double lx = std::log(n[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++k;
  }
  if (k < 2) throw std::invalid_argument("loglog_slope: fewer than two usable points in range");
  const double kk = static_cast<double>(k);
  return (kk * sxy - sx * sy) / (kk * sxx - sx * sx);
}

ScanTable scan_cavity(const Config& config) {
  common_keys(config, "scan-cavity");
  const PhysicsSetup base = physics_from_config(config);
  const double lo = positive_key(config, "omega_k_min_ratio", 0.8);
  const double hi = positive_key(config, "omega_k_max_ratio", 1.2);
  const std::size_t n_omega = points_key(config, "omega_k_points", 81);
  const std::string reference = config.get_string("omega_k_reference", "dressed");
  const double xi_lo = config.get_double("xi_min", -1.0);
  const double xi_hi = config.get_double("xi_max", 1.0);
  const std::size_t n_xi = points_key(config, "xi_points", 41);
  const std::string axis = config.get_string("chirality_axis", "effective");
  config.reject_unused();
  if (reference != "dressed" && reference != "bare")
    throw ConfigError("omega_k_reference", "must be 'dressed' or 'bare'");
  if (axis != "effective" && axis != "bare") throw ConfigError("chirality_axis", "must be 'effective' or 'bare'");

  const double omega_ref = reference == "bare"
                               ? base.emitter.omega_m
                               : dressed_matter_frequency(base.emitter, base.mode, base.n_emitters);

  ScanTable table({"omega_k", "xi", "xi_scale", "xi_tilde_lambda", "omega_plus", "omega_minus",
                   "photon_fraction_plus", "photon_fraction_minus", "matter_fraction_plus",
                   "matter_fraction_minus", "e_vac", "unstable"});
  const auto xis = linear_grid(xi_lo, xi_hi, n_xi);
  for (const double ratio : linear_grid(lo, hi, n_omega)) {
    CavityMode mode = base.mode;
    mode.omega_k = ratio * omega_ref;
    mode.k_z = mode.omega_k / kSpeedOfLight;
    // xi~ is linear in the emitter scale s, so one unit-s evaluation maps the
    // effective axis back onto s.
    double xi_tilde_per_s = 1.0;
    if (axis == "effective") {
      Emitter unit = base.emitter;
      unit.xi_scale = 1.0;
      try {
        xi_tilde_per_s = derive_couplings(unit, mode, base.n_emitters).xi_tilde;
      } catch (const InstabilityError&) {
        xi_tilde_per_s = 0.0;
      }
    }
    for (const double xi : xis) {
      std::vector<double> row = zero_row(table.column_names().size());
      row[0] = mode.omega_k;
      row[1] = xi;
      if (xi_tilde_per_s == 0.0) {
        row.back() = 1.0;
        table.add_row(std::move(row));
        continue;
      }
      Emitter e = base.emitter;
      e.xi_scale = axis == "effective" ? xi / xi_tilde_per_s : xi;
      row[2] = e.xi_scale;
      try {
        const DerivedCouplings c = derive_couplings(e, mode, base.n_emitters);
        const PolaritonSolution s = solve_hopfield(c);
        row[3] = c.chirality();
        row[4] = s.omega_plus;
        row[5] = s.omega_minus;
        row[6] = s.photon_fraction_plus;
        row[7] = s.photon_fraction_minus;
        row[8] = s.matter_fraction_plus;
        row[9] = s.matter_fraction_minus;
        row[10] = s.e_vac;
      } catch (const InstabilityError&) {
        row = zero_row(row.size());
        row[0] = mode.omega_k;
        row[1] = xi;
        row[2] = e.xi_scale;
        row.back() = 1.0;
      }
      table.add_row(std::move(row));
    }
  }
  finish(config, table);
  return table;
}

namespace {

Discrimination discrimination_local(const Emitter& e, const CavityMode& mode, std::uint64_t n) {
  const PolaritonFrequencies f = polariton_frequencies_local_selfpol(e, mode, n);
  const PolaritonFrequencies m = polariton_frequencies_local_selfpol(e.mirrored(), mode, n);
  return {f.omega_plus - m.omega_plus, f.omega_minus - m.omega_minus, vacuum_energy(f) - vacuum_energy(m)};
}

}  // namespace

ScanTable scan_n(const Config& config) {
  common_keys(config, "scan-n");
  // The N sweep defaults to the conservative dye chirality rather than 0.
  Config cfg = config;
  if (!cfg.has("xi")) cfg.set("xi", format_number(kDefaultScanNXi));
  const PhysicsSetup base = physics_from_config(cfg);
  const std::uint64_t e_lo = cfg.get_uint("n_min_exp", 0);
  const std::uint64_t e_hi = cfg.get_uint("n_max_exp", 20);
  const std::string model = cfg.get_string("self_polarization", "collective");
  cfg.reject_unused();
  if (e_hi > 62 || e_lo > e_hi) throw ConfigError("n_max_exp", "need n_min_exp <= n_max_exp <= 62");
  if (model != "collective" && model != "local")
    throw ConfigError("self_polarization", "must be 'collective' or 'local'");

  std::vector<std::vector<double>> rows;
  std::vector<bool> ok;
  for (std::uint64_t k = e_lo; k <= e_hi; ++k) {
    const std::uint64_t n = std::uint64_t{1} << k;
    std::vector<double> row = zero_row(6);
    row[0] = static_cast<double>(n);
    try {
      const Discrimination d = model == "local" ? discrimination_local(base.emitter, base.mode, n)
                                                : discrimination(base.emitter, base.mode, n);
      row[1] = d.delta_omega_plus;
      row[2] = d.delta_omega_minus;
      row[3] = d.delta_e_vac;
    } catch (const InstabilityError&) {
      row[5] = 1.0;
    }
    ok.push_back(row[5] == 0.0 && row[3] != 0.0);
    rows.push_back(std::move(row));
  }
  // Local slope d log|dE_vac| / d log N from the neighbouring usable points.
  ScanTable out({"n", "delta_omega_plus", "delta_omega_minus", "delta_e_vac", "local_slope", "unstable"});
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<double> row = rows[i];
    if (ok[i]) {
      const std::size_t a = (i > 0 && ok[i - 1]) ? i - 1 : i;
      const std::size_t b = (i + 1 < rows.size() && ok[i + 1]) ? i + 1 : i;
      if (a != b) row[4] = std::log(std::abs(rows[b][3] / rows[a][3])) / std::log(rows[b][0] / rows[a][0]);
    }
    out.add_row(std::move(row));
  }
  finish(cfg, out);
  return out;
}

ScanTable scan_dispersion(const Config& config) {
  common_keys(config, "scan-dispersion");
  const PhysicsSetup base = physics_from_config(config);
  const double k_lo = config.get_double("k_par_min", 0.0);
  const double k_hi = config.get_double("k_par_max", 2.0 * base.mode.k_z);
  const std::size_t points = points_key(config, "k_par_points", 41);
  config.reject_unused();
  ScanTable table = dispersion_scan(base.emitter, base.mode, base.n_emitters, linear_grid(k_lo, k_hi, points));
  finish(config, table);
  return table;
}

OracleSuiteResult run_oracle_suite(const Config& config) {
  common_keys(config, "oracle");
  const std::uint64_t samples = config.get_uint("samples", 200);
  const std::uint64_t seed = config.get_uint("seed", 0);
  FockConfig fock;
  fock.cutoff = static_cast<std::size_t>(config.get_uint("cutoff", 40));
  fock.tol = positive_key(config, "tol", 1e-8);
  fock.convergence_factor = static_cast<std::size_t>(config.get_uint("convergence_factor", 2));
  const double w_lo = positive_key(config, "omega_min", 0.5);
  const double w_hi = positive_key(config, "omega_max", 2.0);
  const double g_ratio = config.get_double("coupling_max_ratio", 0.3);
  const double s_lo = config.get_double("chirality_min", -1.0);
  const double s_hi = config.get_double("chirality_max", 1.0);
  config.reject_unused();
  try {
    fock.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError("cutoff/tol/convergence_factor", e.what());
  }
  if (w_lo > w_hi) throw ConfigError("omega_min", "must not exceed omega_max");
  if (!(g_ratio >= 0.0)) throw ConfigError("coupling_max_ratio", "must be non-negative");
  if (s_lo > s_hi) throw ConfigError("chirality_min", "must not exceed chirality_max");

  std::mt19937_64 rng(seed);
  // Top 53 bits -> [0, 1); avoids implementation-defined distributions.
  const auto uniform = [&rng](double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };

  OracleSuiteResult result;
  result.table = ScanTable({"case", "omega_photon", "omega_matter", "coupling", "chirality", "omega_plus",
                            "omega_minus", "analytic_omega_plus", "analytic_omega_minus", "deviation_plus",
                            "deviation_minus", "e0_offset", "ladder_residual", "check_deviation", "converged",
                            "degenerate", "ambiguous", "pass"});
  std::uint64_t done = 0;
  std::uint64_t attempts = 0;
  while (done < samples) {
    if (++attempts > 1000 * (samples + 1)) throw NumericalFailure("oracle suite: no stable draws in range");
    HopfieldParameters p;
    p.omega_photon = uniform(w_lo, w_hi);
    p.omega_matter = uniform(w_lo, w_hi);
    p.coupling = uniform(0.0, g_ratio * p.omega_matter);
    p.chirality = uniform(s_lo, s_hi);
    try {
      polariton_frequencies(p);
    } catch (const InstabilityError&) {
      continue;
    }
    const OracleReport r = oracle_check(p, fock);
    const bool pass = r.within_tolerance;
    if (!pass) ++result.failures;
    result.table.add_row({static_cast<double>(done), p.omega_photon, p.omega_matter, p.coupling, p.chirality,
                          r.omega_plus, r.omega_minus, r.analytic_omega_plus, r.analytic_omega_minus,
                          r.deviation_plus, r.deviation_minus, r.e0_offset, r.ladder_residual, r.check_deviation,
                          r.converged ? 1.0 : 0.0, r.degenerate ? 1.0 : 0.0, r.ambiguous ? 1.0 : 0.0,
                          pass ? 1.0 : 0.0});
    ++done;
  }
  finish(config, result.table);
  return result;
}

}  // namespace chiralpol
