#pragma once

#include <cstdint>
#include <vector>

#include "chiralpol/config.hpp"
#include "chiralpol/emitter.hpp"
#include "chiralpol/fields.hpp"
#include "chiralpol/scan_table.hpp"

namespace chiralpol {

struct PhysicsSetup {
  Emitter emitter;
  CavityMode mode;
  std::uint64_t n_emitters = 100;
};

/// Emitter, mode, and N from the shared physics keys (see README for the key list).
PhysicsSetup physics_from_config(const Config& config);

/// (omega_k, xi) grid of the chiral Hopfield solution.
ScanTable scan_cavity(const Config& config);

/// N sweep of the enantiomer discrimination with local log-log slopes.
ScanTable scan_n(const Config& config);

/// k_par sweep of the chiral Tavis-Cummings bright sector.
ScanTable scan_dispersion(const Config& config);

struct OracleSuiteResult {
  ScanTable table;
  std::size_t failures = 0;
};

/// Randomized oracle_check grid.
OracleSuiteResult run_oracle_suite(const Config& config);

/// Least-squares slope of log y against log n over n in [n_lo, n_hi],
/// skipping non-positive values.
double loglog_slope(const std::vector<double>& n, const std::vector<double>& y, double n_lo, double n_hi);

/// n points from lo to hi inclusive, mirror-symmetric about the midpoint.
std::vector<double> linear_grid(double lo, double hi, std::size_t n);

}  // namespace chiralpol
