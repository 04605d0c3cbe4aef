#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "chiralpol/hopfield.hpp"
#include "chiralpol/model.hpp"

namespace chiralpol {

struct FockConfig {
  std::size_t cutoff = 40;             // max occupation per mode
  double tol = 1e-8;                   // relative acceptance on Omega_+-
  std::size_t convergence_factor = 2;  // cutoff multiplier of the convergence run; <= 1 skips it

  void validate() const;
};

/// Hermitian matrix stored as its lower band (LAPACK 'L' band layout,
/// column-major, leading dimension bandwidth + 1).
class BandedHermitian {
 public:
  BandedHermitian(std::size_t dim, std::size_t bandwidth);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t bandwidth() const noexcept { return bandwidth_; }

  /// Element (row, col) for any pair; zero outside the band.
  Complex operator()(std::size_t row, std::size_t col) const;
  /// Sets (row, col) with row >= col; the upper triangle follows by symmetry.
  void set_lower(std::size_t row, std::size_t col, Complex value);

  Eigen::MatrixXcd to_dense() const;
  const std::vector<Complex>& band() const noexcept { return band_; }

 private:
  std::size_t dim_;
  std::size_t bandwidth_;
  std::vector<Complex> band_;
};

/// Basis index of |n_photon, n_matter> in the row-major ordering
/// n_photon * (cutoff + 1) + n_matter.
std::size_t fock_index(std::size_t n_photon, std::size_t n_matter, std::size_t cutoff);

/// Two-mode chiral Hopfield Hamiltonian in a truncated Fock basis,
/// H = w~_m (B^+B + 1/2) + w-_k (a^+a + 1/2)
///     - i G [(B^+ + B)(a - a^+) + s (B^+ - B)(a + a^+)].
BandedHermitian build_fock_hamiltonian(const HopfieldParameters& p, const FockConfig& config);
BandedHermitian build_fock_hamiltonian(const DerivedCouplings& c, const FockConfig& config);

/// Sorted eigenvalues (LAPACK banded Hermitian solver).
std::vector<double> oracle_spectrum(const BandedHermitian& h);
/// Sorted eigenvalues of a dense Hermitian matrix (Eigen). Throws
/// std::invalid_argument if the matrix is not Hermitian.
std::vector<double> oracle_spectrum(const Eigen::MatrixXcd& h);

/// Sorted eigenvalues of build_fock_hamiltonian(p, {cutoff}) computed from two
/// real symmetric banded blocks: the phase change |n, m> -> i^n |n, m> makes every
/// matrix element real, and the coupling conserves the parity of n + m.
std::vector<double> fock_spectrum(const HopfieldParameters& p, std::size_t cutoff);

struct LadderFit {
  double ground_energy = 0.0;
  double omega_minus = 0.0;
  double omega_plus = 0.0;
  double residual = 0.0;  // max deviation of the lowest levels from E0 + n W- + m W+, relative to W+
  bool degenerate = false;
  bool ambiguous = false;
  bool found = false;
};

/// Reads Omega_- and Omega_+ off the ladder E0 + n Omega_- + m Omega_+.
/// `levels` must be sorted ascending. `rel_tol` decides a degenerate first gap;
/// levels up to `match_window` * Omega_- above n Omega_- count as the pure
/// Omega_- ladder, and Omega_+ that close to a multiple is flagged ambiguous.
LadderFit identify_ladder(const std::vector<double>& levels, double rel_tol = 1e-9, std::size_t fit_levels = 6,
                          double match_window = 1e-3);

struct OracleReport {
  double omega_plus = 0.0;
  double omega_minus = 0.0;
  double ground_energy = 0.0;
  double analytic_omega_plus = 0.0;
  double analytic_omega_minus = 0.0;
  double analytic_e_vac = 0.0;
  double deviation_plus = 0.0;   // relative
  double deviation_minus = 0.0;  // relative
  double e0_offset = 0.0;        // E0 - (Omega_+ + Omega_-)/2, analytic frequencies
  double ladder_residual = 0.0;
  std::size_t cutoff = 0;

  // Convergence run at cutoff * convergence_factor. Without it (factor 1)
  // `converged` simply mirrors `within_tolerance`.
  std::size_t check_cutoff = 0;
  double check_omega_plus = 0.0;
  double check_omega_minus = 0.0;
  double check_deviation = 0.0;

  bool converged = false;
  bool degenerate = false;
  bool ambiguous = false;
  bool within_tolerance = false;

  double max_deviation() const { return deviation_plus > deviation_minus ? deviation_plus : deviation_minus; }
};

OracleReport oracle_check(const HopfieldParameters& p, const FockConfig& config);
OracleReport oracle_check(const DerivedCouplings& c, const FockConfig& config);

}  // namespace chiralpol
