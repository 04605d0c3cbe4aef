#pragma once

#include <cstdint>
#include <vector>

#include "chiralpol/emitter.hpp"
#include "chiralpol/fields.hpp"
#include "chiralpol/model.hpp"
#include "chiralpol/scan_table.hpp"

namespace chiralpol {

struct TCSpectrum {
  double polariton_upper = 0.0;
  double polariton_lower = 0.0;
  double dark_energy = 0.0;
  std::uint64_t dark_count = 0;
  double effective_coupling = 0.0;  // sqrt(N) g- (1 + xi- lambda)
};

/// Single-excitation chiral Tavis-Cummings spectrum: the bright 2x2 block
/// [[w_m, G], [G, w-_k]] plus N - 1 dark states at the bare w_m.
TCSpectrum single_excitation_spectrum(const DerivedCouplings& c, double omega_m);

/// Same for an explicitly given collective coupling G and photon frequency.
TCSpectrum single_excitation_spectrum(double omega_photon, double omega_m, double collective_coupling,
                                      std::uint64_t n_emitters);

/// All N + 1 single-excitation eigenvalues in ascending order.
std::vector<double> single_excitation_eigenvalues(const TCSpectrum& s);

/// k_par sweep of the oblique mode family with k_z held fixed. Each row is one
/// momentum-matched sector; quadrupole and self-interaction terms are dropped.
/// Columns: k_par, theta_inc, omega_photon, coupling, polariton_upper,
/// polariton_lower, dark_energy, dark_count.
ScanTable dispersion_scan(const Emitter& e, const CavityMode& mode, std::uint64_t n_emitters,
                          const std::vector<double>& k_par_list);

}  // namespace chiralpol
