#pragma once

#include <cstdint>

#include "chiralpol/emitter.hpp"
#include "chiralpol/fields.hpp"

namespace chiralpol {

/// The renormalized quantities consumed by the analytic solvers.
struct DerivedCouplings {
  double omega_k_bar = 0.0;    // photon frequency dressed by self-magnetization
  double omega_m_tilde = 0.0;  // bright matter frequency dressed by self-polarization
  double g_tilde = 0.0;        // Hopfield coupling per emitter
  double xi_tilde = 0.0;       // Hopfield chirality factor
  double g_bar = 0.0;          // Tavis-Cummings coupling per emitter
  double xi_bar = 0.0;         // Tavis-Cummings chirality factor
  std::uint64_t n_emitters = 1;
  Handedness lambda = Handedness::left;
  // (mu + Q).eps vanished: g_tilde = g_bar = 0 and xi_tilde = xi_bar = 0.
  bool decoupled = false;

  double collective_coupling() const;  // sqrt(N) g_tilde
  double chirality() const;            // xi_tilde lambda
};

/// Dipole plus quadrupole projection (mu + Q).eps = mu.eps + Q_ab d_a eps_b.
double effective_projection(const Emitter& e, const CavityMode& mode);

/// w-_k = sqrt(w_k^2 + 2 N eta^2 k_z^2 eps.chi.eps). Throws InstabilityError on
/// a negative radicand (magnetic instability).
double dressed_photon_frequency(const Mat3& chi_m, const CavityMode& mode, std::uint64_t n_emitters);

/// Bright-mode matter frequency with collective self-polarization,
/// w~_m^2 = w_m^2 + N 2 w_m eta^2 (eps.mu)^2.
double dressed_matter_frequency(const Emitter& e, const CavityMode& mode, std::uint64_t n_emitters);

/// Requires a vertical mode (theta_inc == 0) and identical emitters.
DerivedCouplings derive_couplings(const Emitter& e, const CavityMode& mode, std::uint64_t n_emitters);

/// Variant where the self-polarization is local to each emitter (no factor N
/// in the matter dressing). Everything else as derive_couplings.
DerivedCouplings derive_couplings_local_selfpol(const Emitter& e, const CavityMode& mode, std::uint64_t n_emitters);

}  // namespace chiralpol
